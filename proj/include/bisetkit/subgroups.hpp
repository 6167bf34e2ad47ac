#pragma once

#include <set>
#include <vector>

#include "bisetkit/group.hpp"

namespace bisetkit {

inline constexpr int default_subgroup_cap = 20000;

struct ElemSetLess {
    bool operator()(const ElemSet& a, const ElemSet& b) const { return a.set_less(b); }
};

/// All subgroups contained in `ambient` (which must itself be a subgroup),
/// built bottom-up: cyclic subgroups first, then closure under join with a
/// cyclic subgroup.  Every subgroup is a join of cyclic ones, so this is
/// exhaustive.  Output in canonical order: ascending size, then member order.
inline std::vector<ElemSet> subgroup_sets_within(const Group& g, const ElemSet& ambient,
                                                 int cap = default_subgroup_cap) {
    std::set<ElemSet, ElemSetLess> cyclics;
    for (int x = ambient.first(); x >= 0; x = ambient.next(x))
        cyclics.insert(g.closure(ElemSet::single(g.order(), x)));
    std::set<ElemSet, ElemSetLess> all(cyclics);
    std::vector<ElemSet> queue(all.begin(), all.end());
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        ElemSet s = queue[qi];
        for (const ElemSet& c : cyclics) {
            if (c.subset_of(s)) continue;
            ElemSet j = g.closure(s | c);
            if (all.insert(j).second) {
                if (static_cast<int>(all.size()) > cap)
                    throw resource_error("subgroup count exceeds cap for " + g.name());
                queue.push_back(j);
            }
        }
    }
    std::vector<ElemSet> out(all.begin(), all.end());
    std::stable_sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a.set_less(b);
    });
    return out;
}

inline std::vector<ElemSet> maximal_subgroup_sets_within(const Group& g, const ElemSet& ambient,
                                                         int cap = default_subgroup_cap) {
    std::vector<ElemSet> subs = subgroup_sets_within(g, ambient, cap);
    std::vector<ElemSet> maximal;
    for (const ElemSet& s : subs) {
        if (s == ambient) continue;
        bool is_max = true;
        for (const ElemSet& t : subs) {
            if (t == ambient || t == s) continue;
            if (s.subset_of(t)) { is_max = false; break; }
        }
        if (is_max) maximal.push_back(s);
    }
    return maximal;
}

/// Frattini subgroup: intersection of the maximal subgroups (the whole group
/// when there are none, i.e. for the trivial group).
inline ElemSet frattini_set_within(const Group& g, const ElemSet& ambient,
                                   int cap = default_subgroup_cap) {
    std::vector<ElemSet> maximal = maximal_subgroup_sets_within(g, ambient, cap);
    if (maximal.empty()) return ambient;
    ElemSet phi = maximal[0];
    for (std::size_t i = 1; i < maximal.size(); ++i) phi &= maximal[i];
    return phi;
}

inline Subgroup frattini(const Group& g) {
    return Subgroup{g, frattini_set_within(g, ElemSet::full(g.order()))};
}

inline Subgroup frattini(const Subgroup& s) {
    return Subgroup{s.parent, frattini_set_within(s.parent, s.members)};
}

}  // namespace bisetkit
