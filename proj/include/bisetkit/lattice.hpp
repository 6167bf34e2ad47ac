#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "bisetkit/group.hpp"
#include "bisetkit/rational.hpp"
#include "bisetkit/subgroups.hpp"

namespace bisetkit {

/// The full subgroup lattice of a group: canonical subgroup order, inclusion,
/// conjugacy classes, normalizers, the Möbius table of the subgroup poset,
/// and the m-numbers of the normal subgroups.  Immutable once built; obtain a
/// shared instance through lattice_of().
class SubgroupLattice {
public:
    explicit SubgroupLattice(Group g, int cap = default_subgroup_cap) : g_(std::move(g)) {
        const int n = g_.order();
        std::vector<ElemSet> sets = subgroup_sets_within(g_, ElemSet::full(n), cap);
        nsubs_ = static_cast<int>(sets.size());
        subs_.reserve(nsubs_);
        for (auto& s : sets) subs_.push_back(Subgroup{g_, s});

        leq_.assign(nsubs_, std::vector<char>(nsubs_, 0));
        for (int i = 0; i < nsubs_; ++i)
            for (int j = 0; j < nsubs_; ++j)
                leq_[i][j] = subs_[i].members.subset_of(subs_[j].members);

        // Möbius of the subgroup poset.  Subgroups are size-sorted, so every
        // proper subgroup has a smaller index and the recursion can run in
        // index order: mu(i,j) = -sum_{i <= z < j} mu(i,z).
        mu_.assign(nsubs_, std::vector<long long>(nsubs_, 0));
        for (int i = 0; i < nsubs_; ++i)
            for (int j = 0; j < nsubs_; ++j) {
                if (!leq_[i][j]) continue;
                if (i == j) {
                    mu_[i][j] = 1;
                    continue;
                }
                long long acc = 0;
                for (int z = 0; z < j; ++z)
                    if (leq_[i][z] && leq_[z][j]) acc += mu_[i][z];
                mu_[i][j] = -acc;
            }

        // conjugation action on subgroup indices
        conj_.assign(nsubs_, std::vector<int>(n, 0));
        for (int i = 0; i < nsubs_; ++i)
            for (int gx = 0; gx < n; ++gx) {
                int j = find(g_.conj_set(gx, subs_[i].members));
                if (j < 0) throw error("lattice: conjugate of a subgroup is missing");
                conj_[i][gx] = j;
            }

        class_of_.assign(nsubs_, -1);
        for (int i = 0; i < nsubs_; ++i) {
            if (class_of_[i] >= 0) continue;
            int c = static_cast<int>(classes_.size());
            std::vector<int> orbit;
            std::vector<int> stack{i};
            class_of_[i] = c;
            orbit.push_back(i);
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int gx = 0; gx < n; ++gx) {
                    int y = conj_[x][gx];
                    if (class_of_[y] < 0) {
                        class_of_[y] = c;
                        orbit.push_back(y);
                        stack.push_back(y);
                    }
                }
            }
            std::sort(orbit.begin(), orbit.end());
            classes_.push_back(std::move(orbit));
        }

        normalizer_.reserve(nsubs_);
        cyclic_.reserve(nsubs_);
        for (int i = 0; i < nsubs_; ++i) {
            ElemSet nm(n);
            for (int gx = 0; gx < n; ++gx)
                if (conj_[i][gx] == i) nm.set(gx);
            normalizer_.push_back(nm);
            cyclic_.push_back(set_is_cyclic(g_, subs_[i].members));
        }

        // m_{G,N} for every normal N: (1/|G|) sum over X with XN = G of |X| mu(X,G)
        m_.assign(nsubs_, BRational(0));
        const int top_i = nsubs_ - 1;
        for (int ni = 0; ni < nsubs_; ++ni) {
            if (!is_normal(ni)) continue;
            const long long nord = subs_[ni].order();
            Int acc = 0;
            for (int xi = 0; xi < nsubs_; ++xi) {
                if (mu_[xi][top_i] == 0 && leq_[xi][top_i]) continue;
                long long xord = subs_[xi].order();
                long long meet = (subs_[xi].members & subs_[ni].members).count();
                if (xord * nord != static_cast<long long>(n) * meet) continue;  // XN != G
                acc += Int(xord) * mu_[xi][top_i];
            }
            m_[ni] = BRational(acc, Int(n));
        }
    }

    const Group& group() const { return g_; }
    int size() const { return nsubs_; }
    int bottom() const { return 0; }
    int top() const { return nsubs_ - 1; }
    const Subgroup& at(int i) const { return subs_[i]; }

    int find(const ElemSet& s) const {
        const int sz = s.count();
        auto cmp = [](const Subgroup& a, std::pair<int, const ElemSet*> key) {
            if (a.order() != key.first) return a.order() < key.first;
            return a.members.set_less(*key.second);
        };
        auto it = std::lower_bound(subs_.begin(), subs_.end(), std::make_pair(sz, &s), cmp);
        if (it != subs_.end() && it->members == s) return static_cast<int>(it - subs_.begin());
        return -1;
    }

    int index_of(const Subgroup& s) const {
        if (!s.parent.same_instance(g_))
            throw precondition_error("lattice: subgroup from a different group instance");
        int i = find(s.members);
        if (i < 0) throw error("lattice: subgroup not found");
        return i;
    }

    bool leq(int i, int j) const { return leq_[i][j]; }

    long long mobius(int i, int j) const {
        if (!leq_[i][j]) throw precondition_error("mobius: arguments are not nested");
        return mu_[i][j];
    }

    /// Möbius function of the poset of normal subgroups of the whole group.
    long long mobius_normal(int a, int b) const {
        if (!is_normal(a) || !is_normal(b))
            throw precondition_error("mobius_normal: arguments must be normal");
        if (!leq_[a][b]) throw precondition_error("mobius_normal: arguments are not nested");
        std::map<int, long long> memo;
        return mobius_normal_rec(a, b, memo);
    }

    int class_count() const { return static_cast<int>(classes_.size()); }
    int class_of(int i) const { return class_of_[i]; }
    const std::vector<std::vector<int>>& classes() const { return classes_; }
    int class_rep(int c) const { return classes_[c][0]; }
    bool is_normal(int i) const { return classes_[class_of_[i]].size() == 1; }
    const ElemSet& normalizer(int i) const { return normalizer_[i]; }
    bool is_cyclic_sub(int i) const { return cyclic_[i]; }
    int conjugate_index(int i, int gx) const { return conj_[i][gx]; }

    const BRational& m_of_normal(int i) const {
        if (!is_normal(i)) throw precondition_error("m-number: subgroup is not normal");
        return m_[i];
    }

private:
    long long mobius_normal_rec(int a, int b, std::map<int, long long>& memo) const {
        if (a == b) return 1;
        auto it = memo.find(b);
        if (it != memo.end()) return it->second;
        long long acc = 0;
        for (int z = 0; z < b; ++z)
            if (is_normal(z) && leq_[a][z] && leq_[z][b]) acc += mobius_normal_rec(a, z, memo);
        memo[b] = -acc;
        return -acc;
    }

    Group g_;
    int nsubs_ = 0;
    std::vector<Subgroup> subs_;
    std::vector<std::vector<char>> leq_;
    std::vector<std::vector<long long>> mu_;
    std::vector<std::vector<int>> conj_;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> classes_;
    std::vector<ElemSet> normalizer_;
    std::vector<char> cyclic_;
    std::vector<BRational> m_;
};

inline const SubgroupLattice& lattice_of(const Group& g) {
    auto hold = g.data().lattice_cache.get<SubgroupLattice>([&] { return SubgroupLattice(g); });
    return *hold;
}

// ---------------------------------------------------------------------------
// Spec-level wrappers
// ---------------------------------------------------------------------------

inline long long mobius(const Subgroup& x, const Subgroup& top) {
    if (!x.parent.same_instance(top.parent))
        throw precondition_error("mobius: subgroups of different group instances");
    const SubgroupLattice& lat = lattice_of(x.parent);
    return lat.mobius(lat.index_of(x), lat.index_of(top));
}

inline long long mobius_normal(const Subgroup& a, const Subgroup& b, const Group& k) {
    if (!a.parent.same_instance(k) || !b.parent.same_instance(k))
        throw precondition_error("mobius_normal: subgroups must live in the given group");
    const SubgroupLattice& lat = lattice_of(k);
    return lat.mobius_normal(lat.index_of(a), lat.index_of(b));
}

inline BRational m_number(const Group& g, const Subgroup& n) {
    if (!n.parent.same_instance(g))
        throw precondition_error("m_number: subgroup of a different group instance");
    const SubgroupLattice& lat = lattice_of(g);
    int i = lat.index_of(n);
    if (!lat.is_normal(i)) throw precondition_error("m_number: N must be normal");
    return lat.m_of_normal(i);
}

/// Class representatives of the p-elementary subgroups, in lattice class order.
inline std::vector<int> p_elementary_class_reps(const SubgroupLattice& lat, int p) {
    std::vector<int> reps;
    for (int c = 0; c < lat.class_count(); ++c) {
        int r = lat.class_rep(c);
        if (is_p_elementary_set(lat.group(), lat.at(r).members, p)) reps.push_back(r);
    }
    return reps;
}

/// One representative per conjugacy class of sections (T, S) with S normal in
/// T and pred(T, S) true.  pred must be conjugation-invariant.  Deterministic
/// order: T runs over lattice class representatives, S over the minimal-index
/// representative of each N(T)-orbit.
template <typename Pred>
std::vector<Section> sections_up_to_conjugacy(const Group& g, Pred&& pred) {
    const SubgroupLattice& lat = lattice_of(g);
    std::vector<Section> out;
    for (int c = 0; c < lat.class_count(); ++c) {
        const int t = lat.class_rep(c);
        const std::vector<int> t_members = lat.at(t).members.members();
        // candidates: subgroups of T fixed by conjugation by every member of T
        std::vector<int> cands;
        for (int s = 0; s < lat.size(); ++s) {
            if (!lat.leq(s, t)) continue;
            bool normal_in_t = true;
            for (int gx : t_members)
                if (lat.conjugate_index(s, gx) != s) {
                    normal_in_t = false;
                    break;
                }
            if (normal_in_t) cands.push_back(s);
        }
        // N(T)-orbits on the candidates; minimal index is the representative
        const std::vector<int> nt = lat.normalizer(t).members();
        std::vector<char> seen(lat.size(), 0);
        for (int s : cands) {
            if (seen[s]) continue;
            std::vector<int> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int gx : nt) {
                    int y = lat.conjugate_index(x, gx);
                    if (!seen[y]) {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
                }
            }
            Section sec{lat.at(t), lat.at(s)};
            if (pred(sec.top, sec.bottom)) out.push_back(std::move(sec));
        }
    }
    return out;
}

}  // namespace bisetkit
