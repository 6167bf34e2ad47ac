#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bisetkit/errors.hpp"
#include "bisetkit/group.hpp"
#include "bisetkit/homomorphisms.hpp"
#include "bisetkit/lattice.hpp"

// The counting route to the dimension of a simple evaluation.  The dimension
// splits on the shape of the target group H:
//   - H trivial: one basis class per conjugacy class of cyclic subgroups;
//   - H elementary abelian of rank two: one class per conjugacy class of
//     non-cyclic p-elementary subgroups;
//   - any other H: one class per conjugacy class of sections (T, S) with
//     T p-elementary and T/S isomorphic to H.
// Each counted class is kept as an explicit witness so callers can display
// or re-verify the basis.

namespace bisetkit {

enum class DimCase { trivial_h, klein_h, generic_h };

inline const char* to_string(DimCase c) {
    switch (c) {
        case DimCase::trivial_h: return "trivial-H";
        case DimCase::klein_h: return "klein-H";
        case DimCase::generic_h: return "generic-H";
    }
    return "?";
}

/// A counted basis class: a subgroup representative in the first two cases, a
/// section representative in the generic case.
using DimWitness = std::variant<Subgroup, Section>;

struct DimReport {
    std::string group;
    std::string h_shape;
    int p = 0;
    long long dim = 0;
    DimCase case_tag = DimCase::generic_h;
    std::vector<DimWitness> witnesses;
};

/// One representative per conjugacy class of p-elementary subgroups of g
/// (direct products of a cyclic group of order prime to p with a p-group).
inline std::vector<Subgroup> p_elementary_classes(const Group& g, int p) {
    if (!is_prime(p)) throw precondition_error("p_elementary_classes: p must be prime");
    const SubgroupLattice& lat = lattice_of(g);
    std::vector<Subgroup> out;
    for (int i : p_elementary_class_reps(lat, p)) out.push_back(lat.at(i));
    return out;
}

/// Conjugacy classes of sections (T, S) with T p-elementary and T/S
/// isomorphic to h, for any shape of h.  For the trivial and rank-two
/// elementary shapes this is deliberately NOT the dimension — the raw section
/// count over-counts there, which is exactly why dim_simple_count_route
/// dispatches instead of always using this.  Kept public so tests can pin
/// that down.
inline std::vector<Section> generic_sections(const Group& g, const Group& h, int p) {
    if (!is_prime(p)) throw precondition_error("generic_sections: p must be prime");
    if (h.order() > 1 && !is_power_of(h.order(), p))
        throw precondition_error("generic_sections: H must be a p-group for the given prime");
    return sections_up_to_conjugacy(g, [&](const Subgroup& t, const Subgroup& s) {
        if (!is_p_elementary_set(g, t.members, p)) return false;
        if (static_cast<long long>(s.order()) * h.order() != t.order()) return false;
        return isomorphic(section_quotient(g, t.members, s.members).group, h);
    });
}

inline DimReport dim_simple_count_route(const Group& g, const Group& h, int p) {
    if (!is_prime(p)) throw precondition_error("dim_simple_count_route: p must be prime");
    if (h.order() > 1 && !is_power_of(h.order(), p))
        throw precondition_error(
            "dim_simple_count_route: H must be a p-group for the given prime");
    DimReport rep;
    rep.group = g.name();
    rep.h_shape = h.name();
    rep.p = p;
    const SubgroupLattice& lat = lattice_of(g);
    if (h.order() == 1) {
        rep.case_tag = DimCase::trivial_h;
        for (int c = 0; c < lat.class_count(); ++c) {
            const int i = lat.class_rep(c);
            if (lat.is_cyclic_sub(i)) rep.witnesses.emplace_back(lat.at(i));
        }
    } else if (h.order() == p * p && !set_is_cyclic(h, ElemSet::full(h.order()))) {
        // Groups of order p^2 are abelian, so non-cyclic here pins the
        // rank-two elementary shape.
        rep.case_tag = DimCase::klein_h;
        for (int i : p_elementary_class_reps(lat, p))
            if (!lat.is_cyclic_sub(i)) rep.witnesses.emplace_back(lat.at(i));
    } else {
        rep.case_tag = DimCase::generic_h;
        for (Section& s : generic_sections(g, h, p)) rep.witnesses.emplace_back(std::move(s));
    }
    rep.dim = static_cast<long long>(rep.witnesses.size());
    return rep;
}

}  // namespace bisetkit
