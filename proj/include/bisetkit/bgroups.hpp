#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bisetkit/group.hpp"
#include "bisetkit/homomorphisms.hpp"
#include "bisetkit/lattice.hpp"
#include "bisetkit/rational.hpp"

namespace bisetkit {

/// A group all of whose m-numbers at nontrivial normal subgroups vanish.
inline bool is_b_group(const Group& g) {
    const SubgroupLattice& lat = lattice_of(g);
    for (int i = 1; i < lat.size(); ++i)  // index 0 is the trivial subgroup
        if (lat.is_normal(i) && !lat.m_of_normal(i).is_zero()) return false;
    return true;
}

/// Largest quotient of g that is itself a B-group (unique up to isomorphism).
/// Scans quotients G/N over normal N with m_{G,N} != 0, from largest quotient
/// down; equally-sized candidates must agree up to isomorphism.
inline Group beta(const Group& g) {
    const SubgroupLattice& lat = lattice_of(g);
    Group best;
    for (int i = 0; i < lat.size(); ++i) {
        if (!lat.is_normal(i) || lat.m_of_normal(i).is_zero()) continue;
        const int qorder = g.order() / lat.at(i).order();
        if (best.valid() && qorder < best.order()) break;  // strictly smaller from here on
        Group q = quotient(g, lat.at(i), "beta(" + g.name() + ")").group;
        if (!is_b_group(q)) continue;
        if (!best.valid())
            best = q;
        else if (!isomorphic(q, best))
            throw error("beta: maximal B-group quotients are not isomorphic");
    }
    if (!best.valid()) throw error("beta: no B-group quotient found");
    return best;
}

inline Int int_pow(int base, int exp) {
    Int out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

/// Closed form for the m-number of an elementary abelian group of rank n at a
/// subgroup of rank k: product over i in [2, k+1] of (1 - p^(n-i)).  Exact for
/// every rank including n = 1 (empty product = 1, single factor 1 - 1/p).
inline BRational m_elementary_closed(int p, int n, int k) {
    BRational out(1);
    for (int i = 2; i <= k + 1; ++i) {
        int e = n - i;
        BRational pw = e >= 0 ? BRational(int_pow(p, e)) : BRational(Int(1), int_pow(p, -e));
        out = out * (BRational(1) - pw);
    }
    return out;
}

namespace detail {

inline int elementary_rank(const Group& g, const ElemSet& s, int p) {
    int n = s.count();
    int r = 0;
    while (n % p == 0) {
        n /= p;
        ++r;
    }
    if (n != 1) throw precondition_error("rank: subgroup order is not a power of p");
    (void)g;
    return r;
}

}  // namespace detail

/// Number of subgroups of P complementing both Q and R (Y meets each factor
/// trivially and covers P with either), by the closed product formula.
/// Preconditions: P a p-group; Q, R normal of equal order meeting the
/// non-generator subgroup trivially.
inline Int count_common_complements(const Group& p_grp, const Subgroup& q, const Subgroup& r) {
    if (!q.parent.same_instance(p_grp) || !r.parent.same_instance(p_grp))
        throw precondition_error("count_common_complements: subgroup of a different instance");
    if (p_grp.order() == 1) return 1;
    const int p = prime_power_base(p_grp.order());
    if (p == 0) throw precondition_error("count_common_complements: P must be a p-group");
    const ElemSet full = ElemSet::full(p_grp.order());
    if (!p_grp.normal_under(q.members, full) || !p_grp.normal_under(r.members, full))
        throw precondition_error("count_common_complements: Q and R must be normal");
    if (q.order() != r.order())
        throw precondition_error("count_common_complements: |Q| and |R| must agree");
    const ElemSet phi = frattini_set_pgroup(p_grp, p);
    if ((q.members & phi).count() != 1 || (r.members & phi).count() != 1)
        throw precondition_error(
            "count_common_complements: Q and R must meet the Frattini subgroup trivially");

    const int m = detail::elementary_rank(p_grp, q.members, p);
    const ElemSet r_phi = p_grp.set_product(r.members, phi);  // a subgroup: R is normal
    const int s = m - detail::elementary_rank(p_grp, q.members & r_phi, p);

    int gamma = 0;
    QuotientResult by_r = quotient(p_grp, r);
    if (by_r.group.order() > 1) {
        ElemSet qphi = frattini_set_pgroup(by_r.group, p);
        gamma = detail::elementary_rank(by_r.group, ElemSet::full(by_r.group.order()), p) -
                detail::elementary_rank(by_r.group, qphi, p);
    }

    const long long tail_exp =
        static_cast<long long>(s) * (s - 1) / 2 + static_cast<long long>(s) * (m - s) +
        static_cast<long long>(m) * (gamma - s);
    if (tail_exp < 0) throw error("count_common_complements: negative exponent");
    Int out = 1;
    for (int i = 1; i <= s; ++i) out *= int_pow(p, i) - 1;
    for (long long i = 0; i < tail_exp; ++i) out *= p;
    return out;
}

/// Split of P/(M ∩ Φ(P)) as (elementary abelian E) x (P/M) for a normal
/// subgroup M of a p-group P, with the isomorphism verified.
struct ElementarySplit {
    Group elementary;  // M / (M ∩ Φ(P))
    Group complement;  // P / M
    Group whole;       // P / (M ∩ Φ(P))
};

inline ElementarySplit elementary_split(const Group& p_grp, const Subgroup& m) {
    if (!m.parent.same_instance(p_grp))
        throw precondition_error("elementary_split: subgroup of a different instance");
    const int p = p_grp.order() == 1 ? 2 : prime_power_base(p_grp.order());
    if (p == 0) throw precondition_error("elementary_split: P must be a p-group");
    const ElemSet full = ElemSet::full(p_grp.order());
    if (!p_grp.normal_under(m.members, full))
        throw precondition_error("elementary_split: M must be normal");

    const ElemSet phi = frattini_set_pgroup(p_grp, p);
    const ElemSet k = m.members & phi;
    ElementarySplit out;
    out.elementary = section_quotient(p_grp, m.members, k, "E").group;
    out.complement = quotient(p_grp, m, p_grp.name() + "/M").group;
    out.whole = section_quotient(p_grp, full, k, p_grp.name() + "/(M^Phi)").group;

    // E is elementary abelian and the split is a genuine direct factorization
    if (!out.elementary.is_abelian()) throw error("elementary_split: E is not abelian");
    for (int x = 1; x < out.elementary.order(); ++x)
        if (out.elementary.element_order(x) != p)
            throw error("elementary_split: E has an element of order != p");
    if (!isomorphic(out.whole, direct_product(out.elementary, out.complement)))
        throw error("elementary_split: direct factorization failed verification");
    return out;
}

}  // namespace bisetkit
