#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "bisetkit/errors.hpp"
#include "bisetkit/group.hpp"
#include "bisetkit/group_spec.hpp"
#include "bisetkit/homomorphisms.hpp"
#include "bisetkit/lattice.hpp"
#include "bisetkit/matrix.hpp"
#include "bisetkit/rational.hpp"

// The rank route to the dimension of a simple evaluation.  For a p-group Q
// and a target shape H, the admissible surjection kernels
//   { N normal in Q | Q/N iso H, N meets the Frattini subgroup trivially }
// index a symmetric bilinear form; the dimension contributed by one
// (p-elementary subgroup K, splitting kernel R) pair is the rank of that form
// after summing over the orbits of the induced conjugation action, and the
// total dimension is the sum over conjugacy classes of such pairs.

namespace bisetkit {

namespace detail {

/// Both arguments must be p-groups for one common prime (trivial groups are
/// p-groups for every p, so they never conflict).
inline void require_same_prime_p_groups(const Group& a, const Group& b, const std::string& who) {
    const int pa = prime_power_base(a.order());
    const int pb = prime_power_base(b.order());
    if (a.order() > 1 && pa == 0)
        throw precondition_error(who + ": " + a.name() + " is not a p-group");
    if (b.order() > 1 && pb == 0)
        throw precondition_error(who + ": " + b.name() + " is not a p-group");
    if (pa != 0 && pb != 0 && pa != pb)
        throw precondition_error(who + ": arguments are p-groups for different primes");
}

inline Group elementary_abelian_group(int p, int k) {
    Group g = make_cyclic(p, "C" + std::to_string(p));
    for (int i = 1; i < k; ++i) g = direct_product(g, make_cyclic(p, "C" + std::to_string(p)));
    return g;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Kernel sets
// ---------------------------------------------------------------------------

/// The admissible kernels of surjections Q ->> H, listed in ascending
/// subgroup-lattice order of Q.
struct KernelSet {
    Group ambient;                  // Q
    Group target_shape;             // H
    std::vector<int> indices;       // positions in lattice_of(ambient)
    std::vector<Subgroup> kernels;  // the same subgroups, in the same order

    int size() const { return static_cast<int>(kernels.size()); }

    int position_of(const ElemSet& members) const {
        for (std::size_t i = 0; i < kernels.size(); ++i)
            if (kernels[i].members == members) return static_cast<int>(i);
        return -1;
    }
};

inline KernelSet kernel_set(const Group& q, const Group& h) {
    detail::require_same_prime_p_groups(q, h, "kernel_set");
    KernelSet out{q, h, {}, {}};
    if (q.order() % h.order() != 0) return out;
    const SubgroupLattice& lat = lattice_of(q);
    const int p = prime_power_base(q.order());
    const ElemSet phi = q.order() == 1 ? ElemSet::full(1) : frattini_set_pgroup(q, p);
    const long long want = q.order() / h.order();
    for (int i = 0; i < lat.size(); ++i) {
        const Subgroup& n = lat.at(i);
        if (n.order() != want) continue;
        if (!lat.is_normal(i)) continue;
        if ((n.members & phi).count() != 1) continue;
        if (!isomorphic(quotient(q, n).group, h)) continue;
        out.indices.push_back(i);
        out.kernels.push_back(n);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Common joint complements
// ---------------------------------------------------------------------------

/// All subgroups Y of K with YM = YN = K and Y meet M = Y meet N = M meet N,
/// for normal subgroups M, N of K of equal order.
inline std::vector<Subgroup> kbar(const Group& k, const Subgroup& m, const Subgroup& n) {
    if (!m.parent.same_instance(k) || !n.parent.same_instance(k))
        throw precondition_error("kbar: subgroup belongs to a different group instance");
    const SubgroupLattice& lat = lattice_of(k);
    const int mi = lat.index_of(m);
    const int ni = lat.index_of(n);
    if (!lat.is_normal(mi) || !lat.is_normal(ni))
        throw precondition_error("kbar: arguments must be normal subgroups");
    if (m.order() != n.order()) throw precondition_error("kbar: arguments must have equal order");
    const ElemSet inter = m.members & n.members;
    // Because M is normal, YM is a subgroup and YM = K is the size condition
    // |Y||M| = |K||Y meet M|; with Y meet M pinned to M meet N that reads:
    const long long need = static_cast<long long>(k.order()) * inter.count();
    std::vector<Subgroup> out;
    for (int i = 0; i < lat.size(); ++i) {
        const Subgroup& y = lat.at(i);
        if (static_cast<long long>(y.order()) * m.order() != need) continue;
        if ((y.members & m.members) != inter) continue;
        if ((y.members & n.members) != inter) continue;
        out.push_back(y);
    }
    return out;
}

namespace detail {

/// Form entry for two kernels given by lattice position, with no membership
/// validation.  mi and ni must be normal subgroups of equal order.
inline BRational n_form_core(const SubgroupLattice& lat, int mi, int ni) {
    const Subgroup& m = lat.at(mi);
    const Subgroup& n = lat.at(ni);
    const ElemSet inter = m.members & n.members;
    const long long need = static_cast<long long>(lat.group().order()) * inter.count();
    long long joint = 0;
    for (int i = 0; i < lat.size(); ++i) {
        const Subgroup& y = lat.at(i);
        if (static_cast<long long>(y.order()) * m.order() != need) continue;
        if ((y.members & m.members) != inter) continue;
        if ((y.members & n.members) != inter) continue;
        ++joint;
    }
    if (joint == 0) return BRational(0);
    const int ii = lat.find(inter);
    const BRational& mnum = lat.m_of_normal(ii);
    if (mnum.is_zero()) return BRational(0);
    const long long mu = lat.mobius(ii, mi);
    const long long index = m.order() / inter.count();
    return mnum * BRational(Int(mu) * Int(joint), Int(index));
}

}  // namespace detail

/// One entry of the bilinear form on kernels:
///   <M|N> = m_{Q, M meet N} * mu(M meet N, M) / |M : M meet N| * #kbar(Q,M,N).
/// The plain subgroup-poset Moebius function is the right one here because
/// M/(M meet N) is central in Q/(M meet N).
inline BRational n_form(const Group& q, const Group& h, const Subgroup& m, const Subgroup& n) {
    if (!m.parent.same_instance(q) || !n.parent.same_instance(q))
        throw precondition_error("n_form: subgroup belongs to a different group instance");
    const KernelSet ks = kernel_set(q, h);
    const int pm = ks.position_of(m.members);
    const int pn = ks.position_of(n.members);
    if (pm < 0 || pn < 0) throw precondition_error("n_form: argument is not in the kernel set");
    return detail::n_form_core(lattice_of(q), ks.indices[pm], ks.indices[pn]);
}

// ---------------------------------------------------------------------------
// Gram matrices and orbit-fixed rank
// ---------------------------------------------------------------------------

/// The full matrix of the form over a kernel set, together with a recorded
/// symmetry action (permutations of kernel positions; they generate the
/// acting group's image, so orbit computations may use them directly).
struct GramForm {
    KernelSet index;
    Matrix<BRational> entries;
    std::vector<std::vector<int>> action;
};

inline GramForm gram(const Group& q, const Group& h, std::vector<std::vector<int>> action = {}) {
    KernelSet ks = kernel_set(q, h);
    const SubgroupLattice& lat = lattice_of(q);
    const std::size_t n = ks.kernels.size();
    Matrix<BRational> entries(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            entries(i, j) = detail::n_form_core(lat, ks.indices[i], ks.indices[j]);
    for (const std::vector<int>& perm : action) {
        if (perm.size() != n) throw precondition_error("gram: action entry has the wrong size");
        std::vector<char> seen(n, 0);
        for (int v : perm) {
            if (v < 0 || v >= static_cast<int>(n) || seen[v])
                throw precondition_error("gram: action entry is not a permutation");
            seen[v] = 1;
        }
    }
    return GramForm{std::move(ks), std::move(entries), std::move(action)};
}

/// Push a group automorphism of the ambient group (given elementwise) down to
/// the permutation it induces on the kernel positions.
inline std::vector<int> kernel_action_of_automorphism(const KernelSet& ks,
                                                      const std::vector<elem_t>& phi) {
    const Group& q = ks.ambient;
    if (static_cast<int>(phi.size()) != q.order())
        throw precondition_error("kernel_action_of_automorphism: map has the wrong size");
    std::vector<int> out(ks.kernels.size());
    for (std::size_t i = 0; i < ks.kernels.size(); ++i) {
        ElemSet image(q.order());
        for (int x = ks.kernels[i].members.first(); x >= 0; x = ks.kernels[i].members.next(x))
            image.set(phi[x]);
        const int pos = ks.position_of(image);
        if (pos < 0)
            throw precondition_error(
                "kernel_action_of_automorphism: image is not an admissible kernel");
        out[i] = pos;
    }
    return out;
}

/// Dimension of the fixed subspace, under the recorded action, of the span of
/// the kernels modulo the radical of the form.  Averaging over the acting
/// group is an exact projector in characteristic zero, so this equals the
/// rank of the orbit-summed Gram matrix.
inline int fixed_rank(const GramForm& form) {
    const std::size_t n = form.entries.rows();
    for (const std::vector<int>& perm : form.action)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (form.entries(perm[i], perm[j]) != form.entries(i, j))
                    throw precondition_error("fixed_rank: action does not preserve the form");
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&root](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (const std::vector<int>& perm : form.action)
        for (std::size_t i = 0; i < n; ++i) {
            const int a = find(static_cast<int>(i));
            const int b = find(perm[i]);
            if (a != b) root[a] = b;
        }
    std::vector<int> orbit_of(n, -1);
    std::vector<std::vector<int>> orbits;
    for (std::size_t i = 0; i < n; ++i) {
        const int r = find(static_cast<int>(i));
        if (orbit_of[r] < 0) {
            orbit_of[r] = static_cast<int>(orbits.size());
            orbits.emplace_back();
        }
        orbits[orbit_of[r]].push_back(static_cast<int>(i));
    }
    Matrix<BRational> summed(orbits.size(), orbits.size());
    for (std::size_t a = 0; a < orbits.size(); ++a)
        for (std::size_t b = 0; b < orbits.size(); ++b) {
            BRational total(0);
            for (int i : orbits[a])
                for (int j : orbits[b]) total += form.entries(i, j);
            summed(a, b) = total;
        }
    return static_cast<int>(rank_exact(std::move(summed)));
}

// ---------------------------------------------------------------------------
// Splitting kernels and (K, R) pairs
// ---------------------------------------------------------------------------

/// All normal subgroups R of a p-group P, contained in the Frattini subgroup,
/// such that P/R is isomorphic to (elementary abelian) x H.  Ascending
/// lattice order.
inline std::vector<Subgroup> eh_set(const Group& p_grp, const Group& h) {
    detail::require_same_prime_p_groups(p_grp, h, "eh_set");
    std::vector<Subgroup> out;
    if (p_grp.order() % h.order() != 0) return out;
    const SubgroupLattice& lat = lattice_of(p_grp);
    const int p = prime_power_base(p_grp.order());
    const ElemSet phi = p_grp.order() == 1 ? ElemSet::full(1) : frattini_set_pgroup(p_grp, p);
    for (int i = 0; i < lat.size(); ++i) {
        const Subgroup& r = lat.at(i);
        if (!r.members.subset_of(phi)) continue;
        if (!lat.is_normal(i)) continue;
        const long long qord = p_grp.order() / r.order();
        if (qord % h.order() != 0) continue;
        long long rest = qord / h.order();
        int k = 0;
        while (p > 1 && rest % p == 0) {
            rest /= p;
            ++k;
        }
        if (rest != 1) continue;
        const Group model =
            k == 0 ? h : direct_product(detail::elementary_abelian_group(p, k), h);
        if (!isomorphic(quotient(p_grp, r).group, model)) continue;
        out.push_back(r);
    }
    return out;
}

/// One G-conjugacy class of pairs (p-elementary subgroup K, splitting kernel
/// R inside the p-part of K), with the element translations and the joint
/// normalizer needed to act on the kernel form of p_part/R.
struct PairKR {
    Subgroup k;                     // class representative in G
    Subgroup r;                     // R viewed inside G
    Group p_part;                   // the p-part of K as a standalone group
    Subgroup r_in_p_part;           // R inside p_part
    std::vector<elem_t> to_parent;  // p_part element -> G element
    std::vector<int> from_parent;   // G element -> p_part element, -1 outside
    ElemSet stabilizer;             // elements of G normalizing both K and R
};

inline std::vector<PairKR> pairs_kr(const Group& g, const Group& h, int p) {
    if (!is_prime(p)) throw precondition_error("pairs_kr: p must be prime");
    if (h.order() > 1 && !is_power_of(h.order(), p))
        throw precondition_error("pairs_kr: H must be a p-group for the given prime");
    const SubgroupLattice& lat = lattice_of(g);
    std::vector<PairKR> out;
    for (int c = 0; c < lat.class_count(); ++c) {
        const int ki = lat.class_rep(c);
        const Subgroup& ksub = lat.at(ki);
        if (!is_p_elementary_set(g, ksub.members, p)) continue;
        const SubgroupEmbedding kemb = from_subgroup(g, ksub.members);
        const SubgroupEmbedding pemb = from_subgroup(kemb.group, p_core(kemb.group, p).members);
        std::vector<elem_t> to_par(pemb.group.order());
        for (int x = 0; x < pemb.group.order(); ++x)
            to_par[x] = kemb.to_parent[pemb.to_parent[x]];
        std::vector<int> from_par(g.order(), -1);
        for (int x = 0; x < pemb.group.order(); ++x) from_par[to_par[x]] = x;
        const std::vector<Subgroup> ehs = eh_set(pemb.group, h);
        if (ehs.empty()) continue;
        const SubgroupLattice& plat = lattice_of(pemb.group);
        std::map<int, int> pos_of_index;
        for (std::size_t a = 0; a < ehs.size(); ++a)
            pos_of_index[plat.index_of(ehs[a])] = static_cast<int>(a);
        const ElemSet& ngk = lat.normalizer(ki);
        std::vector<char> used(ehs.size(), 0);
        for (std::size_t a = 0; a < ehs.size(); ++a) {
            if (used[a]) continue;
            // The normalizer of K permutes the splitting kernels (the p-part
            // is characteristic in K); running over all of its elements gives
            // the full orbit of ehs[a] and the stabilizer in one sweep.
            ElemSet stab(g.order());
            for (int gamma = ngk.first(); gamma >= 0; gamma = ngk.next(gamma)) {
                ElemSet image(pemb.group.order());
                for (int x = ehs[a].members.first(); x >= 0; x = ehs[a].members.next(x))
                    image.set(from_par[g.conj(gamma, to_par[x])]);
                const auto it = pos_of_index.find(plat.find(image));
                if (it == pos_of_index.end())
                    throw error("pairs_kr: conjugation left the splitting-kernel set");
                used[it->second] = 1;
                if (it->second == static_cast<int>(a)) stab.set(gamma);
            }
            ElemSet r_in_g(g.order());
            for (int x = ehs[a].members.first(); x >= 0; x = ehs[a].members.next(x))
                r_in_g.set(to_par[x]);
            out.push_back(PairKR{ksub, Subgroup{g, r_in_g}, pemb.group, ehs[a], to_par, from_par,
                                 stab});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// The dimension, by ranks
// ---------------------------------------------------------------------------

inline long long dim_simple_rank_route(const Group& g, const Group& h, int p) {
    long long total = 0;
    for (const PairKR& pair : pairs_kr(g, h, p)) {
        const QuotientResult qr = quotient(pair.p_part, pair.r_in_p_part);
        const KernelSet ks = kernel_set(qr.group, h);
        if (ks.kernels.empty()) continue;  // empty Gram, rank 0
        std::set<std::vector<int>> induced;
        for (int gamma = pair.stabilizer.first(); gamma >= 0;
             gamma = pair.stabilizer.next(gamma)) {
            std::vector<elem_t> phi(qr.group.order());
            for (int a = 0; a < qr.group.order(); ++a)
                phi[a] = static_cast<elem_t>(
                    qr.proj[pair.from_parent[g.conj(gamma, pair.to_parent[qr.reps[a]])]]);
            induced.insert(kernel_action_of_automorphism(ks, phi));
        }
        total += fixed_rank(
            gram(qr.group, h, std::vector<std::vector<int>>(induced.begin(), induced.end())));
    }
    return total;
}

}  // namespace bisetkit
