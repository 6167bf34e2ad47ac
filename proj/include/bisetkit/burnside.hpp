#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bisetkit/lattice.hpp"
#include "bisetkit/matrix.hpp"

namespace bisetkit {

// ---------------------------------------------------------------------------
// Table of marks
// ---------------------------------------------------------------------------

/// Table of marks of G.  Rows and columns are indexed by the subgroup
/// conjugacy classes in canonical lattice order; entry (K, X) is the number of
/// cosets of G/K fixed by X.  Lower triangular, diagonal |N_G(K) : K|.
///
/// X fixes gK exactly when X^g <= K, and the elements g conjugating X onto a
/// fixed conjugate X' form one coset of N_G(X), so the count reduces to
/// |N_G(X)| * #{conjugates of X inside K} / |K| -- all lattice lookups.
inline const Matrix<Int>& table_of_marks(const Group& g) {
    auto hold = g.data().marks_cache.get<Matrix<Int>>([&] {
        const SubgroupLattice& lat = lattice_of(g);
        const int nc = lat.class_count();
        Matrix<Int> m(nc, nc);
        for (int kc = 0; kc < nc; ++kc) {
            const int k = lat.class_rep(kc);
            const long long k_order = lat.at(k).order();
            for (int xc = 0; xc < nc; ++xc) {
                long long inside = 0;
                for (int x : lat.classes()[xc])
                    if (lat.leq(x, k)) ++inside;
                if (inside == 0) continue;
                const long long nx = lat.normalizer(lat.class_rep(xc)).count();
                const long long fixed = nx * inside / k_order;
                if (fixed * k_order != nx * inside)
                    throw error("table_of_marks: fixed-point count is not integral");
                m(kc, xc) = fixed;
            }
        }
        return m;
    });
    return *hold;
}

// ---------------------------------------------------------------------------
// Burnside group elements
// ---------------------------------------------------------------------------

/// An element of the Burnside group B(G): an integer combination of the
/// transitive G-sets [G/K], one coefficient per subgroup conjugacy class in
/// canonical lattice order.
struct BurnsideElement {
    Group group;
    std::vector<Int> coeffs;

    bool is_zero() const {
        for (const Int& c : coeffs)
            if (c != 0) return false;
        return true;
    }
};

inline BurnsideElement burnside_zero(const Group& g) {
    return BurnsideElement{g, std::vector<Int>(lattice_of(g).class_count())};
}

/// The basis element [G/K] for the subgroup class of K.
inline BurnsideElement burnside_basis(const Group& g, const Subgroup& k) {
    const SubgroupLattice& lat = lattice_of(g);
    BurnsideElement u = burnside_zero(g);
    u.coeffs[lat.class_of(lat.index_of(k))] = 1;
    return u;
}

inline BurnsideElement burnside_basis(const Group& g, int class_index) {
    const SubgroupLattice& lat = lattice_of(g);
    if (class_index < 0 || class_index >= lat.class_count())
        throw precondition_error("burnside_basis: class index out of range");
    BurnsideElement u = burnside_zero(g);
    u.coeffs[class_index] = 1;
    return u;
}

/// Mark vector |u^X| per subgroup class X (the ghost-map image of u).
inline std::vector<Int> marks(const BurnsideElement& u) {
    const Matrix<Int>& m = table_of_marks(u.group);
    const std::size_t nc = m.rows();
    if (u.coeffs.size() != nc)
        throw precondition_error("marks: coefficient vector has the wrong length");
    std::vector<Int> out(nc);
    for (std::size_t kc = 0; kc < nc; ++kc) {
        if (u.coeffs[kc] == 0) continue;
        for (std::size_t xc = 0; xc < nc; ++xc) out[xc] += u.coeffs[kc] * m(kc, xc);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Restriction to a subgroup
// ---------------------------------------------------------------------------

/// Restriction of u from G to the subgroup H, as an element of B(H) over the
/// standalone group from_subgroup(G, H) (returned alongside).  Each orbit of H
/// on G/K contributes the class of H/(H ∩ stabilizer).
struct RestrictionResult {
    SubgroupEmbedding embedding;  // H as a group of its own
    BurnsideElement element;      // over embedding.group
};

inline RestrictionResult restrict_to(const BurnsideElement& u, const Subgroup& h) {
    const Group& g = u.group;
    if (!h.parent.same_instance(g))
        throw precondition_error("restrict: subgroup of a different group instance");
    const SubgroupLattice& glat = lattice_of(g);
    if (static_cast<int>(u.coeffs.size()) != glat.class_count())
        throw precondition_error("restrict: coefficient vector has the wrong length");

    SubgroupEmbedding emb = from_subgroup(g, h.members);
    const Group& hg = emb.group;
    const SubgroupLattice& hlat = lattice_of(hg);
    BurnsideElement out = burnside_zero(hg);

    const std::vector<int> h_elems = h.members.members();
    const int n = g.order();
    for (int kc = 0; kc < glat.class_count(); ++kc) {
        if (u.coeffs[kc] == 0) continue;
        const ElemSet& k = glat.at(glat.class_rep(kc)).members;
        const std::vector<int> k_elems = k.members();
        // Sweep coset representatives of G/K; mark visited elements so each
        // H-orbit of cosets is decomposed exactly once.
        std::vector<char> seen(n, 0);
        for (int rep = 0; rep < n; ++rep) {
            if (seen[rep]) continue;
            // H-orbit of the coset rep*K: breadth-first over h * (x K).
            std::vector<int> frontier{rep};
            long long orbit_cosets = 0;
            while (!frontier.empty()) {
                int x = frontier.back();
                frontier.pop_back();
                if (seen[x]) continue;
                ++orbit_cosets;
                for (int e : k_elems) seen[g.mul(x, e)] = 1;
                for (int he : h_elems) {
                    int y = g.mul(he, x);
                    if (!seen[y]) frontier.push_back(y);
                }
            }
            // Stabilizer of rep*K inside H: h with rep^{-1} h rep in K.
            ElemSet stab(hg.order());
            const int rinv = g.inv(rep);
            for (int he : h_elems)
                if (k.test(g.mul(g.mul(rinv, he), rep))) stab.set(emb.from_parent[he]);
            if (orbit_cosets * stab.count() != static_cast<long long>(h_elems.size()))
                throw error("restrict: orbit size does not match stabilizer index");
            out.coeffs[hlat.class_of(hlat.find(stab))] += u.coeffs[kc];
        }
    }
    return RestrictionResult{std::move(emb), std::move(out)};
}

// ---------------------------------------------------------------------------
// The mark-vanishing sublattice F_p, the quotient rank E_p, and the span M_p
// ---------------------------------------------------------------------------

/// Class indices of the p-elementary subgroup classes (direct products of a
/// p-group with a cyclic group), in lattice class order.
inline std::vector<int> p_elementary_class_indices(const Group& g, int p) {
    const SubgroupLattice& lat = lattice_of(g);
    std::vector<int> out;
    for (int c = 0; c < lat.class_count(); ++c)
        if (is_p_elementary_set(g, lat.at(lat.class_rep(c)).members, p)) out.push_back(c);
    return out;
}

/// Z-basis of the sublattice of B(G) whose marks vanish at every p-elementary
/// subgroup class.  Saturated: the basis generates the full integer kernel.
inline std::vector<std::vector<Int>> f_p_lattice(const Group& g, int p) {
    if (!is_prime(p)) throw precondition_error("f_p_lattice: p must be prime");
    const Matrix<Int>& m = table_of_marks(g);
    const std::vector<int> cols = p_elementary_class_indices(g, p);
    Matrix<Int> a(cols.size(), m.rows());
    for (std::size_t r = 0; r < cols.size(); ++r)
        for (std::size_t kc = 0; kc < m.rows(); ++kc) a(r, kc) = m(kc, cols[r]);
    return integer_kernel(a);
}

/// Rank of the quotient B(G) / F_p(G): the number of p-elementary subgroup
/// classes.  Cross-checked against the kernel corank.
inline int e_p_rank(const Group& g, int p) {
    if (!is_prime(p)) throw precondition_error("e_p_rank: p must be prime");
    const int direct = static_cast<int>(p_elementary_class_indices(g, p).size());
    const int corank =
        lattice_of(g).class_count() - static_cast<int>(f_p_lattice(g, p).size());
    if (direct != corank)
        throw error("e_p_rank: class count and kernel corank disagree");
    return direct;
}

/// Index of M_p(G) + F_p(G) in B(G), where M_p(G) is spanned by the basis
/// elements [G/H] with H p-elementary.  Empty optional: the sum has deficient
/// rank, so the index is infinite.  Throws if the sum is not direct.
inline std::optional<Int> m_p_f_p_index(const Group& g, int p) {
    if (!is_prime(p)) throw precondition_error("m_p_f_p_index: p must be prime");
    const std::vector<int> elem = p_elementary_class_indices(g, p);
    const std::vector<std::vector<Int>> ker = f_p_lattice(g, p);
    const std::size_t nc = table_of_marks(g).rows();
    if (elem.size() + ker.size() < nc) return std::nullopt;
    Matrix<Int> b(nc, nc);
    for (std::size_t j = 0; j < elem.size(); ++j) b(elem[j], j) = 1;
    for (std::size_t j = 0; j < ker.size(); ++j)
        for (std::size_t i = 0; i < nc; ++i) b(i, elem.size() + j) = ker[j][i];
    Int d = det_bareiss(b);
    if (d == 0) throw error("m_p_f_p_index: the two sublattices do not meet trivially");
    return d < 0 ? Int(-d) : d;
}

}  // namespace bisetkit
