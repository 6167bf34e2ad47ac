#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bisetkit/bgroups.hpp"
#include "bisetkit/burnside.hpp"
#include "bisetkit/corpus.hpp"
#include "bisetkit/errors.hpp"
#include "bisetkit/group.hpp"
#include "bisetkit/group_spec.hpp"
#include "bisetkit/homomorphisms.hpp"
#include "bisetkit/incidence_spectrum.hpp"
#include "bisetkit/kernel_form.hpp"
#include "bisetkit/lattice.hpp"
#include "bisetkit/matrix.hpp"
#include "bisetkit/rational.hpp"
#include "bisetkit/section_count.hpp"
#include "bisetkit/subgroups.hpp"

// Corpus-wide property verification.  Each module of the library contributes
// a suite of properties; every property is checked exhaustively over a list
// of corpus groups and reported as a single pass/fail result with the number
// of elementary checks performed and, on failure, the first offending case.

namespace bisetkit {

struct PropertyResult {
    std::string module;
    std::string name;
    bool pass = true;
    long long checks = 0;
    std::string detail;  // first failure, or empty
};

struct VerifyOptions {
    int order_bound = 256;     // group-spec parsing bound
    int h_order_bound_2 = 16;  // largest |H| in the p = 2 dimension catalog
    int h_order_bound_3 = 27;  // largest |H| in the p = 3 dimension catalog
};

namespace detail {

/// Accumulates elementary checks for one property; keeps the first failure.
struct Check {
    long long checks = 0;
    bool pass = true;
    std::string detail;

    void expect(bool ok, const std::function<std::string()>& why) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            detail = why();
        }
    }
};

inline PropertyResult finish(std::string module, std::string name, Check c) {
    return PropertyResult{std::move(module), std::move(name), c.pass, c.checks,
                          std::move(c.detail)};
}

inline std::vector<Group> parse_all(const std::vector<std::string>& specs,
                                    const VerifyOptions& opt) {
    SpecOptions so;
    so.order_bound = opt.order_bound;
    return corpus_groups(specs, so);
}

/// Image of a subset under a quotient projection.
inline ElemSet project_set(const QuotientResult& qr, const ElemSet& s) {
    ElemSet out(qr.group.order());
    for (int x = s.first(); x != -1; x = s.next(x)) out.set(qr.proj[x]);
    return out;
}

/// Nonnegative residue of an integer-valued rational (den must be 1).
inline int residue_mod(const BRational& v, int p) {
    Int r = v.num() % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
}

/// True when h is isomorphic to C_p x C_{p^{k-1}} for some k >= 2 (the
/// abelian two-generator shape with a cyclic maximal factor).
inline bool is_p_times_cyclic_shape(const Group& h, int p) {
    long long n = h.order();
    if (n < static_cast<long long>(p) * p || !is_power_of(n, p)) return false;
    long long co = n / p;  // order of the cyclic factor
    Group model = parse_group_spec("C" + std::to_string(p) + "xC" + std::to_string(co));
    return isomorphic(h, model);
}

/// Literal brute force: walk every map f : P -> H (|H|^|P| assignments),
/// keep those that satisfy f(xy) = f(x)f(y) everywhere and are onto.
inline long long brute_force_surjection_count(const Group& p_grp, const Group& h) {
    const int n = p_grp.order(), m = h.order();
    std::vector<int> img(n, 0);
    long long count = 0;
    while (true) {
        bool hom = true;
        for (int x = 0; x < n && hom; ++x)
            for (int y = 0; y < n; ++y)
                if (img[p_grp.mul(x, y)] != h.mul(img[x], img[y])) {
                    hom = false;
                    break;
                }
        if (hom) {
            ElemSet seen(m);
            for (int v : img) seen.set(v);
            if (seen.count() == m) ++count;
        }
        int pos = 0;
        while (pos < n && ++img[pos] == m) img[pos++] = 0;
        if (pos == n) break;
    }
    return count;
}

}  // namespace detail

/// The p-group shapes H over which the dimension properties run: every
/// isomorphism class expressible in the group-spec grammar with |H| <= 16
/// (p = 2) or |H| <= 27 (p = 3).
inline const std::vector<Group>& dimension_h_catalog(int p) {
    auto build = [](std::initializer_list<const char*> specs) {
        std::vector<Group> out;
        for (const char* s : specs) out.push_back(parse_group_spec(s));
        return out;
    };
    static const std::vector<Group> two = build(
        {"C1", "C2", "C4", "C2xC2", "C8", "C2xC4", "Elem(2,3)", "D8", "Q8", "C16", "C2xC8",
         "C4xC4", "C2xC2xC4", "Elem(2,4)", "D16", "Q16", "D8xC2", "Q8xC2"});
    static const std::vector<Group> three =
        build({"C1", "C3", "C9", "C3xC3", "C27", "C3xC9", "Elem(3,3)"});
    if (p == 2) return two;
    if (p == 3) return three;
    throw precondition_error("dimension_h_catalog: only p = 2 and p = 3 are catalogued");
}

// ---------------------------------------------------------------------------
// group-core suite
// ---------------------------------------------------------------------------

inline std::vector<PropertyResult> verify_group_core(const std::vector<Group>& corpus) {
    using detail::Check;
    std::vector<PropertyResult> out;

    {  // exhaustive group axioms
        Check c;
        for (const Group& g : corpus) {
            const int n = g.order();
            auto where = [&] { return g.name() + ": group axiom violated"; };
            for (int x = 0; x < n; ++x) {
                c.expect(g.mul(0, x) == x && g.mul(x, 0) == x, where);
                bool has_inverse = false;
                for (int y = 0; y < n; ++y)
                    if (g.mul(x, y) == 0 && g.mul(y, x) == 0) {
                        has_inverse = true;
                        break;
                    }
                c.expect(has_inverse, where);
            }
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    c.expect(g.mul(x, y) >= 0 && g.mul(x, y) < n, where);
                    for (int z = 0; z < n; ++z)
                        c.expect(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)), where);
                }
        }
        out.push_back(detail::finish("group-core", "group-axioms", c));
    }

    {  // |G/N| * |N| = |G| for every normal N
        Check c;
        for (const Group& g : corpus) {
            const SubgroupLattice& lat = lattice_of(g);
            for (int i = 0; i < lat.size(); ++i) {
                if (!lat.is_normal(i)) continue;
                const Subgroup& n = lat.at(i);
                QuotientResult qr = quotient(g, n);
                c.expect(static_cast<long long>(qr.group.order()) * n.order() == g.order(),
                         [&] { return g.name() + ": quotient order fails at a normal subgroup of order " +
                                      std::to_string(n.order()); });
            }
        }
        out.push_back(detail::finish("group-core", "quotient-order", c));
    }

    {  // isomorphic() is an equivalence relation on the corpus list
        Check c;
        const std::size_t m = corpus.size();
        std::vector<std::vector<char>> iso(m, std::vector<char>(m, 0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) iso[i][j] = isomorphic(corpus[i], corpus[j]);
        for (std::size_t i = 0; i < m; ++i) {
            c.expect(iso[i][i] == 1, [&] { return corpus[i].name() + ": not reflexive"; });
            for (std::size_t j = 0; j < m; ++j) {
                c.expect(iso[i][j] == iso[j][i], [&] {
                    return corpus[i].name() + " / " + corpus[j].name() + ": not symmetric";
                });
                if (!iso[i][j]) continue;
                for (std::size_t k = 0; k < m; ++k)
                    c.expect(iso[j][k] == iso[i][k], [&] {
                        return corpus[i].name() + " / " + corpus[j].name() + " / " +
                               corpus[k].name() + ": not transitive";
                    });
            }
        }
        out.push_back(detail::finish("group-core", "iso-equivalence", c));
    }

    {  // surjection counts: kernel-side factorization + literal brute force
        Check c;
        std::vector<Group> shapes;  // corpus shapes up to isomorphism, |H| <= 16
        for (const Group& g : corpus) {
            if (g.order() > 16) continue;
            bool seen = false;
            for (const Group& s : shapes)
                if (isomorphic(s, g)) {
                    seen = true;
                    break;
                }
            if (!seen) shapes.push_back(g);
        }
        for (const Group& p_grp : corpus) {
            if (p_grp.order() > 16) continue;
            const SubgroupLattice& lat = lattice_of(p_grp);
            for (const Group& h : shapes) {
                if (p_grp.order() % h.order() != 0) continue;
                const long long direct = count_surjections(p_grp, h);
                long long kernels = 0;
                for (int i = 0; i < lat.size(); ++i) {
                    if (!lat.is_normal(i)) continue;
                    if (lat.at(i).order() != p_grp.order() / h.order()) continue;
                    if (isomorphic(quotient(p_grp, lat.at(i)).group, h)) ++kernels;
                }
                const long long aut = count_surjections(h, h);
                c.expect(direct == kernels * aut, [&] {
                    return p_grp.name() + " -> " + h.name() + ": " + std::to_string(direct) +
                           " surjections vs " + std::to_string(kernels) + " kernels x " +
                           std::to_string(aut) + " automorphisms";
                });
                double maps = 1;
                for (int i = 0; i < p_grp.order() && maps <= 70000; ++i) maps *= h.order();
                if (maps <= 65536)
                    c.expect(direct == detail::brute_force_surjection_count(p_grp, h), [&] {
                        return p_grp.name() + " -> " + h.name() +
                               ": surjection count differs from the all-maps walk";
                    });
            }
        }
        out.push_back(detail::finish("group-core", "surjection-count", c));
    }

    {  // p-elementary subgroups are closed under passing to subgroups
        Check c;
        for (const Group& g : corpus) {
            const SubgroupLattice& lat = lattice_of(g);
            for (int p : {2, 3}) {
                for (int i = 0; i < lat.size(); ++i) {
                    if (!is_p_elementary_set(g, lat.at(i).members, p)) continue;
                    for (int j = 0; j < lat.size(); ++j) {
                        if (!lat.leq(j, i)) continue;
                        c.expect(is_p_elementary_set(g, lat.at(j).members, p), [&] {
                            return g.name() + ", p=" + std::to_string(p) +
                                   ": subgroup of a p-elementary subgroup is not p-elementary";
                        });
                    }
                }
            }
        }
        out.push_back(detail::finish("group-core", "p-elementary-subgroup-closed", c));
    }

    return out;
}

// ---------------------------------------------------------------------------
// lattice-mobius suite
// ---------------------------------------------------------------------------

inline std::vector<PropertyResult> verify_lattice_mobius(const std::vector<Group>& corpus) {
    using detail::Check;
    std::vector<PropertyResult> out;

    {  // interval sums of the Mobius function
        Check c;
        for (const Group& g : corpus) {
            const SubgroupLattice& lat = lattice_of(g);
            for (int i = 0; i < lat.size(); ++i)
                for (int j = 0; j < lat.size(); ++j) {
                    if (!lat.leq(i, j)) continue;
                    long long sum = 0;
                    for (int z = 0; z < lat.size(); ++z)
                        if (lat.leq(i, z) && lat.leq(z, j)) sum += lat.mobius(i, z);
                    c.expect(sum == (i == j ? 1 : 0), [&] {
                        return g.name() + ": Mobius interval sum is " + std::to_string(sum);
                    });
                }
        }
        out.push_back(detail::finish("lattice-mobius", "mobius-interval-sum", c));
    }

    std::vector<Group> betas;
    betas.reserve(corpus.size());
    for (const Group& g : corpus) betas.push_back(beta(g));

    {  // m_{G,N} != 0 exactly when beta(G) and beta(G/N) agree
        Check c;
        for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
            const Group& g = corpus[gi];
            const SubgroupLattice& lat = lattice_of(g);
            for (int i = 0; i < lat.size(); ++i) {
                if (!lat.is_normal(i)) continue;
                const bool nonzero = !m_number(g, lat.at(i)).is_zero();
                const bool same_beta = isomorphic(betas[gi], beta(quotient(g, lat.at(i)).group));
                c.expect(nonzero == same_beta, [&] {
                    return g.name() + ": m-number polarity fails at a normal subgroup of order " +
                           std::to_string(lat.at(i).order());
                });
            }
        }
        out.push_back(detail::finish("lattice-mobius", "m-number-beta-polarity", c));
    }

    {  // beta lands on B-groups and is idempotent up to isomorphism
        Check c;
        for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
            c.expect(is_b_group(betas[gi]),
                     [&] { return corpus[gi].name() + ": beta image is not a B-group"; });
            c.expect(isomorphic(beta(betas[gi]), betas[gi]),
                     [&] { return corpus[gi].name() + ": beta is not idempotent"; });
        }
        out.push_back(detail::finish("lattice-mobius", "beta-idempotent", c));
    }

    {  // beta(G) is a p-group exactly when G is p-elementary
        Check c;
        for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
            for (int p : {2, 3}) {
                c.expect(is_power_of(betas[gi].order(), p) == is_p_elementary(corpus[gi], p),
                         [&] {
                             return corpus[gi].name() + ", p=" + std::to_string(p) +
                                    ": beta p-group test disagrees with p-elementary test";
                         });
            }
        }
        out.push_back(detail::finish("lattice-mobius", "beta-p-group-iff-p-elementary", c));
    }

    {  // closed-form common-complement count against the lattice scan
        Check c;
        for (const Group& g : corpus) {
            const int p = prime_power_base(g.order());
            if (g.order() == 1 || p == 0) continue;
            const SubgroupLattice& lat = lattice_of(g);
            const ElemSet phi = frattini(g).members;
            for (int i = 0; i < lat.size(); ++i) {
                if (!lat.is_normal(i) || (lat.at(i).members & phi).count() != 1) continue;
                for (int j = i; j < lat.size(); ++j) {
                    if (!lat.is_normal(j) || lat.at(j).order() != lat.at(i).order()) continue;
                    if ((lat.at(j).members & phi).count() != 1) continue;
                    const Int formula = count_common_complements(g, lat.at(i), lat.at(j));
                    long long brute = 0;
                    for (int y = 0; y < lat.size(); ++y) {
                        const Subgroup& cand = lat.at(y);
                        if ((cand.members & lat.at(i).members).count() != 1) continue;
                        if ((cand.members & lat.at(j).members).count() != 1) continue;
                        if (static_cast<long long>(cand.order()) * lat.at(i).order() != g.order())
                            continue;
                        ++brute;
                    }
                    c.expect(formula == brute, [&] {
                        return g.name() + ": complement closed form " + formula.str() + " vs " +
                               std::to_string(brute) + " by scan";
                    });
                }
            }
        }
        out.push_back(detail::finish("lattice-mobius", "complement-count-closed-form", c));
    }

    {  // m-numbers of p-groups only see the Frattini quotient
        Check c;
        for (const Group& g : corpus) {
            if (g.order() == 1 || prime_power_base(g.order()) == 0) continue;
            const SubgroupLattice& lat = lattice_of(g);
            const ElemSet phi = frattini(g).members;
            QuotientResult qr = quotient(g, Subgroup{g, phi});
            for (int i = 0; i < lat.size(); ++i) {
                if (!lat.is_normal(i)) continue;
                const ElemSet qphi = g.closure(lat.at(i).members | phi);
                const Subgroup image{qr.group, detail::project_set(qr, qphi)};
                c.expect(m_number(g, lat.at(i)) == m_number(qr.group, image), [&] {
                    return g.name() + ": m-number changes across the Frattini quotient at a "
                                      "normal subgroup of order " +
                           std::to_string(lat.at(i).order());
                });
            }
        }
        out.push_back(detail::finish("lattice-mobius", "m-number-frattini-factorization", c));
    }

    return out;
}

// ---------------------------------------------------------------------------
// burnside-ring suite
// ---------------------------------------------------------------------------

inline std::vector<PropertyResult> verify_burnside_ring(const std::vector<Group>& corpus) {
    using detail::Check;
    std::vector<PropertyResult> out;

    {  // the mark homomorphism is injective
        Check c;
        for (const Group& g : corpus) {
            const Matrix<Int>& tm = table_of_marks(g);
            Matrix<BRational> m(tm.rows(), tm.cols());
            for (std::size_t i = 0; i < tm.rows(); ++i)
                for (std::size_t j = 0; j < tm.cols(); ++j) m(i, j) = BRational(tm(i, j));
            c.expect(rank_exact(m) == tm.rows(),
                     [&] { return g.name() + ": table of marks is singular"; });
        }
        out.push_back(detail::finish("burnside-ring", "marks-injective", c));
    }

    {  // restriction commutes with marks at common subgroups
        Check c;
        for (const Group& g : corpus) {
            if (g.order() > 24) continue;
            const SubgroupLattice& lat = lattice_of(g);
            const Matrix<Int>& tm = table_of_marks(g);
            for (int hc = 0; hc < lat.class_count(); ++hc) {
                const Subgroup& h = lat.at(lat.class_rep(hc));
                for (int kc = 0; kc < lat.class_count(); ++kc) {
                    RestrictionResult rr = restrict_to(burnside_basis(g, kc), h);
                    const std::vector<Int> mh = marks(rr.element);
                    const SubgroupLattice& hlat = lattice_of(rr.embedding.group);
                    for (int lc = 0; lc < hlat.class_count(); ++lc) {
                        const ElemSet& local = hlat.at(hlat.class_rep(lc)).members;
                        ElemSet in_g(g.order());
                        for (int x = local.first(); x != -1; x = local.next(x))
                            in_g.set(rr.embedding.to_parent[x]);
                        const int gi = lat.find(in_g);
                        c.expect(gi >= 0 && mh[lc] == tm(kc, lat.class_of(gi)), [&] {
                            return g.name() + ": restricted marks disagree below a subgroup of "
                                              "order " +
                                   std::to_string(h.order());
                        });
                    }
                }
            }
        }
        out.push_back(detail::finish("burnside-ring", "restriction-mark-commutes", c));
    }

    {  // rank of the vanishing sublattice + p-elementary rank = class count
        Check c;
        for (const Group& g : corpus) {
            const int nc = lattice_of(g).class_count();
            for (int p : {2, 3, 5}) {
                const std::vector<std::vector<Int>> basis = f_p_lattice(g, p);
                Matrix<BRational> m(basis.size(), nc);
                for (std::size_t i = 0; i < basis.size(); ++i)
                    for (int j = 0; j < nc; ++j) m(i, j) = BRational(basis[i][j]);
                c.expect(rank_exact(m) == basis.size(),
                         [&] { return g.name() + ": vanishing-sublattice basis is dependent"; });
                c.expect(static_cast<int>(basis.size()) + e_p_rank(g, p) == nc, [&] {
                    return g.name() + ", p=" + std::to_string(p) + ": rank additivity fails";
                });
            }
        }
        out.push_back(detail::finish("burnside-ring", "rank-additivity", c));
    }

    {  // vanishing-sublattice members: zero marks on p-elementary classes only
        Check c;
        for (const Group& g : corpus) {
            const SubgroupLattice& lat = lattice_of(g);
            for (int p : {2, 3, 5}) {
                std::vector<char> elem(lat.class_count(), 0);
                for (int idx : p_elementary_class_indices(g, p)) elem[idx] = 1;
                for (const std::vector<Int>& v : f_p_lattice(g, p)) {
                    BurnsideElement u{g, v};
                    c.expect(!u.is_zero(),
                             [&] { return g.name() + ": zero vector in a kernel basis"; });
                    const std::vector<Int> mv = marks(u);
                    bool elementary_clear = true, somewhere_nonzero = false;
                    for (int xc = 0; xc < lat.class_count(); ++xc) {
                        if (elem[xc] && mv[xc] != 0) elementary_clear = false;
                        if (!elem[xc] && mv[xc] != 0) somewhere_nonzero = true;
                    }
                    c.expect(elementary_clear && somewhere_nonzero, [&] {
                        return g.name() + ", p=" + std::to_string(p) +
                               ": mark support of a vanishing-sublattice vector is wrong";
                    });
                }
            }
        }
        out.push_back(detail::finish("burnside-ring", "vanishing-marks-support", c));
    }

    {  // p-elementary rank = cyclic classes + non-cyclic p-elementary classes
        Check c;
        for (const Group& g : corpus) {
            const SubgroupLattice& lat = lattice_of(g);
            for (int p : {2, 3, 5}) {
                int cyclic = 0, noncyclic_elem = 0;
                for (int cc = 0; cc < lat.class_count(); ++cc) {
                    const int r = lat.class_rep(cc);
                    if (lat.is_cyclic_sub(r))
                        ++cyclic;
                    else if (is_p_elementary_set(g, lat.at(r).members, p))
                        ++noncyclic_elem;
                }
                c.expect(e_p_rank(g, p) == cyclic + noncyclic_elem, [&] {
                    return g.name() + ", p=" + std::to_string(p) +
                           ": p-elementary rank does not split into cyclic + non-cyclic counts";
                });
            }
        }
        out.push_back(detail::finish("burnside-ring", "elementary-rank-split", c));
    }

    return out;
}

// ---------------------------------------------------------------------------
// simple-dim suite
// ---------------------------------------------------------------------------

inline std::vector<PropertyResult> verify_simple_dim(const std::vector<Group>& corpus,
                                                     const VerifyOptions& opt = {}) {
    using detail::Check;
    std::vector<PropertyResult> out;
    Check sym, regime, zero_law;

    for (const Group& q : corpus) {
        const int p = prime_power_base(q.order());
        if (q.order() == 1 || (p != 2 && p != 3)) continue;
        const int h_bound = p == 2 ? opt.h_order_bound_2 : opt.h_order_bound_3;
        const bool q_cyclic = set_is_cyclic(q, ElemSet::full(q.order()));

        std::vector<std::vector<elem_t>> autos;  // loaded lazily for small q
        if (q.order() <= 8)
            for (const Homomorphism& f : surjections(q, q)) autos.push_back(f.images);

        for (const Group& h : dimension_h_catalog(p)) {
            if (h.order() > h_bound) continue;
            GramForm f = gram(q, h);
            const int k = f.index.size();
            if (k == 0) continue;
            auto ctx = [&] { return q.name() + " onto " + h.name(); };

            // symmetry, and invariance under every automorphism of q
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    sym.expect(f.entries(a, b) == f.entries(b, a),
                               [&] { return ctx() + ": form is not symmetric"; });
            for (const std::vector<elem_t>& phi : autos) {
                const std::vector<int> perm = kernel_action_of_automorphism(f.index, phi);
                for (int a = 0; a < k; ++a)
                    for (int b = 0; b < k; ++b)
                        sym.expect(f.entries(perm[a], perm[b]) == f.entries(a, b), [&] {
                            return ctx() + ": form is not automorphism-invariant";
                        });
            }

            // structural regimes by the shape of h
            const bool h_cyclic = set_is_cyclic(h, ElemSet::full(h.order()));
            const bool h_klein = h.order() == p * p && !h_cyclic;
            const bool h_split = detail::is_p_times_cyclic_shape(h, p);
            if (q_cyclic) {
                // unique admissible kernel; the entry is 1 when the target is
                // the whole source, and (p-1)/p for the one other live case,
                // an order-p source over the trivial target
                const BRational expected = h.order() == 1 ? rat(p - 1, p) : BRational(1);
                regime.expect(k == 1 && f.entries(0, 0) == expected, [&] {
                    return ctx() + ": cyclic source must give the 1x1 form (" + expected.str() +
                           ")";
                });
            } else if (h_cyclic) {
                for (int a = 0; a < k; ++a)
                    regime.expect(f.entries(a, a).is_zero(),
                                  [&] { return ctx() + ": diagonal must vanish"; });
                for (int a = 0; a < k; ++a)
                    for (int b = 0; b < k; ++b) {
                        if (a == b) continue;
                        regime.expect(!f.entries(a, b).is_zero() &&
                                          f.entries(a, b) == f.entries(0, 1),
                                      [&] { return ctx() + ": off-diagonal must be constant"; });
                    }
            } else if (h_klein) {
                // the source is forced elementary abelian; constant entries
                int n_rank = 0;
                for (long long o = q.order(); o > 1; o /= p) ++n_rank;
                BRational expected(1);
                long long pw = 1;
                for (int i = 1; i <= n_rank - 2; ++i) {
                    pw *= p;
                    expected = expected * BRational(1 - pw);
                }
                for (int a = 0; a < k; ++a)
                    for (int b = 0; b < k; ++b)
                        regime.expect(f.entries(a, b) == expected, [&] {
                            return ctx() + ": rank-two target expects the constant " +
                                   expected.str();
                        });
                regime.expect(rank_exact(f.entries) == 1,
                              [&] { return ctx() + ": constant form must have rank 1"; });
            } else if (!h_split) {
                // remaining shapes: integral, unit diagonal and zero
                // off-diagonal modulo p
                for (int a = 0; a < k; ++a)
                    for (int b = 0; b < k; ++b) {
                        const BRational& v = f.entries(a, b);
                        regime.expect(v.den() == 1 &&
                                          detail::residue_mod(v, p) == (a == b ? 1 : 0),
                                      [&] { return ctx() + ": mod-p normal form fails"; });
                    }
            }
            // two-generator mixed shapes (p x p^{k-1}, k >= 3) carry no claim

            // vanishing law for individual entries
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    zero_law.expect(f.entries(a, b).is_zero() ==
                                        (h_cyclic && !q_cyclic && a == b),
                                    [&] { return ctx() + ": zero-entry law fails"; });
        }
    }
    out.push_back(detail::finish("simple-dim", "gram-symmetric-invariant", sym));
    out.push_back(detail::finish("simple-dim", "gram-regime-structure", regime));
    out.push_back(detail::finish("simple-dim", "n-form-zero-law", zero_law));

    {  // joint-complement sets against the closed-form count
        Check c;
        for (const Group& q : corpus) {
            if (q.order() == 1 || prime_power_base(q.order()) == 0) continue;
            const SubgroupLattice& lat = lattice_of(q);
            const ElemSet phi = frattini(q).members;
            for (int i = 0; i < lat.size(); ++i) {
                if (!lat.is_normal(i)) continue;
                for (int j = i; j < lat.size(); ++j) {
                    if (!lat.is_normal(j) || lat.at(j).order() != lat.at(i).order()) continue;
                    const Subgroup& m = lat.at(i);
                    const Subgroup& n = lat.at(j);
                    const long long size = static_cast<long long>(kbar(q, m, n).size());
                    if ((m.members & phi) == (n.members & phi)) {
                        QuotientResult qr = quotient(q, Subgroup{q, m.members & n.members});
                        const Subgroup mbar{qr.group, detail::project_set(qr, m.members)};
                        const Subgroup nbar{qr.group, detail::project_set(qr, n.members)};
                        c.expect(count_common_complements(qr.group, mbar, nbar) == size, [&] {
                            return q.name() + ": joint-complement count differs from the closed "
                                              "form at subgroups of order " +
                                   std::to_string(m.order());
                        });
                    } else {
                        const Subgroup meet{q, m.members & n.members};
                        const BRational coeff = m_number(q, meet) *
                                                BRational(mobius_normal(meet, m, q)) *
                                                BRational(size);
                        c.expect(coeff.is_zero(), [&] {
                            return q.name() + ": form coefficient survives distinct Frattini "
                                              "meets at subgroups of order " +
                                   std::to_string(m.order());
                        });
                    }
                }
            }
        }
        out.push_back(detail::finish("simple-dim", "joint-complement-bridge", c));
    }

    {  // scalar-line incidence matrices have the predicted spectra
        Check c;
        for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}}) {
            const SpectralReport rep = lemma42_matrix(p, e, 3);
            long long pe1 = 1;
            for (int i = 0; i <= e; ++i) pe1 *= p;
            auto ctx = [&, p = p, e = e] {
                return "(p,e) = (" + std::to_string(p) + "," + std::to_string(e) + ")";
            };
            c.expect(rep.spectral_identity,
                     [&] { return ctx() + ": characteristic polynomial mismatch"; });
            c.expect(rep.rows_constant && rep.row_sum == pe1 - p + 1,
                     [&] { return ctx() + ": row sums are wrong"; });
        }
        out.push_back(detail::finish("simple-dim", "incidence-spectral-identity", c));
    }

    return out;
}

// ---------------------------------------------------------------------------
// section-count suite
// ---------------------------------------------------------------------------

inline std::vector<PropertyResult> verify_section_count(const std::vector<Group>& corpus,
                                                        const VerifyOptions& opt = {}) {
    using detail::Check;
    std::vector<PropertyResult> out;
    static const Group trivial_h = parse_group_spec("C1");
    static const Group klein2 = parse_group_spec("C2xC2");
    static const Group klein3 = parse_group_spec("C3xC3");
    static const Group cp2 = parse_group_spec("C2");
    static const Group cp3 = parse_group_spec("C3");

    Check triv, additivity, cp_match, master, beta_remark;

    for (const Group& g : corpus) {
        const SubgroupLattice& lat = lattice_of(g);
        int cyclic_classes = 0;
        for (int cc = 0; cc < lat.class_count(); ++cc)
            if (lat.is_cyclic_sub(lat.class_rep(cc))) ++cyclic_classes;

        // beta of each subgroup class representative, computed once
        std::vector<Group> class_betas;
        for (int cc = 0; cc < lat.class_count(); ++cc)
            class_betas.push_back(
                beta(from_subgroup(g, lat.at(lat.class_rep(cc)).members).group));

        for (int p : {2, 3}) {
            const Group& klein = p == 2 ? klein2 : klein3;
            const Group& cp = p == 2 ? cp2 : cp3;
            const int h_bound = p == 2 ? opt.h_order_bound_2 : opt.h_order_bound_3;

            const long long dim_trivial = dim_simple_count_route(g, trivial_h, p).dim;
            triv.expect(dim_trivial == cyclic_classes, [&] {
                return g.name() + ", p=" + std::to_string(p) +
                       ": trivial-target dimension is not the cyclic class count";
            });

            int elementary_classes = 0;
            for (int cc = 0; cc < lat.class_count(); ++cc)
                if (is_p_elementary_set(g, lat.at(lat.class_rep(cc)).members, p))
                    ++elementary_classes;
            const long long dim_klein = dim_simple_count_route(g, klein, p).dim;
            additivity.expect(dim_trivial + dim_klein == elementary_classes, [&] {
                return g.name() + ", p=" + std::to_string(p) +
                       ": trivial + rank-two dimensions miss the p-elementary class count";
            });

            cp_match.expect(dim_simple_count_route(g, cp, p).dim ==
                                dim_simple_rank_route(g, cp, p),
                            [&] {
                                return g.name() + ", p=" + std::to_string(p) +
                                       ": routes disagree at the order-p cyclic target";
                            });

            for (const Group& h : dimension_h_catalog(p)) {
                if (h.order() > h_bound) continue;
                const long long by_count = dim_simple_count_route(g, h, p).dim;
                const long long by_rank = dim_simple_rank_route(g, h, p);
                master.expect(by_count == by_rank, [&] {
                    return g.name() + ", H=" + h.name() + ", p=" + std::to_string(p) + ": " +
                           std::to_string(by_count) + " by counting vs " +
                           std::to_string(by_rank) + " by rank";
                });
            }

            long long beta_klein_classes = 0;
            for (const Group& b : class_betas)
                if (isomorphic(b, klein)) ++beta_klein_classes;
            beta_remark.expect(dim_klein == beta_klein_classes, [&] {
                return g.name() + ", p=" + std::to_string(p) +
                       ": rank-two dimension is not the beta-Klein class count";
            });
        }
    }

    out.push_back(detail::finish("section-count", "trivial-target-counts-cyclic", triv));
    out.push_back(detail::finish("section-count", "elementary-class-additivity", additivity));
    out.push_back(detail::finish("section-count", "order-p-target-route-match", cp_match));
    out.push_back(detail::finish("section-count", "count-equals-rank-master", master));
    out.push_back(detail::finish("section-count", "beta-klein-remark", beta_remark));
    return out;
}

// ---------------------------------------------------------------------------
// full run
// ---------------------------------------------------------------------------

inline std::vector<PropertyResult> verify_corpus(const std::vector<std::string>& specs,
                                                 const VerifyOptions& opt = {}) {
    const std::vector<Group> corpus = detail::parse_all(specs, opt);
    std::vector<PropertyResult> out;
    auto absorb = [&out](std::vector<PropertyResult> part) {
        for (PropertyResult& r : part) out.push_back(std::move(r));
    };
    absorb(verify_group_core(corpus));
    absorb(verify_lattice_mobius(corpus));
    absorb(verify_burnside_ring(corpus));
    absorb(verify_simple_dim(corpus, opt));
    absorb(verify_section_count(corpus, opt));
    return out;
}

inline bool all_pass(const std::vector<PropertyResult>& results) {
    for (const PropertyResult& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace bisetkit
