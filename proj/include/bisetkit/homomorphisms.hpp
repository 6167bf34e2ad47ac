#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "bisetkit/group.hpp"

namespace bisetkit {

/// If n = p^a for a prime p (a >= 1) return p, else 0.
inline int prime_power_base(long long n) {
    if (n < 2) return 0;
    for (int p = 2; static_cast<long long>(p) * p <= n; ++p)
        if (n % p == 0) return is_power_of(n, p) ? p : 0;
    return static_cast<int>(n);  // n itself prime
}

inline bool is_p_group(const Group& g, int p) { return is_power_of(g.order(), p); }

/// Frattini subgroup of a p-group: generated by p-th powers and commutators.
/// (The maximal-subgroup definition lives with the lattice code; this closed
/// form is valid only in the prime-power case and is what the generating
/// tuple search needs.)
inline ElemSet frattini_set_pgroup(const Group& g, int p) {
    ElemSet seed(g.order());
    for (int x = 0; x < g.order(); ++x) {
        int xp = x;
        for (int i = 1; i < p; ++i) xp = g.mul(xp, x);
        seed.set(xp);
    }
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            seed.set(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
    return g.closure(seed);
}

/// Generating tuple plus a spanning recipe: element bfs_elem[t] (t > 0) is
/// bfs_elem[bfs_parent[t]] * gens[bfs_via[t]], so any generator-image choice
/// extends to a candidate map in one pass.
struct GenTuple {
    std::vector<elem_t> gens;
    std::vector<elem_t> bfs_elem;
    std::vector<int> bfs_parent;
    std::vector<int> bfs_via;
};

namespace detail {

inline GenTuple build_bfs(const Group& g, std::vector<elem_t> gens) {
    GenTuple t;
    t.gens = std::move(gens);
    const int n = g.order();
    std::vector<char> seen(n, 0);
    t.bfs_elem.push_back(0);
    t.bfs_parent.push_back(-1);
    t.bfs_via.push_back(-1);
    seen[0] = 1;
    for (std::size_t qi = 0; qi < t.bfs_elem.size(); ++qi) {
        int x = t.bfs_elem[qi];
        for (std::size_t gi = 0; gi < t.gens.size(); ++gi) {
            int y = g.mul(x, t.gens[gi]);
            if (!seen[y]) {
                seen[y] = 1;
                t.bfs_elem.push_back(static_cast<elem_t>(y));
                t.bfs_parent.push_back(static_cast<int>(qi));
                t.bfs_via.push_back(static_cast<int>(gi));
            }
        }
    }
    if (t.bfs_elem.size() != static_cast<std::size_t>(n))
        throw error("generating tuple does not span the group");
    return t;
}

inline std::vector<elem_t> minimal_gens(const Group& g) {
    const int n = g.order();
    if (n == 1) return {};
    // p-group: Burnside basis — greedily extend a set independent mod Frattini.
    if (int p = prime_power_base(n)) {
        ElemSet span = frattini_set_pgroup(g, p);
        std::vector<elem_t> gens;
        for (int x = 1; x < n && span.count() < n; ++x) {
            if (span.test(x)) continue;
            gens.push_back(static_cast<elem_t>(x));
            ElemSet seed = span;
            seed.set(x);
            span = g.closure(seed);
        }
        return gens;
    }
    // General case: exhaustive for sizes 1 and 2 (lexicographically first
    // hit), then greedy augmentation.
    for (int x = 1; x < n; ++x)
        if (g.closure_of({x}).count() == n) return {static_cast<elem_t>(x)};
    for (int x = 1; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (g.closure_of({x, y}).count() == n)
                return {static_cast<elem_t>(x), static_cast<elem_t>(y)};
    std::vector<elem_t> gens;
    ElemSet span(n);
    span.set(0);
    for (int x = 1; x < n && span.count() < n; ++x) {
        if (span.test(x)) continue;
        gens.push_back(static_cast<elem_t>(x));
        ElemSet seed = span;
        seed.set(x);
        span = g.closure(seed);
    }
    return gens;
}

}  // namespace detail

inline const GenTuple& generating_tuple(const Group& g) {
    auto hold = g.data().gens_cache.get<GenTuple>(
        [&] { return detail::build_bfs(g, detail::minimal_gens(g)); });
    return *hold;
}

/// Enumerate homomorphisms source -> target by generator images.  Candidate
/// images are pruned by order divisibility; a candidate assignment is checked
/// against the full multiplication action of the generators, which forces the
/// homomorphism property everywhere.  The callback may return false to stop.
inline void for_each_hom(const Group& src, const Group& dst, bool surjective_only,
                         const std::function<bool(const std::vector<elem_t>&)>& fn) {
    const GenTuple& t = generating_tuple(src);
    const int n = src.order(), m = dst.order();
    const std::size_t k = t.gens.size();
    if (surjective_only) {
        // a quotient of src cannot be bigger, and needs no more generators
        if (m > n || n % m != 0) return;
    }
    if (k == 0) {
        std::vector<elem_t> images(1, 0);
        if (!surjective_only || m == 1) fn(images);
        return;
    }
    std::vector<std::vector<elem_t>> cand(k);
    for (std::size_t i = 0; i < k; ++i) {
        int go = src.element_order(t.gens[i]);
        for (int h = 0; h < m; ++h)
            if (go % dst.element_order(h) == 0) cand[i].push_back(static_cast<elem_t>(h));
        if (cand[i].empty()) return;
    }
    std::vector<std::size_t> idx(k, 0);
    std::vector<elem_t> img(n), himg(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) himg[i] = cand[i][idx[i]];
        // extend along the spanning recipe, then verify all products
        img[0] = 0;
        for (std::size_t ti = 1; ti < t.bfs_elem.size(); ++ti)
            img[t.bfs_elem[ti]] =
                dst.mul(img[t.bfs_elem[t.bfs_parent[ti]]], himg[t.bfs_via[ti]]);
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            for (std::size_t i = 0; i < k; ++i)
                if (img[src.mul(x, t.gens[i])] != dst.mul(img[x], himg[i])) {
                    ok = false;
                    break;
                }
        if (ok) {
            bool pass = true;
            if (surjective_only) {
                ElemSet seen(m);
                for (elem_t y : img) seen.set(y);
                pass = seen.count() == m;
            }
            if (pass && !fn(img)) return;
        }
        std::size_t pos = 0;
        while (pos < k && ++idx[pos] == cand[pos].size()) idx[pos++] = 0;
        if (pos == k) return;
    }
}

inline std::vector<Homomorphism> surjections(const Group& p, const Group& h) {
    std::vector<Homomorphism> out;
    for_each_hom(p, h, true, [&](const std::vector<elem_t>& img) {
        out.push_back(Homomorphism{p, h, img});
        return true;
    });
    return out;
}

inline long long count_surjections(const Group& p, const Group& h) {
    long long c = 0;
    for_each_hom(p, h, true, [&](const std::vector<elem_t>&) {
        ++c;
        return true;
    });
    return c;
}

/// Exact isomorphism test: invariant screen, then generator-image search
/// mapping b into a.  Pass the longer-lived group as `b` when possible — its
/// generating tuple is cached on the instance.
inline bool isomorphic(const Group& a, const Group& b) {
    if (a.order() != b.order()) return false;
    if (a.same_instance(b)) return true;
    if (!(fingerprint(a) == fingerprint(b))) return false;
    const GenTuple& t = generating_tuple(b);
    const int n = a.order();
    const std::size_t k = t.gens.size();
    if (k == 0) return true;  // both trivial
    std::vector<std::vector<elem_t>> cand(k);
    for (std::size_t i = 0; i < k; ++i) {
        int go = b.element_order(t.gens[i]);
        for (int x = 0; x < n; ++x)
            if (a.element_order(x) == go) cand[i].push_back(static_cast<elem_t>(x));
        if (cand[i].empty()) return false;
    }
    std::vector<std::size_t> idx(k, 0);
    std::vector<elem_t> img(n), himg(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) himg[i] = cand[i][idx[i]];
        img[0] = 0;
        for (std::size_t ti = 1; ti < t.bfs_elem.size(); ++ti)
            img[t.bfs_elem[ti]] = a.mul(img[t.bfs_elem[t.bfs_parent[ti]]], himg[t.bfs_via[ti]]);
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            for (std::size_t i = 0; i < k; ++i)
                if (img[b.mul(x, t.gens[i])] != a.mul(img[x], himg[i])) {
                    ok = false;
                    break;
                }
        if (ok) {
            ElemSet seen(n);
            for (elem_t y : img) seen.set(y);
            if (seen.count() == n) return true;
        }
        std::size_t pos = 0;
        while (pos < k && ++idx[pos] == cand[pos].size()) idx[pos++] = 0;
        if (pos == k) return false;
    }
}

}  // namespace bisetkit
