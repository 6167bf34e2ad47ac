#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bisetkit/errors.hpp"
#include "bisetkit/permutation.hpp"

namespace bisetkit {

using elem_t = std::uint16_t;

/// Subset of group elements as a bitset over element indices.
class ElemSet {
public:
    ElemSet() : n_(0) {}
    explicit ElemSet(int n) : n_(n), b_((n + 63) / 64, 0) {}

    static ElemSet full(int n) {
        ElemSet s(n);
        for (int i = 0; i < n; ++i) s.set(i);
        return s;
    }
    static ElemSet single(int n, int i) {
        ElemSet s(n);
        s.set(i);
        return s;
    }

    int universe() const { return n_; }
    void set(int i) { b_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { b_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (b_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto w : b_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (auto w : b_)
            if (w) return false;
        return true;
    }

    ElemSet& operator&=(const ElemSet& o) {
        for (std::size_t i = 0; i < b_.size(); ++i) b_[i] &= o.b_[i];
        return *this;
    }
    ElemSet& operator|=(const ElemSet& o) {
        for (std::size_t i = 0; i < b_.size(); ++i) b_[i] |= o.b_[i];
        return *this;
    }
    friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }
    friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }

    bool operator==(const ElemSet& o) const { return n_ == o.n_ && b_ == o.b_; }
    bool operator!=(const ElemSet& o) const { return !(*this == o); }

    bool subset_of(const ElemSet& o) const {
        for (std::size_t i = 0; i < b_.size(); ++i)
            if (b_[i] & ~o.b_[i]) return false;
        return true;
    }
    bool intersects(const ElemSet& o) const {
        for (std::size_t i = 0; i < b_.size(); ++i)
            if (b_[i] & o.b_[i]) return true;
        return false;
    }

    int first() const { return next(-1); }
    int next(int i) const {
        for (int j = i + 1; j < n_; ++j) {
            if (b_[j >> 6] == 0) { j |= 63; continue; }
            if (test(j)) return j;
        }
        return -1;
    }

    std::vector<int> members() const {
        std::vector<int> v;
        v.reserve(count());
        for (int i = first(); i >= 0; i = next(i)) v.push_back(i);
        return v;
    }

    /// Order used everywhere a canonical sequence of subgroups is needed:
    /// compare member lists lexicographically.  Equivalent formulation: look
    /// at the smallest element on which the two sets differ; the set that
    /// contains it comes first.
    bool set_less(const ElemSet& o) const {
        for (std::size_t i = 0; i < b_.size(); ++i) {
            std::uint64_t d = b_[i] ^ o.b_[i];
            if (d) {
                std::uint64_t low = d & (~d + 1);
                return b_[i] & low;
            }
        }
        return false;
    }

private:
    int n_;
    std::vector<std::uint64_t> b_;
};

/// One-shot type-erased cache slot.  Groups are immutable once built; heavy
/// derived structures (subgroup lattice, generating tuple, fingerprint) are
/// computed at most once and shared, which keeps concurrent readers safe.
class AnyCache {
public:
    template <class T, class F>
    std::shared_ptr<const T> get(F&& make) const {
        std::call_once(flag_, [&] { value_ = std::shared_ptr<const void>(new T(make())); });
        return std::static_pointer_cast<const T>(value_);
    }

private:
    mutable std::once_flag flag_;
    mutable std::shared_ptr<const void> value_;
};

struct GroupData {
    std::string name;
    int n = 0;
    std::vector<elem_t> table;  // n*n, table[a*n+b] = a.b
    std::vector<elem_t> inv;
    std::vector<int> elem_order;
    std::vector<std::string> elem_names;  // optional; index used when empty

    AnyCache lattice_cache;
    AnyCache gens_cache;
    AnyCache fingerprint_cache;
    AnyCache marks_cache;
};

/// A finite group given by its composition table.  Cheap to copy (shared,
/// immutable data).  Element 0 is always the identity.
class Group {
public:
    Group() = default;
    explicit Group(std::shared_ptr<const GroupData> d) : d_(std::move(d)) {}

    bool valid() const { return static_cast<bool>(d_); }
    const GroupData& data() const { return *d_; }
    const std::shared_ptr<const GroupData>& data_ptr() const { return d_; }
    bool same_instance(const Group& o) const { return d_.get() == o.d_.get(); }

    const std::string& name() const { return d_->name; }
    int order() const { return d_->n; }
    elem_t mul(int a, int b) const { return d_->table[a * d_->n + b]; }
    elem_t inv(int a) const { return d_->inv[a]; }
    elem_t conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
    int element_order(int a) const { return d_->elem_order[a]; }

    std::string element_name(int a) const {
        if (!d_->elem_names.empty()) return d_->elem_names[a];
        return "g" + std::to_string(a);
    }

    /// Closure of a seed set under multiplication (subgroup generated by it).
    ElemSet closure(const ElemSet& seed) const {
        const int n = d_->n;
        ElemSet s(n);
        s.set(0);
        std::vector<int> gens = seed.members();
        std::vector<int> queue{0};
        for (int g : gens)
            if (!s.test(g)) {
                s.set(g);
                queue.push_back(g);
            }
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int x = queue[qi];
            for (int g : gens) {
                int y = mul(x, g);
                if (!s.test(y)) {
                    s.set(y);
                    queue.push_back(y);
                }
            }
        }
        return s;
    }

    ElemSet closure_of(std::initializer_list<int> gens) const {
        ElemSet seed(d_->n);
        for (int g : gens) seed.set(g);
        return closure(seed);
    }

    bool is_subgroup_set(const ElemSet& s) const {
        if (!s.test(0)) return false;
        for (int a = s.first(); a >= 0; a = s.next(a))
            for (int b = s.first(); b >= 0; b = s.next(b))
                if (!s.test(mul(a, b))) return false;
        return true;
    }

    ElemSet conj_set(int g, const ElemSet& s) const {
        ElemSet out(d_->n);
        for (int x = s.first(); x >= 0; x = s.next(x)) out.set(conj(g, x));
        return out;
    }

    bool normalizes(int g, const ElemSet& s) const {
        for (int x = s.first(); x >= 0; x = s.next(x))
            if (!s.test(conj(g, x))) return false;
        return true;
    }

    /// Is s normal under conjugation by every element of ambient?
    bool normal_under(const ElemSet& s, const ElemSet& ambient) const {
        for (int g = ambient.first(); g >= 0; g = ambient.next(g))
            if (!normalizes(g, s)) return false;
        return true;
    }

    ElemSet normalizer_in(const ElemSet& ambient, const ElemSet& s) const {
        ElemSet out(d_->n);
        for (int g = ambient.first(); g >= 0; g = ambient.next(g))
            if (normalizes(g, s)) out.set(g);
        return out;
    }

    ElemSet centralizer_in(const ElemSet& ambient, const ElemSet& s) const {
        ElemSet out(d_->n);
        for (int g = ambient.first(); g >= 0; g = ambient.next(g)) {
            bool central = true;
            for (int x = s.first(); x >= 0; x = s.next(x))
                if (mul(g, x) != mul(x, g)) { central = false; break; }
            if (central) out.set(g);
        }
        return out;
    }

    ElemSet center_set() const { return centralizer_in(ElemSet::full(d_->n), ElemSet::full(d_->n)); }

    ElemSet derived_set() const {
        ElemSet comms(d_->n);
        for (int a = 0; a < d_->n; ++a)
            for (int b = 0; b < d_->n; ++b)
                comms.set(mul(mul(a, b), mul(inv(a), inv(b))));
        return closure(comms);
    }

    bool is_abelian() const {
        for (int a = 0; a < d_->n; ++a)
            for (int b = a + 1; b < d_->n; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    /// |X.Y| as a plain element-set product (valid whether or not it is a
    /// subgroup): |X||Y| / |X meet Y|.
    long long product_size(const ElemSet& x, const ElemSet& y) const {
        return static_cast<long long>(x.count()) * y.count() / (x & y).count();
    }

    ElemSet set_product(const ElemSet& x, const ElemSet& y) const {
        ElemSet out(d_->n);
        for (int a = x.first(); a >= 0; a = x.next(a))
            for (int b = y.first(); b >= 0; b = y.next(b)) out.set(mul(a, b));
        return out;
    }

private:
    std::shared_ptr<const GroupData> d_;
};

/// Subgroup = parent group + member set.  Values compare equal only when they
/// live in the same parent instance and have the same members.
struct Subgroup {
    Group parent;
    ElemSet members;

    int order() const { return members.count(); }
    bool contains(int e) const { return members.test(e); }
    bool is_trivial() const { return order() == 1; }
    bool is_whole_group() const { return order() == parent.order(); }

    bool operator==(const Subgroup& o) const {
        return parent.same_instance(o.parent) && members == o.members;
    }
    bool operator!=(const Subgroup& o) const { return !(*this == o); }
};

/// Section: S normal in T, both subgroups of the same parent.
struct Section {
    Subgroup top;
    Subgroup bottom;
};

struct Homomorphism {
    Group source;
    Group target;
    std::vector<elem_t> images;  // per source element

    elem_t operator()(int x) const { return images[x]; }

    bool verify() const {
        const int n = source.order();
        if (images[0] != 0) return false;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (images[source.mul(a, b)] != target.mul(images[a], images[b])) return false;
        return true;
    }

    ElemSet image_set() const {
        ElemSet s(target.order());
        for (elem_t y : images) s.set(y);
        return s;
    }

    bool is_surjective() const { return image_set().count() == target.order(); }

    Subgroup kernel() const {
        ElemSet k(source.order());
        for (int x = 0; x < source.order(); ++x)
            if (images[x] == 0) k.set(x);
        return Subgroup{source, k};
    }
};

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

/// Full axiom check: closure, identity at index 0, inverses, associativity.
/// O(n^3); meant for construction-time validation and the property suite.
inline bool check_axioms(const Group& g, std::string* why = nullptr) {
    const int n = g.order();
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) >= n) return fail("entry out of range");
    for (int a = 0; a < n; ++a)
        if (g.mul(0, a) != a || g.mul(a, 0) != a) return fail("identity is not neutral");
    for (int a = 0; a < n; ++a)
        if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0) return fail("inverse failure");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    return fail("associativity failure");
    return true;
}

namespace detail {

inline void finish_group_data(GroupData& d) {
    const int n = d.n;
    d.inv.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (d.table[a * n + b] == 0) d.inv[a] = static_cast<elem_t>(b);
    d.elem_order.assign(n, 1);
    for (int a = 1; a < n; ++a) {
        int x = a, len = 1;  // x = a^len throughout
        while (x != 0) {
            x = d.table[x * n + a];
            if (++len > n)  // valid tables reach the identity within n steps
                throw precondition_error("group table is invalid: power chain never closes");
        }
        d.elem_order[a] = len;  // exits with x = a^len = identity, len minimal
    }
}

}  // namespace detail

/// Build from an explicit table.  Index 0 must be the identity.
inline Group make_group_from_table(std::string name, int n, std::vector<elem_t> table,
                                   std::vector<std::string> elem_names = {}, bool verify = true) {
    auto d = std::make_shared<GroupData>();
    d->name = std::move(name);
    d->n = n;
    d->table = std::move(table);
    d->elem_names = std::move(elem_names);
    detail::finish_group_data(*d);
    Group g{std::shared_ptr<const GroupData>(d)};
    if (verify) {
        std::string why;
        if (!check_axioms(g, &why))
            throw precondition_error("group table for '" + g.name() + "' is invalid: " + why);
    }
    return g;
}

/// Closure of permutation generators.  Element order: identity first, the
/// rest sorted by image vector; this makes construction deterministic.
inline Group make_group_from_perms(std::string name, int degree, const std::vector<Perm>& gens,
                                   int order_bound) {
    std::vector<Perm> elems{Perm::identity(degree)};
    std::vector<Perm> queue = elems;
    auto known = [&](const Perm& p) {
        return std::find(elems.begin(), elems.end(), p) != elems.end();
    };
    for (const Perm& g : gens)
        if (!known(g)) {
            elems.push_back(g);
            queue.push_back(g);
        }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Perm x = queue[qi];
        for (const Perm& g : gens) {
            Perm y = x * g;
            if (!known(y)) {
                if (static_cast<int>(elems.size()) >= order_bound)
                    throw resource_error("permutation closure exceeds order bound " +
                                         std::to_string(order_bound));
                elems.push_back(y);
                queue.push_back(y);
            }
        }
    }
    std::sort(elems.begin() + 1, elems.end());
    const int n = static_cast<int>(elems.size());
    auto index_of = [&](const Perm& p) {
        if (p.is_identity()) return 0;
        auto it = std::lower_bound(elems.begin() + 1, elems.end(), p);
        return static_cast<int>(it - elems.begin());
    };
    auto d = std::make_shared<GroupData>();
    d->name = std::move(name);
    d->n = n;
    d->table.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            d->table[a * n + b] = static_cast<elem_t>(index_of(elems[a] * elems[b]));
    d->elem_names.reserve(n);
    for (const Perm& p : elems) d->elem_names.push_back(p.cycle_string());
    detail::finish_group_data(*d);
    return Group{std::shared_ptr<const GroupData>(d)};
}

inline Group direct_product(const Group& a, const Group& b, std::string name = {}) {
    const int na = a.order(), nb = b.order(), n = na * nb;
    auto d = std::make_shared<GroupData>();
    d->name = name.empty() ? a.name() + "x" + b.name() : std::move(name);
    d->n = n;
    d->table.resize(static_cast<std::size_t>(n) * n);
    for (int a1 = 0; a1 < na; ++a1)
        for (int b1 = 0; b1 < nb; ++b1)
            for (int a2 = 0; a2 < na; ++a2)
                for (int b2 = 0; b2 < nb; ++b2) {
                    int x = a1 * nb + b1, y = a2 * nb + b2;
                    d->table[x * n + y] =
                        static_cast<elem_t>(a.mul(a1, a2) * nb + b.mul(b1, b2));
                }
    d->elem_names.reserve(n);
    for (int a1 = 0; a1 < na; ++a1)
        for (int b1 = 0; b1 < nb; ++b1)
            d->elem_names.push_back("(" + a.element_name(a1) + "," + b.element_name(b1) + ")");
    detail::finish_group_data(*d);
    return Group{std::shared_ptr<const GroupData>(d)};
}

/// Quotient T/S of a section (S normal in T), with the projection and a
/// transversal of coset representatives (minimal representative per coset,
/// so coset 0 is S itself and ordering is deterministic).
struct QuotientResult {
    Group group;
    std::vector<int> proj;      // parent element -> coset index, -1 outside T
    std::vector<elem_t> reps;   // coset index -> minimal parent representative
};

inline QuotientResult section_quotient(const Group& g, const ElemSet& top, const ElemSet& bottom,
                                       std::string name = {}) {
    if (!bottom.subset_of(top))
        throw precondition_error("section_quotient: bottom is not inside top");
    if (!g.is_subgroup_set(top) || !g.is_subgroup_set(bottom))
        throw precondition_error("section_quotient: arguments are not subgroups");
    if (!g.normal_under(bottom, top))
        throw precondition_error("section_quotient: bottom is not normal in top");
    const int n = g.order();
    std::vector<int> proj(n, -1);
    std::vector<elem_t> reps;
    for (int x = top.first(); x >= 0; x = top.next(x)) {
        if (proj[x] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(static_cast<elem_t>(x));
        for (int s = bottom.first(); s >= 0; s = bottom.next(s)) proj[g.mul(x, s)] = c;
    }
    const int q = static_cast<int>(reps.size());
    auto d = std::make_shared<GroupData>();
    d->name = name.empty() ? "(" + g.name() + " section)/" : std::move(name);
    d->n = q;
    d->table.resize(static_cast<std::size_t>(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            d->table[i * q + j] = static_cast<elem_t>(proj[g.mul(reps[i], reps[j])]);
    d->elem_names.reserve(q);
    for (int i = 0; i < q; ++i) d->elem_names.push_back("[" + g.element_name(reps[i]) + "]");
    detail::finish_group_data(*d);
    return QuotientResult{Group{std::shared_ptr<const GroupData>(d)}, std::move(proj),
                          std::move(reps)};
}

inline QuotientResult quotient(const Group& g, const Subgroup& n, std::string name = {}) {
    if (!n.parent.same_instance(g))
        throw precondition_error("quotient: subgroup belongs to a different group instance");
    if (name.empty()) name = g.name() + "/N";
    return section_quotient(g, ElemSet::full(g.order()), n.members, std::move(name));
}

/// A subgroup reified as a standalone Group, with both directions of the
/// element correspondence.
struct SubgroupEmbedding {
    Group group;
    std::vector<elem_t> to_parent;  // local index -> parent element
    std::vector<int> from_parent;   // parent element -> local index, -1 outside
};

inline SubgroupEmbedding from_subgroup(const Group& g, const ElemSet& members,
                                       std::string name = {}) {
    if (!g.is_subgroup_set(members)) throw precondition_error("from_subgroup: not a subgroup");
    std::vector<int> mem = members.members();
    const int m = static_cast<int>(mem.size());
    std::vector<int> back(g.order(), -1);
    for (int i = 0; i < m; ++i) back[mem[i]] = i;
    auto d = std::make_shared<GroupData>();
    d->name = name.empty() ? g.name() + " subgroup" : std::move(name);
    d->n = m;
    d->table.resize(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            d->table[i * m + j] = static_cast<elem_t>(back[g.mul(mem[i], mem[j])]);
    d->elem_names.reserve(m);
    for (int i = 0; i < m; ++i) d->elem_names.push_back(g.element_name(mem[i]));
    detail::finish_group_data(*d);
    std::vector<elem_t> fwd(mem.size());
    for (int i = 0; i < m; ++i) fwd[i] = static_cast<elem_t>(mem[i]);
    return SubgroupEmbedding{Group{std::shared_ptr<const GroupData>(d)}, std::move(fwd),
                             std::move(back)};
}

// ---------------------------------------------------------------------------
// p-structure
// ---------------------------------------------------------------------------

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline bool is_power_of(long long n, int p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

/// Largest normal p-subgroup of the subgroup spanned by `within`.  An element
/// lies in it exactly when its normal closure (inside `within`) is a p-group.
inline ElemSet p_core_set(const Group& g, const ElemSet& within, int p) {
    ElemSet core(g.order());
    for (int x = within.first(); x >= 0; x = within.next(x)) {
        if (!is_power_of(g.element_order(x), p)) continue;
        ElemSet seed(g.order());
        for (int c = within.first(); c >= 0; c = within.next(c)) seed.set(g.conj(c, x));
        ElemSet ncl = g.closure(seed);
        bool pgrp = true;
        for (int y = ncl.first(); y >= 0; y = ncl.next(y))
            if (!is_power_of(g.element_order(y), p)) { pgrp = false; break; }
        if (pgrp) core |= ncl;
    }
    if (!g.is_subgroup_set(core.empty() ? ElemSet::single(g.order(), 0) : core))
        throw error("p_core: internal inconsistency");
    if (core.empty()) core.set(0);
    return core;
}

inline Subgroup p_core(const Group& g, int p) {
    return Subgroup{g, p_core_set(g, ElemSet::full(g.order()), p)};
}

inline bool set_is_cyclic(const Group& g, const ElemSet& s) {
    const int n = s.count();
    for (int x = s.first(); x >= 0; x = s.next(x))
        if (g.element_order(x) == n) return true;
    return false;
}

/// Is the subgroup spanned by `s` a direct product (p-group) x (cyclic p')?
/// Criterion: with P = O_p(S) and m = |S|/|P|, p must not divide m and some
/// element of order m must centralize P; such an element spans the cyclic
/// complement, which is then automatically normal.
inline bool is_p_elementary_set(const Group& g, const ElemSet& s, int p) {
    if (!is_prime(p)) throw precondition_error("is_p_elementary: p must be prime");
    ElemSet core = p_core_set(g, s, p);
    long long m = s.count() / core.count();
    if (m % p == 0) return false;
    if (m == 1) return true;  // s itself is a p-group
    ElemSet cent = g.centralizer_in(s, core);
    for (int x = cent.first(); x >= 0; x = cent.next(x))
        if (g.element_order(x) == m) return true;
    return false;
}

inline bool is_p_elementary(const Group& g, int p) {
    return is_p_elementary_set(g, ElemSet::full(g.order()), p);
}

// ---------------------------------------------------------------------------
// Isomorphism-invariant fingerprint (cheap reject before the real search)
// ---------------------------------------------------------------------------

struct Fingerprint {
    int order = 0;
    bool abelian = false;
    int center = 0;
    int derived = 0;
    std::vector<std::pair<int, int>> order_histogram;  // (element order, count)

    bool operator==(const Fingerprint& o) const {
        return order == o.order && abelian == o.abelian && center == o.center &&
               derived == o.derived && order_histogram == o.order_histogram;
    }
};

inline const Fingerprint& fingerprint(const Group& g) {
    // The cache owns the value for the lifetime of the group data, so
    // returning a reference through the temporary shared_ptr is safe.
    auto hold = g.data().fingerprint_cache.get<Fingerprint>([&] {
        Fingerprint f;
        f.order = g.order();
        f.abelian = g.is_abelian();
        f.center = g.center_set().count();
        f.derived = g.derived_set().count();
        std::vector<std::pair<int, int>> h;
        for (int x = 0; x < g.order(); ++x) {
            int o = g.element_order(x);
            auto it = std::find_if(h.begin(), h.end(), [&](auto& e) { return e.first == o; });
            if (it == h.end())
                h.emplace_back(o, 1);
            else
                ++it->second;
        }
        std::sort(h.begin(), h.end());
        f.order_histogram = std::move(h);
        return f;
    });
    return *hold;
}

}  // namespace bisetkit
