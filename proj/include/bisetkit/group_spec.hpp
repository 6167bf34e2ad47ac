#pragma once

#include <string>
#include <vector>

#include "bisetkit/group.hpp"
#include "bisetkit/permutation.hpp"

namespace bisetkit {

struct SpecOptions {
    int order_bound = 256;
};

namespace detail {

inline Group make_cyclic(int n, const std::string& name) {
    std::vector<elem_t> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i * n + j] = static_cast<elem_t>((i + j) % n);
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back(i == 0 ? "e" : "r" + std::to_string(i));
    return make_group_from_table(name, n, std::move(table), std::move(names), false);
}

/// Dihedral group of order 2m; elements s^j r^i with s r s = r^{-1}.
inline Group make_dihedral(int m, const std::string& name) {
    const int n = 2 * m;
    auto id = [m](int j, int i) { return j * m + i; };
    std::vector<elem_t> table(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < m; ++i)
            for (int l = 0; l < 2; ++l)
                for (int k = 0; k < m; ++k) {
                    int jj, ii;
                    if (l == 0) {
                        jj = j;
                        ii = (i + k) % m;
                    } else {
                        jj = 1 - j;
                        ii = ((k - i) % m + m) % m;
                    }
                    table[id(j, i) * n + id(l, k)] = static_cast<elem_t>(id(jj, ii));
                }
    std::vector<std::string> names;
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < m; ++i) {
            std::string nm = j ? "s" : "";
            if (i > 0 || j == 0) nm += "r" + std::to_string(i);
            names.push_back(nm == "r0" ? "e" : nm);
        }
    return make_group_from_table(name, n, std::move(table), std::move(names), false);
}

/// Dicyclic group of order 4m (m = 2 gives Q8, m = 4 gives Q16):
/// a^{2m} = e, b^2 = a^m, b a b^{-1} = a^{-1}.
inline Group make_dicyclic(int m, const std::string& name) {
    const int two_m = 2 * m, n = 4 * m;
    auto id = [two_m](int j, int i) { return j * two_m + i; };
    auto mod = [two_m](int v) { return ((v % two_m) + two_m) % two_m; };
    std::vector<elem_t> table(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < two_m; ++i)
            for (int l = 0; l < 2; ++l)
                for (int k = 0; k < two_m; ++k) {
                    int jj, ii;
                    if (l == 0) {
                        jj = j;
                        ii = mod(i + k);
                    } else if (j == 0) {
                        jj = 1;
                        ii = mod(k - i);
                    } else {  // b^2 = a^m folds back into the rotation part
                        jj = 0;
                        ii = mod(m + k - i);
                    }
                    table[id(j, i) * n + id(l, k)] = static_cast<elem_t>(id(jj, ii));
                }
    std::vector<std::string> names;
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < two_m; ++i) {
            std::string nm = j ? "b" : "";
            if (i > 0) nm += "a" + std::to_string(i);
            names.push_back(nm.empty() ? "e" : nm);
        }
    return make_group_from_table(name, n, std::move(table), std::move(names), false);
}

inline Group make_symmetric(int n, const std::string& name, int bound) {
    if (n <= 1) return make_cyclic(1, name);
    std::vector<Perm> gens;
    Perm t = Perm::identity(n);
    std::swap(t.img[0], t.img[1]);
    gens.push_back(t);
    if (n > 2) {
        Perm c = Perm::identity(n);
        for (int i = 0; i < n; ++i) c.img[i] = (i + 1) % n;
        gens.push_back(c);
    }
    return make_group_from_perms(name, n, gens, bound);
}

inline Group make_alternating(int n, const std::string& name, int bound) {
    if (n <= 2) return make_cyclic(1, name);
    std::vector<Perm> gens;
    Perm three = Perm::identity(n);
    three.img[0] = 1;
    three.img[1] = 2;
    three.img[2] = 0;
    gens.push_back(three);
    if (n >= 4) {
        Perm c = Perm::identity(n);
        if (n % 2 == 1) {
            for (int i = 0; i < n; ++i) c.img[i] = (i + 1) % n;  // full cycle, even for odd n
        } else {
            for (int i = 1; i < n; ++i) c.img[i] = 1 + (i % (n - 1));  // (n-1)-cycle fixing 0
        }
        gens.push_back(c);
    }
    return make_group_from_perms(name, n, gens, bound);
}

inline long long checked_pow(int p, int k, int bound) {
    long long v = 1;
    for (int i = 0; i < k; ++i) {
        v *= p;
        if (v > bound) throw resource_error("group order exceeds bound");
    }
    return v;
}

inline std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (ch == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

inline int parse_int(const std::string& s, const std::string& what) {
    if (s.empty()) throw parse_error("expected integer for " + what);
    for (char c : s)
        if (c < '0' || c > '9') throw parse_error("bad integer '" + s + "' in " + what);
    try {
        return std::stoi(s);
    } catch (const std::exception&) {
        throw parse_error("integer out of range in " + what);
    }
}

inline Group parse_atom(const std::string& spec, const SpecOptions& opt) {
    auto guard = [&](long long order) {
        if (order < 1) throw parse_error("group order must be positive: " + spec);
        if (order > opt.order_bound)
            throw resource_error("group '" + spec + "' exceeds order bound " +
                                 std::to_string(opt.order_bound));
    };
    if (spec == "V4") {  // convenience alias for Elem(2,2)
        Group a = make_cyclic(2, "C2");
        return direct_product(a, a, "V4");
    }
    if (spec == "Q8" || spec == "Q16") {
        int m = spec == "Q8" ? 2 : 4;
        guard(4 * m);
        return make_dicyclic(m, spec);
    }
    if (spec.rfind("Elem(", 0) == 0 && spec.back() == ')') {
        auto inner = spec.substr(5, spec.size() - 6);
        auto parts = split_top_level(inner, ',');
        if (parts.size() != 2) throw parse_error("Elem takes two arguments: " + spec);
        int p = parse_int(parts[0], spec), k = parse_int(parts[1], spec);
        if (!is_prime(p)) throw parse_error("Elem(p,k): p must be prime in " + spec);
        guard(checked_pow(p, k, opt.order_bound));
        if (k == 0) return make_cyclic(1, spec);
        Group cp = make_cyclic(p, "C" + std::to_string(p));
        Group g = k == 1 ? make_cyclic(p, spec) : cp;
        for (int i = 1; i < k; ++i) g = direct_product(g, cp, i + 1 == k ? spec : "");
        return g;
    }
    if (spec.rfind("perm:", 0) == 0) {
        auto rest = spec.substr(5);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw parse_error("perm spec needs degree and cycles: " + spec);
        int degree = parse_int(rest.substr(0, colon), spec);
        if (degree < 1 || degree > 64) throw parse_error("perm degree out of range in " + spec);
        auto body = rest.substr(colon + 1);
        if (body.size() < 2 || body.front() != '[' || body.back() != ']')
            throw parse_error("perm cycles must be bracketed: " + spec);
        std::vector<Perm> gens;
        for (const auto& part : split_top_level(body.substr(1, body.size() - 2), ';'))
            if (!part.empty()) gens.push_back(parse_cycles(part, degree));
        return make_group_from_perms(spec, degree, gens, opt.order_bound);
    }
    if (spec.size() >= 2 && (spec[0] == 'C' || spec[0] == 'D' || spec[0] == 'S' || spec[0] == 'A')) {
        int n = parse_int(spec.substr(1), spec);
        switch (spec[0]) {
            case 'C':
                guard(n);
                return make_cyclic(n, spec);
            case 'D':
                if (n % 2 != 0 || n < 2) throw parse_error("D<n> needs even order >= 2: " + spec);
                guard(n);
                return make_dihedral(n / 2, spec);
            case 'S': {
                if (n > 5) throw parse_error("S<n> supported for n <= 5: " + spec);
                long long order = 1;
                for (int i = 2; i <= n; ++i) order *= i;
                guard(order);
                return make_symmetric(n, spec, opt.order_bound);
            }
            case 'A': {
                if (n > 5) throw parse_error("A<n> supported for n <= 5: " + spec);
                long long order = 1;
                for (int i = 2; i <= n; ++i) order *= i;
                guard(n <= 2 ? 1 : order / 2);
                return make_alternating(n, spec, opt.order_bound);
            }
        }
    }
    throw parse_error("unrecognized group spec: '" + spec + "'");
}

}  // namespace detail

/// Parse the group-spec grammar: atoms C<n>, D<n>, Q8, Q16, S<n>, A<n>,
/// Elem(p,k), V4, perm:<degree>:[<cycles>;...], combined with 'x' for direct
/// products (left associative).
inline Group parse_group_spec(const std::string& spec, const SpecOptions& opt = {}) {
    if (spec.empty()) throw parse_error("empty group spec");
    auto parts = detail::split_top_level(spec, 'x');
    Group acc;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].empty()) throw parse_error("empty factor in product spec: " + spec);
        Group g = detail::parse_atom(parts[i], opt);
        if (i == 0) {
            acc = g;
        } else {
            if (static_cast<long long>(acc.order()) * g.order() > opt.order_bound)
                throw resource_error("product '" + spec + "' exceeds order bound " +
                                     std::to_string(opt.order_bound));
            acc = direct_product(acc, g, i + 1 == parts.size() ? spec : "");
        }
    }
    return acc;
}

}  // namespace bisetkit
