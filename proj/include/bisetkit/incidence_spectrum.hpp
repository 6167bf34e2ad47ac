#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bisetkit/errors.hpp"
#include "bisetkit/group.hpp"
#include "bisetkit/matrix.hpp"
#include "bisetkit/rational.hpp"

// Scalar-line incidence matrix behind the `lemma42` subcommand.  Index the
// rows by pairs (a, b) of vectors of F_p^e; two pairs are incident when their
// differences are proportional, i.e. b - b' = lambda (a - a') for some scalar
// lambda.  The resulting 0/1 matrix has unit diagonal, constant row sums
// p^{e+1} - p + 1, and exactly three eigenvalues; the report carries the
// matrix together with an exact characteristic-polynomial verification of
// that spectrum.

namespace bisetkit {

struct SpectralReport {
    int p = 0;
    int e = 0;
    int h = 0;
    Matrix<Int> s;                                               // p^{2e} square
    std::vector<std::pair<Int, std::size_t>> expected_spectrum;  // (eigenvalue, multiplicity)
    std::vector<Int> characteristic;                             // lowest degree first
    long long row_sum = 0;
    bool rows_constant = false;
    bool spectral_identity = false;
};

inline SpectralReport lemma42_matrix(int p, int e, int h) {
    if (!is_prime(p)) throw precondition_error("lemma42_matrix: p must be prime");
    if (e < 0) throw precondition_error("lemma42_matrix: e must be non-negative");
    if (h < 3) throw precondition_error("lemma42_matrix: h must be at least 3");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > 16)
            throw resource_error("lemma42_matrix: index set exceeds 256 pairs");
    }
    const long long n = q * q;  // pair (a, b) lives at index a*q + b

    // digits[v] = the vector of F_p^e behind index v
    std::vector<std::vector<int>> digits(q, std::vector<int>(e));
    for (long long v = 0; v < q; ++v) {
        long long rest = v;
        for (int i = 0; i < e; ++i) {
            digits[v][i] = static_cast<int>(rest % p);
            rest /= p;
        }
    }
    auto proportional = [&](const std::vector<int>& da, const std::vector<int>& db) {
        for (int lambda = 0; lambda < p; ++lambda) {
            bool ok = true;
            for (int i = 0; i < e && ok; ++i) ok = (lambda * da[i] - db[i]) % p == 0;
            if (ok) return true;
        }
        return e == 0;  // empty vectors are always proportional
    };

    SpectralReport rep;
    rep.p = p;
    rep.e = e;
    rep.h = h;
    rep.s = Matrix<Int>(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    std::vector<int> da(e), db(e);
    for (long long r = 0; r < n; ++r)
        for (long long c = 0; c < n; ++c) {
            const auto &a = digits[r / q], &b = digits[r % q];
            const auto &a2 = digits[c / q], &b2 = digits[c % q];
            for (int i = 0; i < e; ++i) {
                da[i] = (a[i] - a2[i] + p) % p;
                db[i] = (b[i] - b2[i] + p) % p;
            }
            rep.s(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                proportional(da, db) ? 1 : 0;
        }

    rep.rows_constant = true;
    for (long long r = 0; r < n; ++r) {
        long long sum = 0;
        for (long long c = 0; c < n; ++c)
            sum += rep.s(static_cast<std::size_t>(r), static_cast<std::size_t>(c))
                       .convert_to<long long>();
        if (r == 0)
            rep.row_sum = sum;
        else if (sum != rep.row_sum)
            rep.rows_constant = false;
    }

    long long pe1 = q * p;  // p^{e+1}
    const std::pair<Int, std::size_t> eigen[] = {
        {Int(pe1 - p + 1), 1},
        {Int(q - p + 1), static_cast<std::size_t>(pe1 - p)},
        {Int(1 - p), static_cast<std::size_t>(n - pe1 + p - 1)},
    };
    for (const auto& ev : eigen)
        if (ev.second > 0) rep.expected_spectrum.push_back(ev);

    rep.characteristic = char_poly(rep.s);
    rep.spectral_identity = rep.characteristic == poly_from_roots(rep.expected_spectrum);
    return rep;
}

}  // namespace bisetkit
