#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "bisetkit/errors.hpp"

namespace bisetkit {

/// Permutations of {0..d-1} stored as image vectors.  Composition is
/// left-to-right: (a * b) maps x to b[a[x]].
struct Perm {
    std::vector<int> img;

    static Perm identity(int degree) {
        Perm p;
        p.img.resize(degree);
        for (int i = 0; i < degree; ++i) p.img[i] = i;
        return p;
    }

    int degree() const { return static_cast<int>(img.size()); }

    Perm operator*(const Perm& o) const {
        Perm r;
        r.img.resize(img.size());
        for (std::size_t i = 0; i < img.size(); ++i) r.img[i] = o.img[img[i]];
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.img.resize(img.size());
        for (std::size_t i = 0; i < img.size(); ++i) r.img[img[i]] = static_cast<int>(i);
        return r;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < img.size(); ++i)
            if (img[i] != static_cast<int>(i)) return false;
        return true;
    }

    bool operator==(const Perm& o) const { return img == o.img; }
    bool operator<(const Perm& o) const { return img < o.img; }

    bool is_even() const {
        std::vector<bool> seen(img.size(), false);
        int transpositions = 0;
        for (std::size_t i = 0; i < img.size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (std::size_t j = i; !seen[j]; j = img[j]) { seen[j] = true; ++len; }
            transpositions += len - 1;
        }
        return transpositions % 2 == 0;
    }

    /// Cycle notation with 1-based points, e.g. "(1 2)(3 4)"; "()" for identity.
    std::string cycle_string() const {
        std::vector<bool> seen(img.size(), false);
        std::string out;
        for (std::size_t i = 0; i < img.size(); ++i) {
            if (seen[i] || img[i] == static_cast<int>(i)) { seen[i] = true; continue; }
            out += "(";
            bool first = true;
            for (std::size_t j = i; !seen[j]; j = img[j]) {
                seen[j] = true;
                if (!first) out += " ";
                out += std::to_string(j + 1);
                first = false;
            }
            out += ")";
        }
        return out.empty() ? "()" : out;
    }
};

/// Parse disjoint-or-not cycles like "(1 2)(3 4 5)" over 1-based points.
/// Non-disjoint cycles compose left-to-right.
inline Perm parse_cycles(const std::string& text, int degree) {
    Perm result = Perm::identity(degree);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i; };
    skip_ws();
    if (i >= text.size()) return result;
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '(') throw parse_error("cycle syntax: expected '(' in " + text);
        ++i;
        std::vector<int> pts;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ')') { ++i; break; }
            std::size_t start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            if (start == i) throw parse_error("cycle syntax: expected point in " + text);
            int pt = std::stoi(text.substr(start, i - start));
            if (pt < 1 || pt > degree)
                throw parse_error("cycle point out of range in " + text);
            pts.push_back(pt - 1);
            skip_ws();
            if (i < text.size() && text[i] == ',') ++i;  // tolerate comma separators
        }
        Perm cyc = Perm::identity(degree);
        for (std::size_t k = 0; k < pts.size(); ++k) cyc.img[pts[k]] = pts[(k + 1) % pts.size()];
        std::vector<bool> used(degree, false);
        for (int p : pts) {
            if (used[p]) throw parse_error("repeated point inside a cycle in " + text);
            used[p] = true;
        }
        result = result * cyc;
    }
    return result;
}

}  // namespace bisetkit
