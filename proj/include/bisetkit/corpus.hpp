#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bisetkit/errors.hpp"
#include "bisetkit/group.hpp"
#include "bisetkit/group_spec.hpp"

// Corpus handling: the built-in default group list, corpus files (one group
// spec per line, `#` starts a comment), and the BISETKIT_CORPUS override.

namespace bisetkit {

/// The groups every corpus-wide property run covers by default: the named
/// groups of order up to 24, the order-16 2-groups the spec grammar can
/// express, and a family of 3-groups up to order 27.
inline const std::vector<std::string>& default_corpus_specs() {
    static const std::vector<std::string> specs = {
        // cyclic
        "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12",
        "C13", "C14", "C15", "C16", "C17", "C18", "C19", "C20", "C21", "C22", "C23",
        "C24",
        // dihedral (order n)
        "D4", "D6", "D8", "D10", "D12", "D14", "D16", "D18", "D20", "D22", "D24",
        // dicyclic and permutation groups
        "Q8", "Q16", "S3", "S4", "A4",
        // abelian products
        "C2xC2", "C2xC4", "C2xC6", "C2xC8", "C2xC10", "C2xC12", "C4xC4",
        "C2xC2xC4", "C2xC2xC6", "Elem(2,3)", "Elem(2,4)",
        // remaining order-16 2-groups in the grammar
        "D8xC2", "Q8xC2",
        // 3-groups and 3-rich products
        "C3xC3", "C3xC6", "C3xC9", "Elem(3,3)", "C27", "Q8xC3", "D8xC3", "C3xS3",
    };
    return specs;
}

/// Split corpus text into spec tokens: one per line, `#` to end of line is a
/// comment, surrounding whitespace ignored, empty lines skipped.
inline std::vector<std::string> parse_corpus_text(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::size_t a = line.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) continue;
        const std::size_t b = line.find_last_not_of(" \t\r\n");
        out.push_back(line.substr(a, b - a + 1));
    }
    return out;
}

inline std::vector<std::string> load_corpus_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot read corpus file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_corpus_text(buf.str());
}

struct CorpusSource {
    std::vector<std::string> specs;
    std::string origin;  // "built-in" or the file path
};

/// Pick the corpus: an explicit path wins, then the BISETKIT_CORPUS
/// environment variable, then the built-in default list.
inline CorpusSource resolve_corpus(const std::string& explicit_path = {}) {
    if (!explicit_path.empty()) return {load_corpus_file(explicit_path), explicit_path};
    if (const char* env = std::getenv("BISETKIT_CORPUS"); env && *env)
        return {load_corpus_file(env), env};
    return {default_corpus_specs(), "built-in"};
}

/// Parse every spec in the list; malformed entries surface as parse_error
/// with the offending token.
inline std::vector<Group> corpus_groups(const std::vector<std::string>& specs,
                                        const SpecOptions& opt = {}) {
    std::vector<Group> out;
    out.reserve(specs.size());
    for (const std::string& s : specs) out.push_back(parse_group_spec(s, opt));
    return out;
}

}  // namespace bisetkit
