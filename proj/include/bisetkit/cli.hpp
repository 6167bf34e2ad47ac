#pragma once

// Command-line surface: a parsed RunConfig is turned into a JSON document
// plus an exit code, rendered either as JSON or as an aligned text table.
// Flag wiring lives in the binary's main; everything here is testable
// in-process.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

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
#include "bisetkit/section_count.hpp"
#include "bisetkit/verify.hpp"

namespace bisetkit::cli {

using Json = nlohmann::ordered_json;

// Exit codes: the pass/fail channel of the tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_parse = 2;     // bad flags, specs, or preconditions
inline constexpr int exit_mismatch = 3;  // independent computations disagree
inline constexpr int exit_resource = 4;  // order bound or cap exceeded

enum class Method { count, rank, both };
enum class OutputMode { table, json };

inline Method method_from_string(const std::string& s) {
    if (s == "count") return Method::count;
    if (s == "rank") return Method::rank;
    if (s == "both") return Method::both;
    throw parse_error("--method must be one of count|rank|both, got '" + s + "'");
}

inline const char* to_string(Method m) {
    switch (m) {
        case Method::count: return "count";
        case Method::rank: return "rank";
        case Method::both: return "both";
    }
    return "?";
}

inline OutputMode output_from_string(const std::string& s) {
    if (s == "table") return OutputMode::table;
    if (s == "json") return OutputMode::json;
    throw parse_error("--output must be one of json|table, got '" + s + "'");
}

struct RunConfig {
    std::string command;
    std::string group_spec;               // --group
    std::string aux_spec;                 // --H (dim-simple) or --N (mnumber)
    int prime = 0;                        // --prime
    Method method = Method::both;         // --method
    OutputMode output = OutputMode::table;  // --output
    std::string corpus_path;              // --corpus; empty: env, then built-in
    int order_bound = 256;                // --order-bound
    int lemma_p = 0;                      // --p
    int lemma_e = 0;                      // --e
    int lemma_h = 3;                      // --h
};

struct Report {
    Json doc;
    int exit_code = exit_ok;
};

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

/// Exact rational as a pair of decimal strings; never floats.
inline Json rational_json(const BRational& v) {
    Json j = Json::object();
    j["num"] = v.num().str();
    j["den"] = v.den().str();
    return j;
}

inline std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

namespace detail {

inline bool is_rational_obj(const Json& v) {
    return v.is_object() && v.size() == 2 && v.contains("num") && v.contains("den") &&
           v["num"].is_string() && v["den"].is_string();
}

inline std::string scalar_str(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();  // numbers and booleans
}

inline std::string cell_str(const Json& v) {
    if (is_rational_obj(v)) {
        const std::string num = v["num"].get<std::string>();
        const std::string den = v["den"].get<std::string>();
        return den == "1" ? num : num + "/" + den;
    }
    return scalar_str(v);
}

/// One-line rendering for primitives, rationals, flat objects, and arrays of
/// cells; block values (matrices, arrays of records) return no value.
inline std::optional<std::string> inline_str(const Json& v) {
    if (v.is_primitive() || is_rational_obj(v)) return cell_str(v);
    if (v.is_object()) {
        std::string s = "{";
        bool first = true;
        for (const auto& [k, u] : v.items()) {
            if (!u.is_primitive()) return std::nullopt;
            if (!first) s += ", ";
            first = false;
            s += k + ": " + scalar_str(u);
        }
        return s + "}";
    }
    if (v.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_primitive() && !is_rational_obj(v[i])) return std::nullopt;
            if (i) s += ", ";
            s += cell_str(v[i]);
        }
        return s + "]";
    }
    return std::nullopt;
}

inline void render_grid(std::ostream& os, const std::vector<std::vector<std::string>>& rows,
                        bool right_align) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j >= width.size()) width.resize(j + 1, 0);
            width[j] = std::max(width[j], row[j].size());
        }
    for (const auto& row : rows) {
        os << "  ";
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << "  ";
            const std::size_t pad = width[j] - row[j].size();
            if (right_align)
                os << std::string(pad, ' ') << row[j];
            else
                os << row[j] << (j + 1 < row.size() ? std::string(pad, ' ') : std::string());
        }
        os << "\n";
    }
}

}  // namespace detail

/// Aligned-table rendering of a report document.
inline std::string render_table(const Json& doc) {
    std::size_t keyw = 0;
    for (const auto& [k, v] : doc.items())
        if (detail::inline_str(v)) keyw = std::max(keyw, k.size());
    std::ostringstream os;
    for (const auto& [k, v] : doc.items()) {
        if (std::optional<std::string> s = detail::inline_str(v)) {
            os << k << ":" << std::string(keyw - k.size() + 1, ' ') << *s << "\n";
            continue;
        }
        os << k << ":\n";
        std::vector<std::vector<std::string>> rows;
        bool right_align = true;
        if (v.is_array() && !v.empty() && v[0].is_array()) {  // matrix
            for (const Json& r : v) {
                std::vector<std::string> row;
                for (const Json& e : r) row.push_back(detail::cell_str(e));
                rows.push_back(std::move(row));
            }
        } else if (v.is_array() && !v.empty() && v[0].is_object()) {  // records
            right_align = false;
            std::vector<std::string> header;
            for (const auto& [col, u] : v[0].items()) header.push_back(col);
            rows.push_back(header);
            for (const Json& r : v) {
                std::vector<std::string> row;
                for (const std::string& col : header)
                    row.push_back(r.contains(col) ? detail::cell_str(r[col]) : "-");
                rows.push_back(std::move(row));
            }
        } else {  // nested object or empty array: one line per entry
            right_align = false;
            if (v.is_object())
                for (const auto& [k2, u] : v.items())
                    rows.push_back({k2, detail::inline_str(u).value_or(u.dump())});
            if (rows.empty()) rows.push_back({"(empty)"});
        }
        detail::render_grid(os, rows, right_align);
    }
    return os.str();
}

inline std::string render(const Report& rep, OutputMode mode) {
    return mode == OutputMode::json ? render_json(rep.doc) : render_table(rep.doc);
}

// ---------------------------------------------------------------------------
// Shared argument handling
// ---------------------------------------------------------------------------

namespace detail {

inline Group parse_group_arg(const std::string& spec, const char* flag, int order_bound) {
    if (spec.empty()) throw parse_error(std::string("missing required ") + flag);
    SpecOptions opt;
    opt.order_bound = order_bound;
    return parse_group_spec(spec, opt);
}

inline void require_prime(int p, const char* flag) {
    if (!is_prime(p))
        throw parse_error(std::string(flag) + " must be a prime, got " + std::to_string(p));
}

/// Best grammar-expressible name for a group, for display purposes.
inline std::string shape_name(const Group& g) {
    const long long n = g.order();
    if (set_is_cyclic(g, ElemSet::full(g.order()))) return "C" + std::to_string(n);
    for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
        if (!is_power_of(n, p)) continue;
        int k = 0;
        for (long long m = n; m > 1; m /= p) ++k;
        bool elementary = true;
        for (int x = 1; x < g.order() && elementary; ++x) {
            int y = x;
            for (int i = 1; i < p; ++i) y = g.mul(y, x);
            if (y != 0) elementary = false;
        }
        if (elementary && g.center_set().count() == g.order()) {
            if (k == 2) return "C" + std::to_string(p) + "xC" + std::to_string(p);
            return "Elem(" + std::to_string(p) + "," + std::to_string(k) + ")";
        }
        break;  // n is a power of exactly one prime
    }
    for (const char* cand : {"S3", "D8", "Q8", "D10", "A4", "D12", "D16", "Q16", "D8xC2",
                             "Q8xC2", "C2xC4", "C2xC8", "C4xC4", "C2xC2xC4", "S4", "C3xC9",
                             "C2xC2xC6", "C2xC12", "A5", "S5"}) {
        Group model = parse_group_spec(cand);
        if (model.order() == n && isomorphic(model, g)) return cand;
    }
    return g.name();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

inline Report run_dim_simple(const RunConfig& cfg) {
    const Group g = detail::parse_group_arg(cfg.group_spec, "--group", cfg.order_bound);
    const Group h = detail::parse_group_arg(cfg.aux_spec, "--H", cfg.order_bound);
    detail::require_prime(cfg.prime, "--prime");
    if (!is_power_of(h.order(), cfg.prime))
        throw parse_error("--H must be a group of order a power of --prime");

    Report rep;
    Json& doc = rep.doc;
    doc["command"] = "dim-simple";
    doc["group"] = cfg.group_spec;
    doc["H"] = cfg.aux_spec;
    doc["prime"] = cfg.prime;
    doc["method"] = to_string(cfg.method);
    long long by_count = -1, by_rank = -1;
    if (cfg.method != Method::rank) {
        const DimReport d = dim_simple_count_route(g, h, cfg.prime);
        by_count = d.dim;
        doc["dim_count"] = d.dim;
        doc["case"] = to_string(d.case_tag);
    }
    if (cfg.method != Method::count) {
        by_rank = dim_simple_rank_route(g, h, cfg.prime);
        doc["dim_rank"] = by_rank;
    }
    if (cfg.method == Method::both) {
        const bool agree = by_count == by_rank;
        doc["dim"] = agree ? Json(by_count) : Json(nullptr);
        doc["agree"] = agree;
        if (!agree) rep.exit_code = exit_mismatch;
    } else {
        doc["dim"] = cfg.method == Method::count ? by_count : by_rank;
    }
    return rep;
}

inline Report run_bgroup(const RunConfig& cfg) {
    const Group g = detail::parse_group_arg(cfg.group_spec, "--group", cfg.order_bound);
    Report rep;
    rep.doc["command"] = "bgroup";
    rep.doc["group"] = cfg.group_spec;
    rep.doc["order"] = g.order();
    rep.doc["is_b_group"] = is_b_group(g);
    return rep;
}

inline Report run_beta(const RunConfig& cfg) {
    const Group g = detail::parse_group_arg(cfg.group_spec, "--group", cfg.order_bound);
    const Group b = beta(g);
    Report rep;
    rep.doc["command"] = "beta";
    rep.doc["group"] = cfg.group_spec;
    rep.doc["order"] = g.order();
    rep.doc["beta_order"] = b.order();
    rep.doc["beta_shape"] = detail::shape_name(b);
    return rep;
}

inline Report run_mnumber(const RunConfig& cfg) {
    const Group g = detail::parse_group_arg(cfg.group_spec, "--group", cfg.order_bound);
    const Group shape = detail::parse_group_arg(cfg.aux_spec, "--N", cfg.order_bound);
    const SubgroupLattice& lat = lattice_of(g);
    Json matches = Json::array();
    for (int i = 0; i < lat.size(); ++i) {
        if (!lat.is_normal(i) || lat.at(i).order() != shape.order()) continue;
        if (!isomorphic(from_subgroup(g, lat.at(i).members).group, shape)) continue;
        Json row = Json::object();
        row["subgroup"] = i;
        row["order"] = lat.at(i).order();
        row["m"] = rational_json(m_number(g, lat.at(i)));
        matches.push_back(std::move(row));
    }
    if (matches.empty())
        throw parse_error("no normal subgroup of " + cfg.group_spec + " has shape " +
                          cfg.aux_spec);
    Report rep;
    rep.doc["command"] = "mnumber";
    rep.doc["group"] = cfg.group_spec;
    rep.doc["N"] = cfg.aux_spec;
    rep.doc["matches"] = std::move(matches);
    return rep;
}

inline Report run_ep_rank(const RunConfig& cfg) {
    const Group g = detail::parse_group_arg(cfg.group_spec, "--group", cfg.order_bound);
    detail::require_prime(cfg.prime, "--prime");
    const int nc = lattice_of(g).class_count();
    const int rank = e_p_rank(g, cfg.prime);
    const std::optional<Int> index = m_p_f_p_index(g, cfg.prime);
    Report rep;
    rep.doc["command"] = "ep-rank";
    rep.doc["group"] = cfg.group_spec;
    rep.doc["prime"] = cfg.prime;
    rep.doc["class_count"] = nc;
    rep.doc["rank"] = rank;
    rep.doc["vanishing_rank"] = nc - rank;
    rep.doc["mp_fp_index"] = index ? Json(index->str()) : Json(nullptr);
    return rep;
}

inline Report run_marks(const RunConfig& cfg) {
    const Group g = detail::parse_group_arg(cfg.group_spec, "--group", cfg.order_bound);
    const SubgroupLattice& lat = lattice_of(g);
    const Matrix<Int>& tm = table_of_marks(g);
    Json classes = Json::array();
    for (int cc = 0; cc < lat.class_count(); ++cc) {
        int size = 0;
        for (int i = 0; i < lat.size(); ++i)
            if (lat.class_of(i) == cc) ++size;
        Json row = Json::object();
        row["index"] = cc;
        row["order"] = lat.at(lat.class_rep(cc)).order();
        row["class_size"] = size;
        classes.push_back(std::move(row));
    }
    Json matrix = Json::array();
    for (std::size_t i = 0; i < tm.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < tm.cols(); ++j)
            row.push_back(tm(i, j).convert_to<long long>());
        matrix.push_back(std::move(row));
    }
    Report rep;
    rep.doc["command"] = "marks";
    rep.doc["group"] = cfg.group_spec;
    rep.doc["order"] = g.order();
    rep.doc["class_count"] = lat.class_count();
    rep.doc["classes"] = std::move(classes);
    rep.doc["matrix"] = std::move(matrix);
    return rep;
}

inline Report run_lemma42(const RunConfig& cfg) {
    detail::require_prime(cfg.lemma_p, "--p");
    if (cfg.lemma_e < 0) throw parse_error("--e must be non-negative");
    if (cfg.lemma_h < 3) throw parse_error("--h must be at least 3");
    const SpectralReport sr = lemma42_matrix(cfg.lemma_p, cfg.lemma_e, cfg.lemma_h);
    Report rep;
    Json& doc = rep.doc;
    doc["command"] = "lemma42";
    doc["p"] = sr.p;
    doc["e"] = sr.e;
    doc["h"] = sr.h;
    doc["size"] = static_cast<long long>(sr.s.rows());
    doc["row_sum"] = sr.row_sum;
    doc["rows_constant"] = sr.rows_constant;
    Json spectrum = Json::object();
    for (const auto& [value, mult] : sr.expected_spectrum)
        spectrum[value.str()] = static_cast<long long>(mult);
    doc["spectrum"] = std::move(spectrum);
    Json characteristic = Json::array();  // coefficients, lowest degree first
    for (const Int& coeff : sr.characteristic) characteristic.push_back(coeff.str());
    doc["characteristic"] = std::move(characteristic);
    const bool pass = sr.spectral_identity && sr.rows_constant;
    doc["verdict"] = pass ? "PASS" : "FAIL";
    if (!pass) rep.exit_code = exit_mismatch;
    return rep;
}

Report build_report(const RunConfig& cfg);  // forward declaration

/// Round-trip property over genuine command outputs: parsing the emitted
/// JSON and re-rendering it must reproduce the bytes exactly.
inline PropertyResult json_roundtrip_property() {
    bisetkit::detail::Check c;
    std::vector<RunConfig> samples;
    auto add = [&samples](RunConfig cfg) { samples.push_back(std::move(cfg)); };
    {
        RunConfig s;
        s.command = "dim-simple", s.group_spec = "S3", s.aux_spec = "C1", s.prime = 2;
        s.method = Method::both;
        add(s);
        s.group_spec = "C2xC2", s.aux_spec = "C2xC2", s.method = Method::count;
        add(s);
        s.group_spec = "D8", s.aux_spec = "C2", s.method = Method::rank;
        add(s);
    }
    {
        RunConfig s;
        s.command = "bgroup", s.group_spec = "A4";
        add(s);
        s.command = "beta", s.group_spec = "C12";
        add(s);
        s.command = "beta", s.group_spec = "D8";
        add(s);
        s.command = "mnumber", s.group_spec = "A4", s.aux_spec = "V4";
        add(s);
        s.command = "ep-rank", s.group_spec = "S3", s.prime = 2, s.aux_spec = "";
        add(s);
        s.command = "marks", s.group_spec = "S3";
        add(s);
    }
    {
        RunConfig s;
        s.command = "lemma42", s.lemma_p = 2, s.lemma_e = 1, s.lemma_h = 3;
        add(s);
    }
    for (const RunConfig& cfg : samples) {
        const Report rep = build_report(cfg);
        const std::string text = render_json(rep.doc);
        const std::string again = render_json(Json::parse(text));
        c.expect(text == again, [&] { return cfg.command + ": JSON round-trip not identical"; });
        c.expect(!render_table(rep.doc).empty(),
                 [&] { return cfg.command + ": empty table rendering"; });
    }
    return bisetkit::detail::finish("cli", "json-roundtrip", c);
}

inline Report run_verify_corpus(const RunConfig& cfg) {
    const CorpusSource src = resolve_corpus(cfg.corpus_path);
    VerifyOptions vopt;
    vopt.order_bound = cfg.order_bound;
    std::vector<PropertyResult> results = verify_corpus(src.specs, vopt);
    results.push_back(json_roundtrip_property());

    Report rep;
    Json& doc = rep.doc;
    doc["command"] = "verify-corpus";
    doc["corpus"] = src.origin;
    doc["groups"] = static_cast<long long>(src.specs.size());
    Json props = Json::array();
    long long checks = 0;
    bool pass = true;
    for (const PropertyResult& r : results) {
        Json row = Json::object();
        row["module"] = r.module;
        row["property"] = r.name;
        row["verdict"] = r.pass ? "PASS" : "FAIL";
        row["checks"] = r.checks;
        row["detail"] = r.detail;
        props.push_back(std::move(row));
        checks += r.checks;
        pass = pass && r.pass;
    }
    doc["properties"] = std::move(props);
    doc["total_checks"] = checks;
    doc["all_pass"] = pass;
    if (!pass) rep.exit_code = exit_mismatch;
    return rep;
}

inline Report build_report(const RunConfig& cfg) {
    if (cfg.command == "dim-simple") return run_dim_simple(cfg);
    if (cfg.command == "bgroup") return run_bgroup(cfg);
    if (cfg.command == "beta") return run_beta(cfg);
    if (cfg.command == "mnumber") return run_mnumber(cfg);
    if (cfg.command == "ep-rank") return run_ep_rank(cfg);
    if (cfg.command == "marks") return run_marks(cfg);
    if (cfg.command == "lemma42") return run_lemma42(cfg);
    if (cfg.command == "verify-corpus") return run_verify_corpus(cfg);
    throw parse_error("unknown command '" + cfg.command + "'");
}

/// Full in-process run: build, render to out, map errors to exit codes.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const Report rep = build_report(cfg);
        out << render(rep, cfg.output);
        return rep.exit_code;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const resource_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_resource;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}

}  // namespace bisetkit::cli
