// bisetkit: exact dimensions of simple biset-functor evaluations, Burnside
// ring invariants, and corpus-wide property verification.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bisetkit/cli.hpp"

namespace {

struct FlagSet {
    std::string method = "both";
    std::string output = "table";
};

void add_common(CLI::App* sub, bisetkit::cli::RunConfig& cfg, FlagSet& flags) {
    sub->add_option("--output", flags.output, "Output format: table or json")
        ->default_str("table");
    sub->add_option("--order-bound", cfg.order_bound, "Largest admissible group order")
        ->default_val(256);
}

}  // namespace

int main(int argc, char** argv) {
    using bisetkit::cli::RunConfig;
    RunConfig cfg;
    FlagSet flags;

    CLI::App app{
        "Exact dimensions of simple biset-functor evaluations by two independent routes,\n"
        "with Burnside-ring invariants and corpus-wide property verification."};
    app.require_subcommand(1);

    CLI::App* dim = app.add_subcommand(
        "dim-simple", "Dimension of a simple evaluation, by counting and/or Gram rank");
    dim->add_option("--group", cfg.group_spec, "Group spec for G")->required();
    dim->add_option("--H", cfg.aux_spec, "Group spec for the p-group H")->required();
    dim->add_option("--prime", cfg.prime, "The prime p")->required();
    dim->add_option("--method", flags.method, "count, rank, or both")->default_str("both");
    add_common(dim, cfg, flags);

    CLI::App* bgroup = app.add_subcommand("bgroup", "Decide whether G is a B-group");
    bgroup->add_option("--group", cfg.group_spec, "Group spec for G")->required();
    add_common(bgroup, cfg, flags);

    CLI::App* beta = app.add_subcommand("beta", "Largest B-group quotient of G");
    beta->add_option("--group", cfg.group_spec, "Group spec for G")->required();
    add_common(beta, cfg, flags);

    CLI::App* mnumber = app.add_subcommand(
        "mnumber", "Rational m-numbers of G at normal subgroups of a given shape");
    mnumber->add_option("--group", cfg.group_spec, "Group spec for G")->required();
    mnumber->add_option("--N", cfg.aux_spec, "Shape of the normal subgroup")->required();
    add_common(mnumber, cfg, flags);

    CLI::App* ep = app.add_subcommand(
        "ep-rank", "Rank of the p-elementary ghost image of the Burnside ring");
    ep->add_option("--group", cfg.group_spec, "Group spec for G")->required();
    ep->add_option("--prime", cfg.prime, "The prime p")->required();
    add_common(ep, cfg, flags);

    CLI::App* marks = app.add_subcommand("marks", "Table of marks of G");
    marks->add_option("--group", cfg.group_spec, "Group spec for G")->required();
    add_common(marks, cfg, flags);

    CLI::App* lemma42 = app.add_subcommand(
        "lemma42", "Spectral check of the scalar-product incidence matrix");
    lemma42->set_help_flag("--help", "Print this help message and exit");  // frees --h
    lemma42->add_option("--p", cfg.lemma_p, "The prime p")->required();
    lemma42->add_option("--e", cfg.lemma_e, "Exponent e >= 0")->required();
    lemma42->add_option("--h", cfg.lemma_h, "Exponent h >= 3")->default_val(3);
    add_common(lemma42, cfg, flags);

    CLI::App* verify = app.add_subcommand(
        "verify-corpus", "Run every module's property suite over a corpus of groups");
    verify->add_option("--corpus", cfg.corpus_path,
                       "Corpus file (default: $BISETKIT_CORPUS, then built-in)");
    add_common(verify, cfg, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return bisetkit::cli::exit_parse;
    }

    for (CLI::App* sub : {dim, bgroup, beta, mnumber, ep, marks, lemma42, verify})
        if (app.got_subcommand(sub)) cfg.command = sub->get_name();

    try {
        cfg.method = bisetkit::cli::method_from_string(flags.method);
        cfg.output = bisetkit::cli::output_from_string(flags.output);
    } catch (const bisetkit::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bisetkit::cli::exit_parse;
    }

    return bisetkit::cli::run(cfg, std::cout, std::cerr);
}
