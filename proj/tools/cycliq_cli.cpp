// Command-line front end: series, limits, q^-1 expansions, brute-force
// censuses, and cross-verification for cyclic-matrix proportions in
// subspace stabilisers over F_q.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cycliq/run.hpp"

namespace {

struct CommonFlags {
    std::string group = "gl";
    std::string mode;
    std::string format = "json";
    cycliq::RunConfig cfg;
};

void add_group_flag(CLI::App* sub, CommonFlags& flags) {
    sub->add_option("--group", flags.group, "gl (invertible stabiliser) or m (matrix algebra)")
        ->check(CLI::IsMember({"gl", "m"}));
}

void add_format_flag(CLI::App* sub, CommonFlags& flags) {
    sub->add_option("--format", flags.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic-matrix proportions in maximal reducible groups and algebras over F_q"};
    app.require_subcommand(1);

    CommonFlags flags;
    cycliq::RunConfig& cfg = flags.cfg;

    auto* series = app.add_subcommand("series", "truncated generating function of cyclic proportions");
    add_group_flag(series, flags);
    series->add_option("--r", cfg.r, "invariant subspace dimension (0 gives the full group/algebra)");
    series->add_option("--order", cfg.order, "truncation order in t")->default_val(16);
    series->add_option("--q", cfg.q, "numeric field size (switches to numeric mode)");
    series->add_option("--mode", flags.mode, "numeric or symbolic")
        ->check(CLI::IsMember({"numeric", "symbolic"}));
    series->add_flag("--approx", cfg.approx, "append decimal renderings (derived, not exact)");
    add_format_flag(series, flags);

    auto* limit = app.add_subcommand("limit", "exact limiting proportion as the dimension grows");
    add_group_flag(limit, flags);
    limit->add_option("--r", cfg.r, "invariant subspace dimension");
    add_format_flag(limit, flags);

    auto* expand = app.add_subcommand("expand", "q^-1 expansion of the limiting proportion");
    add_group_flag(expand, flags);
    expand->add_option("--r", cfg.r, "invariant subspace dimension");
    expand->add_option("--order", cfg.order, "expansion order in q^-1")->default_val(7);
    expand->add_option("--q", cfg.q, "evaluation point for --approx");
    expand->add_flag("--approx", cfg.approx, "append a decimal evaluation at --q");
    add_format_flag(expand, flags);

    auto* census = app.add_subcommand("census", "exhaustive cyclic count in GL(V)_U or M(V)_U");
    census->add_option("--q", cfg.q, "prime field size (<= 7)")->required();
    census->add_option("--n", cfg.n, "matrix dimension")->required();
    census->add_option("--r", cfg.r, "invariant subspace dimension")->required();
    census->add_flag("--invertible", cfg.invertible, "restrict to the invertible stabiliser");
    census->add_option("--max-enum", cfg.max_enumeration, "enumeration size guard")
        ->default_val(100000000);
    census->add_option("--shards", cfg.shards, "number of enumeration shards (0 = auto)");
    census->add_flag("--approx", cfg.approx, "append the decimal proportion");
    add_format_flag(census, flags);

    auto* verify = app.add_subcommand("verify", "census vs series, exact rational comparison");
    verify->add_option("--q", cfg.q, "prime field size (<= 7)")->required();
    verify->add_option("--n", cfg.n, "matrix dimension")->required();
    verify->add_option("--r", cfg.r, "invariant subspace dimension")->required();
    verify->add_flag("--invertible", cfg.invertible, "restrict to the invertible stabiliser");
    verify->add_option("--max-enum", cfg.max_enumeration, "enumeration size guard")
        ->default_val(100000000);
    verify->add_option("--shards", cfg.shards, "number of enumeration shards (0 = auto)");
    verify->add_flag("--approx", cfg.approx, "append the decimal proportion");
    add_format_flag(verify, flags);

    auto* tlambda = app.add_subcommand("tlambda", "noncyclic eigenvector-coset family per lambda");
    tlambda->add_option("--q", cfg.q, "prime field size (<= 7)")->required();
    tlambda->add_option("--n", cfg.n, "matrix dimension")->required();
    tlambda->add_option("--r", cfg.r, "invariant subspace dimension")->required();
    tlambda->add_option("--max-enum", cfg.max_enumeration, "enumeration size guard")
        ->default_val(100000000);
    add_format_flag(tlambda, flags);

    CLI11_PARSE(app, argc, argv);

    if (series->parsed()) cfg.command = cycliq::Command::series;
    if (limit->parsed()) cfg.command = cycliq::Command::limit;
    if (expand->parsed()) cfg.command = cycliq::Command::expand;
    if (census->parsed()) cfg.command = cycliq::Command::census;
    if (verify->parsed()) cfg.command = cycliq::Command::verify;
    if (tlambda->parsed()) cfg.command = cycliq::Command::tlambda;

    cfg.group = flags.group == "gl" ? cycliq::Ambient::group : cycliq::Ambient::algebra;
    cfg.format = flags.format == "json" ? cycliq::Format::json : cycliq::Format::csv;

    const bool census_like = cfg.command == cycliq::Command::census ||
                             cfg.command == cycliq::Command::verify ||
                             cfg.command == cycliq::Command::tlambda;
    if (!flags.mode.empty())
        cfg.mode = flags.mode == "numeric" ? cycliq::Mode::numeric : cycliq::Mode::symbolic;
    else if (census_like || (cfg.command == cycliq::Command::series && cfg.q >= 2))
        cfg.mode = cycliq::Mode::numeric;
    else
        cfg.mode = cycliq::Mode::symbolic;

    return cycliq::run(cfg, std::cout, std::cerr);
}
