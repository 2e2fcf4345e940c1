#include <CLI11.hpp>

#include "commands.hpp"

using hurwitzkit::cli::JobConfig;

int main(int argc, char** argv)
{
    CLI::App app{"Exact Hurwitz numbers, Hodge integrals and their structure checks"};
    app.require_subcommand(1);
    JobConfig config;
    app.add_option("--format", config.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", config.out, "write to this file instead of stdout");
    app.fallthrough();

    auto* hurwitz = app.add_subcommand("hurwitz", "one connected Hurwitz number H^g_alpha");
    hurwitz->add_option("--g", config.g)->required();
    hurwitz->add_option("--alpha", config.alpha, "ramification over infinity, e.g. 1,1,2")->required();
    hurwitz->add_option("--method", config.method, "oracle, cutjoin, elsv or closed-form");

    auto* table = app.add_subcommand("table", "all H^g_alpha with |alpha| <= dmax");
    table->add_option("--dmax", config.d_max);
    table->add_option("--gmax", config.g_max);
    table->add_option("--rmax", config.r_max, "cap on branch points instead of genus");
    table->add_option("--method", config.method, "oracle or cutjoin");

    auto* fit = app.add_subcommand("fit", "fit the genus-g structure constants and primitive brackets");
    fit->add_option("--g", config.g)->required();
    fit->add_option("--dmax", config.d_max, "fitting depth");

    auto* hodge = app.add_subcommand("hodge", "evaluate <tau_theta lambda_k>_g");
    hodge->add_option("--g", config.g)->required();
    hodge->add_option("--theta", config.theta, "comma-separated psi exponents");
    hodge->add_option("--k", config.k);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", config.suite,
                       "change-theorem, genus-expansion, recursions, closed-forms, oracle-vs-cutjoin or all");
    verify->add_option("--dmax", config.d_max);
    verify->add_option("--rmax", config.r_max);

    auto* search = app.add_subcommand("search", "null space of a family of products of D^p H_g");
    search->add_option("--family", config.family, "JSON family file (default: the genus-3 family)");
    search->add_option("--dmax", config.d_max, "numeric re-check depth");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : hurwitzkit::cli::kUsage;
    }
    config.command = app.get_subcommands().front()->get_name();
    return hurwitzkit::cli::run(config);
}
