// twobridge: classify two-bridge links K(p,q) and inspect their invariants.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twobridge/cli_commands.hpp"

namespace cli = twobridge::cli;

namespace {

int emit(const cli::CommandResult& r)
{
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quasipositivity and braid statistics of two-bridge links K(p,q)"};
    app.require_subcommand(1);

    std::vector<std::string> query;
    auto add_query = [&](CLI::App* sub) {
        sub->add_option("query", query, "p/q, or p and q as two integers")->required()->expected(1, 2);
    };

    auto* classify = app.add_subcommand("classify", "Decide quasipositivity (JSON record)");
    add_query(classify);

    auto* cf = app.add_subcommand("cf", "Print a continued fraction expansion as JSON");
    add_query(cf);
    auto* cf_forms = cf->add_option_group("form");
    bool f_neg = false, f_reg = false, f_even = false, f_dual = false;
    cf_forms->add_flag("--neg", f_neg, "negative expansion of p/q (default)");
    cf_forms->add_flag("--reg", f_reg, "odd-length regular expansion of p/q");
    cf_forms->add_flag("--even", f_even, "signed even blocks of p/(p-q); q odd");
    cf_forms->add_flag("--dual", f_dual, "negative expansion of p/(p-q) via point-diagram duality");
    cf_forms->require_option(0, 1);

    auto* stats = app.add_subcommand("stats", "Braid index, exponent sum, Seifert data and r+/- (JSON)");
    add_query(stats);

    auto* diagram = app.add_subcommand("diagram", "Export a diagram");
    add_query(diagram);
    bool d_json = false, d_svg = false;
    std::string d_form = "standard";
    auto* d_out = diagram->add_option_group("output");
    d_out->add_flag("--json", d_json, "crossing list with signs and connectivity (default)");
    d_out->add_flag("--svg", d_svg, "twist-box layout of the standard diagram");
    d_out->require_option(0, 1);
    diagram->add_option("--form", d_form, "standard or murasugi")
        ->check(CLI::IsMember({"standard", "murasugi"}));

    auto* tabulate = app.add_subcommand("tabulate", "Tabulate every pair with p <= max-p");
    cli::TabulateRequest tab;
    std::string tab_format = "csv";
    tabulate->add_option("--max-p", tab.max_p, "largest p")->required();
    tabulate->add_option("--out", tab.out_path, "output file, - for stdout")->default_val("-");
    tabulate->add_option("--format", tab_format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    tabulate->add_flag("--all", tab.all_pairs, "keep every q, not only the isotopy representative");
    tabulate->add_flag("--serial", tab.serial, "use the single-threaded reference sweep");

    auto* verify = app.add_subcommand("verify", "Run every invariant check for p <= max-p");
    cli::VerifyRequest ver;
    std::string fault = "none";
    verify->add_option("--max-p", ver.max_p, "largest p")->required();
    verify->add_option("--oracle-max-p", ver.oracle_max_p, "largest p for diagram-level checks (default max-p)");
    verify->add_option("--inject-fault", fault, "harness self-test: none or tree-sign")
        ->check(CLI::IsMember({"none", "tree-sign"}));
    verify->add_flag("--serial", ver.serial, "use the single-threaded reference sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kUsage;
    }

    if (*classify) return emit(cli::cmd_classify(query));
    if (*cf) {
        const auto form = f_reg ? cli::CfForm::Reg : f_even ? cli::CfForm::Even : f_dual ? cli::CfForm::Dual
                                                                                       : cli::CfForm::Neg;
        return emit(cli::cmd_cf(query, form));
    }
    if (*stats) return emit(cli::cmd_stats(query));
    if (*diagram) {
        const auto form = d_form == "murasugi" ? cli::DiagramForm::Murasugi : cli::DiagramForm::Standard;
        return emit(cli::cmd_diagram(query, form, d_svg ? cli::DiagramOutput::Svg : cli::DiagramOutput::Json));
    }
    if (*tabulate) {
        tab.format = tab_format == "jsonl" ? cli::TableFormat::Jsonl : cli::TableFormat::Csv;
        return emit(cli::cmd_tabulate(tab));
    }
    if (*verify) {
        ver.fault = fault == "tree-sign" ? twobridge::Fault::FlipTreeSignSum : twobridge::Fault::None;
        return emit(cli::cmd_verify(ver));
    }
    return cli::kUsage;
}
