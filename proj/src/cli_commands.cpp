#include "twobridge/cli_commands.hpp"

#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "twobridge/braidstats.hpp"
#include "twobridge/diagram.hpp"
#include "twobridge/json_io.hpp"

namespace twobridge::cli {

namespace {

Integer parse_integer(const std::string& s)
{
    static const std::regex kInteger(R"([+-]?[0-9]+)");
    if (!std::regex_match(s, kInteger)) throw std::invalid_argument("not an integer: '" + s + "'");
    return Integer(s);
}

CommandResult usage_error(const std::string& what) { return {kUsage, "", "error: " + what + "\n"}; }

// Runs a command body, mapping invalid input to exit status 2.
template <class Body>
CommandResult guarded(Body&& body)
{
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::length_error& e) {
        return usage_error(e.what());
    }
}

}  // namespace

TwoBridge parse_query(const std::vector<std::string>& args)
{
    if (args.size() == 1) {
        const auto slash = args[0].find('/');
        if (slash == std::string::npos) throw std::invalid_argument("expected p/q, got '" + args[0] + "'");
        return TwoBridge::from(parse_integer(args[0].substr(0, slash)), parse_integer(args[0].substr(slash + 1)));
    }
    if (args.size() == 2) return TwoBridge::from(parse_integer(args[0]), parse_integer(args[1]));
    throw std::invalid_argument("expected p/q or two integers p q");
}

CommandResult cmd_classify(const std::vector<std::string>& args)
{
    return guarded([&] {
        const TwoBridge tb = parse_query(args);
        const auto rec = classification_record(tb, classify(tb), in_lisca_O(tb));
        return CommandResult{kOk, rec.dump() + "\n", ""};
    });
}

CommandResult cmd_cf(const std::vector<std::string>& args, CfForm form)
{
    return guarded([&] {
        const TwoBridge tb = parse_query(args);
        nlohmann::json out;
        switch (form) {
        case CfForm::Neg: out = to_json(neg_cf(tb.r())); break;
        case CfForm::Reg: out = to_json(reg_cf_odd(tb.r())); break;
        case CfForm::Even:
            if (is_even(tb.q()))
                throw std::invalid_argument("--even needs odd q; the mirror " + tb.p().str() + "/" +
                                            Integer(tb.p() - tb.q()).str() + " has odd q");
            out = to_json(murasugi_even_cf(tb.r()));
            break;
        case CfForm::Dual: out = to_json(riemenschneider_dual(neg_cf(tb.r()))); break;
        }
        return CommandResult{kOk, out.dump() + "\n", ""};
    });
}

CommandResult cmd_stats(const std::vector<std::string>& args)
{
    return guarded([&] {
        const TwoBridge tb = parse_query(args);
        return CommandResult{kOk, stats_record(tb.r(), stats_for(tb.r())).dump() + "\n", ""};
    });
}

CommandResult cmd_diagram(const std::vector<std::string>& args, DiagramForm form, DiagramOutput output)
{
    return guarded([&] {
        const TwoBridge tb = parse_query(args);
        const RegCF reg = reg_cf_odd(tb.r());
        if (output == DiagramOutput::Svg) {
            if (form != DiagramForm::Standard) throw std::invalid_argument("--svg renders the standard form only");
            return CommandResult{kOk, render_svg(reg), ""};
        }
        nlohmann::json rec;
        rec["p"] = to_json(tb.p());
        rec["q"] = to_json(tb.q());
        if (form == DiagramForm::Standard) {
            const LinkDiagram d = build_standard(reg);
            rec["form"] = "standard";
            rec["regular_cf"] = to_json(reg);
            rec["diagram"] = diagram_record(d);
            rec["stats"] = to_json(seifert_data(d).second);
        } else {
            // Even q: build the diagram of (p, p-q) and change every crossing.
            const bool mirrored = is_even(tb.q());
            const MurasugiBlocks mb = murasugi_even_cf(mirrored ? tb.r().complement() : tb.r());
            const LinkDiagram d = mirrored ? mirror(build_murasugi(mb)) : build_murasugi(mb);
            rec["form"] = "murasugi";
            rec["blocks"] = to_json(mb);
            rec["mirrored"] = mirrored;
            rec["diagram"] = diagram_record(d);
            rec["stats"] = to_json(seifert_data(d).second);
        }
        return CommandResult{kOk, rec.dump() + "\n", ""};
    });
}

CommandResult cmd_tabulate(const TabulateRequest& req)
{
    if (req.max_p < 2) return usage_error("--max-p must be at least 2");
    const auto rows =
        req.serial ? tabulate_serial(req.max_p, !req.all_pairs) : tabulate_parallel(req.max_p, !req.all_pairs);
    std::ostringstream os;
    if (req.format == TableFormat::Csv) os << csv_header() << '\n';
    for (const auto& row : rows) os << (req.format == TableFormat::Csv ? csv_line(row) : jsonl_line(row)) << '\n';

    if (req.out_path.empty() || req.out_path == "-") return {kOk, os.str(), ""};
    std::ofstream file(req.out_path, std::ios::binary);
    if (!file) return {kVerifyFailed, "", "error: cannot open " + req.out_path + " for writing\n"};
    file << os.str();
    file.close();
    if (!file) return {kVerifyFailed, "", "error: failed writing " + req.out_path + "\n"};
    return {kOk, "", ""};
}

CommandResult cmd_verify(const VerifyRequest& req)
{
    if (req.max_p < 2) return usage_error("--max-p must be at least 2");
    VerifyOptions opts;
    opts.max_p = req.max_p;
    opts.oracle_max_p = req.oracle_max_p;
    opts.fault = req.fault;
    const VerifyReport rep = req.serial ? verify_serial(opts) : verify_parallel(opts);
    std::ostringstream os;
    rep.print(os);
    return {rep.ok() ? kOk : kVerifyFailed, os.str(), ""};
}

}  // namespace twobridge::cli
