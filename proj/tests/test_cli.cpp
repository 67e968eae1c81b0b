#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "twobridge/braidstats.hpp"
#include "twobridge/cli_commands.hpp"
#include "twobridge/json_io.hpp"

using namespace twobridge;
using namespace twobridge::cli;
using nlohmann::json;

namespace {

json parse(const CommandResult& r)
{
    EXPECT_EQ(r.exit_code, kOk) << r.err;
    return json::parse(r.out);
}

}  // namespace

TEST(Cli, ParseQuery)
{
    EXPECT_EQ(parse_query({"16/3"}), TwoBridge::from(16, 3));
    EXPECT_EQ(parse_query({"16", "19"}), TwoBridge::from(16, 3));
    EXPECT_EQ(parse_query({"16/-3"}), TwoBridge::from(16, 13));
    for (const auto& bad : std::vector<std::vector<std::string>>{{"16"}, {"16/4"}, {"a/b"}, {"16/3x"}, {}, {"1", "2", "3"}})
        EXPECT_THROW(parse_query(bad), std::invalid_argument);
}

TEST(Cli, ClassifyExamples)
{
    const auto a = parse(cmd_classify({"16/13"}));
    EXPECT_EQ(a["status"], "LINK_CONDITION_HOLDS_UNDETERMINED");
    EXPECT_EQ(a["neg_cf"], json::parse("[2,2,2,2,4]"));
    EXPECT_EQ(a["components"], 2);
    EXPECT_TRUE(a["lisca_O"].is_null());
    EXPECT_EQ(parse(cmd_classify({"3/2"}))["status"], "QUASIPOSITIVE");
    const auto c = parse(cmd_classify({"9/2"}));
    EXPECT_EQ(c["status"], "NON_QUASIPOSITIVE");
    EXPECT_EQ(c["lisca_O"], json::parse(R"({"m":3,"h":1})"));
}

TEST(Cli, StatsExamples)
{
    const auto a = parse(cmd_stats({"3/1"}));
    EXPECT_EQ(a["b"], 2);
    EXPECT_EQ(a["e"], 3);
    EXPECT_EQ(a["ineq_ok"], true);
    const auto b = parse(cmd_stats({"5/3"}));
    EXPECT_EQ(b["b"], 3);
    EXPECT_EQ(b["e"], 0);
    const auto c = parse(cmd_stats({"7/3"}));
    EXPECT_EQ(c["b"], 3);
    EXPECT_EQ(c["e"], 4);
    EXPECT_EQ(c["r_plus"], 1);
    for (const char* key : {"p", "q", "t", "b", "e", "s", "w", "d_plus", "d_minus", "r_plus", "r_minus", "ineq_ok"})
        EXPECT_TRUE(c.contains(key)) << key;
}

TEST(Cli, CfForms)
{
    EXPECT_EQ(parse(cmd_cf({"16/3"}, CfForm::Neg)), json::parse("[6,2,2]"));
    EXPECT_EQ(parse(cmd_cf({"16/13"}, CfForm::Reg)), json::parse("[1,4,3]"));
    EXPECT_EQ(parse(cmd_cf({"5/3"}, CfForm::Even)), json::parse("[[1],[1]]"));
    EXPECT_EQ(parse(cmd_cf({"16/3"}, CfForm::Dual)), json::parse("[2,2,2,2,4]"));
    EXPECT_EQ(cmd_cf({"5/2"}, CfForm::Even).exit_code, kUsage);
}

TEST(Cli, DiagramOutputs)
{
    const auto s = parse(cmd_diagram({"16/13"}, DiagramForm::Standard, DiagramOutput::Json));
    EXPECT_EQ(s["diagram"]["crossings"].size(), 8u);
    EXPECT_EQ(s["diagram"]["components"].size(), 2u);
    const auto m = parse(cmd_diagram({"7/3"}, DiagramForm::Murasugi, DiagramOutput::Json));
    EXPECT_EQ(m["stats"]["s"], 4);
    EXPECT_EQ(m["stats"]["w"], 5);
    const auto mm = parse(cmd_diagram({"7/4"}, DiagramForm::Murasugi, DiagramOutput::Json));
    EXPECT_EQ(mm["mirrored"], true);
    EXPECT_EQ(mm["stats"]["w"], -5);
    const auto svg = cmd_diagram({"16/13"}, DiagramForm::Standard, DiagramOutput::Svg);
    EXPECT_EQ(svg.exit_code, kOk);
    EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);
    EXPECT_EQ(cmd_diagram({"7/3"}, DiagramForm::Murasugi, DiagramOutput::Svg).exit_code, kUsage);
}

// Command output is the library result serialized, nothing more.
TEST(Cli, MatchesLibrary)
{
    for (int p = 2; p <= 40; ++p)
        for (int q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const auto tb = TwoBridge::from(p, q);
            const std::string arg = std::to_string(p) + "/" + std::to_string(q);
            EXPECT_EQ(cmd_classify({arg}).out, classification_record(tb, classify(tb), in_lisca_O(tb)).dump() + "\n");
            EXPECT_EQ(cmd_stats({arg}).out, stats_record(tb.r(), stats_for(tb.r())).dump() + "\n");
            EXPECT_EQ(parse(cmd_cf({arg}, CfForm::Neg)), to_json(neg_cf(tb.r())));
        }
}

TEST(Cli, Deterministic)
{
    EXPECT_EQ(cmd_tabulate({60, "-", TableFormat::Csv, false, false}).out,
              cmd_tabulate({60, "-", TableFormat::Csv, false, true}).out);
    EXPECT_EQ(cmd_tabulate({30, "-", TableFormat::Jsonl, true, false}).out,
              cmd_tabulate({30, "-", TableFormat::Jsonl, true, false}).out);
    EXPECT_EQ(cmd_verify({40, 0, Fault::None, false}).out, cmd_verify({40, 0, Fault::None, true}).out);
}

TEST(Cli, TabulateToFile)
{
    const auto path = std::filesystem::temp_directory_path() / "twobridge_tabulate_test.jsonl";
    const auto r = cmd_tabulate({5, path.string(), TableFormat::Jsonl, true, false});
    ASSERT_EQ(r.exit_code, kOk) << r.err;
    std::ifstream in(path);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        const auto j = json::parse(line);
        EXPECT_TRUE(j.contains("status"));
        ++n;
    }
    EXPECT_EQ(n, 9);
    std::filesystem::remove(path);
    EXPECT_EQ(cmd_tabulate({5, "/nonexistent-dir/x.csv", TableFormat::Csv, false, false}).exit_code, kVerifyFailed);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(cmd_classify({"6/4"}).exit_code, kUsage);
    EXPECT_EQ(cmd_stats({"x"}).exit_code, kUsage);
    EXPECT_EQ(cmd_tabulate({1, "-", TableFormat::Csv, false, false}).exit_code, kUsage);
    EXPECT_EQ(cmd_verify({1, 0, Fault::None, false}).exit_code, kUsage);
    EXPECT_EQ(cmd_verify({2, 0, Fault::None, false}).exit_code, kOk);
    const auto f = cmd_verify({30, 0, Fault::FlipTreeSignSum, false});
    EXPECT_EQ(f.exit_code, kVerifyFailed);
    EXPECT_NE(f.out.find("first counterexample"), std::string::npos);
}

TEST(JsonIo, RoundTripsAndBigIntegers)
{
    const NegCF a(std::vector<Integer>{6, 2, 2});
    EXPECT_EQ(neg_cf_from_json(to_json(a)), a);
    const RegCF r(std::vector<Integer>{1, 4, 3});
    EXPECT_EQ(reg_cf_from_json(to_json(r)), r);
    const MurasugiBlocks mb(std::vector<std::vector<Integer>>{{1, 2}, {1}});
    EXPECT_EQ(to_json(mb).dump(), "[[1,2],[1]]");
    EXPECT_EQ(blocks_from_json(to_json(mb)), mb);
    const Integer big = (Integer(1) << 80) + 1;
    EXPECT_TRUE(to_json(big).is_string());
    EXPECT_EQ(integer_from_json(to_json(big)), big);
    EXPECT_EQ(to_json(Integer(-5)), json(-5));
}
