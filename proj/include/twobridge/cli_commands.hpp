#pragma once

// Subcommand bodies for the command-line front end. Argument parsing
// lives in tools/; everything here returns its output instead of printing
// so the commands can be tested directly.

#include <cstdint>
#include <string>
#include <vector>

#include "twobridge/classify.hpp"
#include "twobridge/sweep.hpp"

namespace twobridge::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

struct CommandResult {
    int exit_code = kOk;
    std::string out;
    std::string err;
};

/// "p/q" or two separate integers. q may be negative or exceed p; it is
/// reduced modulo p. Throws std::invalid_argument on malformed or
/// non-coprime input.
TwoBridge parse_query(const std::vector<std::string>& args);

enum class CfForm { Neg, Reg, Even, Dual };
enum class DiagramForm { Standard, Murasugi };
enum class DiagramOutput { Json, Svg };
enum class TableFormat { Csv, Jsonl };

CommandResult cmd_classify(const std::vector<std::string>& args);
CommandResult cmd_cf(const std::vector<std::string>& args, CfForm form);
CommandResult cmd_stats(const std::vector<std::string>& args);
CommandResult cmd_diagram(const std::vector<std::string>& args, DiagramForm form, DiagramOutput output);

struct TabulateRequest {
    std::int64_t max_p = 0;
    std::string out_path;  // "-" for stdout
    TableFormat format = TableFormat::Csv;
    bool all_pairs = false;
    bool serial = false;
};
CommandResult cmd_tabulate(const TabulateRequest& req);

struct VerifyRequest {
    std::int64_t max_p = 0;
    std::int64_t oracle_max_p = 0;
    Fault fault = Fault::None;
    bool serial = false;
};
CommandResult cmd_verify(const VerifyRequest& req);

}  // namespace twobridge::cli
