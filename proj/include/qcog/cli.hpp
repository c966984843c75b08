#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

namespace qcog::cli {

enum class OutputFormat { json, text };

enum ExitCode : int { kOk = 0, kIoError = 1, kValidationError = 2 };

struct RunConfig {
    std::string command;  // conjunction, chsh, born-fit, lhv-check, ent-fit, report
    std::filesystem::path input_path;
    OutputFormat output_format = OutputFormat::text;
    int precision = 4;  // decimals for text output, 2..12
};

/// Errors are reported on `err`; the return value is an ExitCode.
int cmd_conjunction(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_chsh(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_born_fit(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_lhv_check(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_ent_fit(const RunConfig& config, std::ostream& out, std::ostream& err);

/// `input_path` is a directory holding any of conjunction.csv, born.csv and
/// chsh.json. Exit 1 if it is missing or holds none of them.
int cmd_report(const RunConfig& config, std::ostream& out, std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qcog::cli
