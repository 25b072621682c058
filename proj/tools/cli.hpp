#pragma once

// gerbectl front end: argument parsing, dispatch and JSON reporting.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gerbe::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
};

struct RunConfig {
  std::string command;
  std::optional<std::string> input_path;
  std::optional<std::string> output_path;

  std::optional<std::int64_t> r;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> genus;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> mode;
  std::optional<std::string> field_degree;
  std::optional<std::int64_t> delta_source;
  std::optional<std::int64_t> delta_target;
  unsigned parallel = 1;
};

/// Parses argv into a RunConfig. Returns nullopt after printing help or a
/// usage error; `exit_code` is set accordingly.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                    int& exit_code);

/// Validates the config against its command, runs it and writes one JSON
/// document (to config.output_path or `out`). Diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gerbe::cli
