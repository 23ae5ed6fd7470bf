#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace degpow::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_verification = 2,
  exit_resource = 3,
};

/// Parsed command line. Exactly one subcommand is set.
struct CommandSpec {
  std::string subcommand; // phi-exact, turan, psi, landscape, threshold, scan, oracle, verify
  std::optional<int> r;
  std::optional<double> p;
  std::optional<int> n;
  double p_lo = 0.0;
  double p_hi = 0.0;
  double step = 0.1;
  int count = 101;
  double tol = 1e-3;
  std::optional<double> bracket_lo;
  std::optional<double> bracket_hi;
  int n_lo = 1;
  bool csv = false;
  std::string out_path;
  std::uint64_t cap = 100'000'000;
  bool allow_n8 = false;
  std::uint64_t seed = 20240601;
  std::string forbid_graph;
  std::string suite = "all";
  int workers = 0;
  bool restricted = false;
  bool compare = false;
  bool trend = false;
};

/// Executes a parsed command. Errors are reported as one line on `err`:
///   error: code=<exit code> kind=<usage|verification|resource> reason=<text>
int run(const CommandSpec& command, std::ostream& out, std::ostream& err);

/// Parses argv and runs the command.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace degpow::cli
