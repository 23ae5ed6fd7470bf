#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace degpow::cli {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20240601;
  int workers = 0;
};

/// Suites in run order: core, exact, continuous, oracle, cli.
std::vector<std::string> suite_names();

/// Runs one named suite, or every suite for "all". Throws
/// std::invalid_argument for unknown names.
std::vector<CheckResult> run_suite(std::string_view name, const VerifyOptions& options = {});

} // namespace degpow::cli
