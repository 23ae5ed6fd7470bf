#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "degpow/core/model.hpp"

namespace degpow::exact {

/// Raised when an enumeration would exceed its configured size cap.
class ResourceError : public std::runtime_error {
public:
  ResourceError(const std::string& what, std::uint64_t count, std::uint64_t cap)
      : std::runtime_error(what), count_(count), cap_(cap) {}
  std::uint64_t count() const { return count_; }
  std::uint64_t cap() const { return cap_; }

private:
  std::uint64_t count_;
  std::uint64_t cap_;
};

/// Lexicographic stream of partitions of n into exactly r nondecreasing
/// parts, each at least `min_part`.
class PartitionStream {
public:
  PartitionStream(int n, int r, int min_part = 1);

  /// Next partition, or nullopt when the stream is exhausted.
  std::optional<ClassSizes> next();

private:
  bool advance();

  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<ClassSizes> enumerate_class_sizes(int n, int r);

/// Number of partitions of n into exactly r positive parts; saturates at
/// UINT64_MAX.
std::uint64_t count_class_sizes(int n, int r);

struct ExactResult {
  double value = 0.0;
  /// Every partition within the tie tolerance of value, lexicographic order.
  std::vector<ClassSizes> maximizers;
  bool turan_optimal = false;
  /// True when ties were re-resolved in exact integer arithmetic.
  bool exact_checked = false;
  /// Exact maximum when exact_checked.
  std::optional<ExactInt> exact_value;
  std::uint64_t candidates = 0;
};

struct ExactOptions {
  std::uint64_t cap = 100'000'000;
  /// 0 picks the default worker count.
  int workers = 0;
};

/// Maximum of f_complete_multipartite over every partition of n into r parts.
ExactResult phi_exact(int r, double p, int n, const ExactOptions& options = {});

/// Same maximum restricted to partitions where r-1 of the classes take at
/// most two adjacent values and the remaining class is free.
ExactResult phi_restricted(int r, double p, int n);

/// (r/(p+1)) (p/(p+1))^p n^{p+1}.
double phi_upper_bound(int r, double p, int n);

/// Smallest n0 in [n_lo, n_hi] such that the Turán partition is optimal for
/// every n in [n0, n_hi]; nullopt if it is not optimal at n_hi.
std::optional<int> turan_onset(int r, double p, int n_lo, int n_hi,
                               const ExactOptions& options = {});

} // namespace degpow::exact
