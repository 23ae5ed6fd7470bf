#pragma once

#include <cmath>
#include <optional>
#include <string>

namespace degpow {

/// Floating-point conventions shared by every module.
struct NumericPolicy {
  /// Significant decimal digits the power sums are expected to carry.
  static constexpr int precision_digits = 15;
  /// Significant digits used when printing reals.
  static constexpr int print_digits = 12;
  /// Relative tolerance under which two objective values count as tied.
  static constexpr double tie_tolerance = 1e-12;
};

/// x^p with the convention 0^p = 0 for every p > 0.
inline double power(double base, double exponent) {
  if (base == 0.0) return 0.0;
  return std::pow(base, exponent);
}

/// True when a and b agree to `rel` relative to the larger magnitude.
inline bool nearly_equal(double a, double b, double rel) {
  const double scale = std::fmax(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= rel * scale;
}

/// Returns p as an int when it is an integer in [lo, hi].
inline std::optional<int> integral_exponent(double p, int lo = 1, int hi = 8) {
  if (p < lo || p > hi || p != std::floor(p)) return std::nullopt;
  return static_cast<int>(p);
}

using ExactInt = unsigned __int128;

/// Decimal rendering of an ExactInt.
std::string to_string(ExactInt value);

/// base^exponent, or nullopt on overflow.
std::optional<ExactInt> checked_power(ExactInt base, int exponent);

} // namespace degpow
