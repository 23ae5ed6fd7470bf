#include "degpow/core/numeric.hpp"

#include <algorithm>

namespace degpow {

std::string to_string(ExactInt value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::optional<ExactInt> checked_power(ExactInt base, int exponent) {
  ExactInt result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(result, base, &result)) return std::nullopt;
  }
  return result;
}

} // namespace degpow
