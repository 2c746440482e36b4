#include "zerosum/scalar.hpp"

#include <cmath>
#include <string>

#include "zerosum/errors.hpp"

namespace zerosum {

double gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("gamma: argument must be positive and finite, got " + std::to_string(x));
  }
  double g = std::tgamma(x);
  if (!std::isfinite(g)) {
    throw RangeError("gamma: overflow at x = " + std::to_string(x));
  }
  return g;
}

long required_precision(double x, int target_digits) {
  constexpr double kLog2E = 1.4426950408889634;
  constexpr double kLog2Of10 = 3.3219280948873623;
  constexpr long kGuardBits = 64;
  if (x < 0.0) x = 0.0;
  if (target_digits < 1) target_digits = 1;
  return static_cast<long>(std::ceil(kLog2E * x + kLog2Of10 * target_digits)) + kGuardBits;
}

}  // namespace zerosum
