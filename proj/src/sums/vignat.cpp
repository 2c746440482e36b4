#include <cmath>
#include <string>

#include "zerosum/errors.hpp"
#include "zerosum/sums.hpp"

namespace zerosum {

VignatSides vignat_split(std::span<const double> values, std::size_t k) {
  if (k < 1 || k > values.size()) {
    throw RangeError("vignat_split: index " + std::to_string(k) + " outside the list");
  }
  for (double a : values) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw DomainError("vignat_split: values must be positive and finite");
    }
  }
  // Extended precision: minus - plus cancels by up to (max a / a_k)^2.
  using Wide = long double;
  const Wide ak = values[k - 1];
  const Wide ak2 = ak * ak;
  CompensatedSum<Wide> quartic, minus, plus;
  for (std::size_t n = 1; n <= values.size(); ++n) {
    if (n == k) continue;
    const Wide a = values[n - 1];
    const Wide a2 = a * a;
    const Wide diff2 = (a - ak) * (a + ak);
    if (std::abs(diff2 * (a2 + ak2)) < 1e-14 * ak2 * ak2) {
      throw DegenerateSpacing("vignat_split: a_" + std::to_string(n) + " coincides with a_k");
    }
    quartic += 1.0L / (diff2 * (a2 + ak2));
    minus += 1.0L / diff2;
    plus += 1.0L / (a2 + ak2);
  }
  return {static_cast<double>(quartic.value()), static_cast<double>((minus.value() - plus.value()) / (2.0L * ak2))};
}

}  // namespace zerosum
