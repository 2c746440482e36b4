#include <cmath>
#include <string>

#include "zerosum/errors.hpp"
#include "zerosum/sums.hpp"

namespace zerosum {

namespace {

void require_positive(double x, const char* who) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(who) + ": x must be positive and finite");
  }
}

}  // namespace

double closed_minus_sum(Order order, double x) {
  require_positive(x, "closed_minus_sum");
  return ratio_j(order, x) / (2.0 * x);
}

double closed_plus_sum(Order order, double x) {
  require_positive(x, "closed_plus_sum");
  return ratio_i(order, x) / (2.0 * x);
}

double closed_quartic_sum(Order order, double x) {
  require_positive(x, "closed_quartic_sum");
  return (ratio_j(order, x) - ratio_i(order, x)) / (4.0 * x * x * x);
}

double struve_ml_sum(Order order, double x) {
  require_positive(x, "struve_ml_sum");
  if (!(std::abs(order.nu) < 0.5)) {
    throw DomainError("struve_ml_sum: order must satisfy |nu| < 1/2");
  }
  const double h = struve_h(order, x, 20);
  const double h_lower = struve_h(Order{order.nu - 1.0}, x, 20);
  if (std::abs(h) <= 1e-12 * std::abs(h_lower)) {
    throw PoleError("struve_ml_sum: x = " + std::to_string(x) + " is at a zero of H_nu");
  }
  return ((2.0 * order.nu + 1.0) / x - h_lower / h) / (2.0 * x);
}

}  // namespace zerosum
