// Continued fractions for J_nu/J_{nu+1} and I_nu/I_{nu+1}, evaluated by the
// modified Lentz method. Both come from the three-term recurrences
//   J_nu / J_{nu+1} = 2(nu+1)/x - J_{nu+2}/J_{nu+1},
//   I_nu / I_{nu+1} = 2(nu+1)/x + I_{nu+2}/I_{nu+1},
// whose minimal solutions are J and I, so forward evaluation is stable.

#include <cmath>
#include <limits>
#include <string>

#include "zerosum/errors.hpp"
#include "zerosum/specfun.hpp"

namespace zerosum {

namespace {

constexpr double kTiny = 1e-300;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// b0 + s/(b1 + s/(b2 + ...)) with b_i = 2(nu+1+i)/x and s = +-1.
double lentz(double nu, double x, double s, const char* who) {
  if (!(nu > -1.0)) {
    throw DomainError(std::string(who) + ": order must exceed -1, got " + std::to_string(nu));
  }
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(who) + ": argument must be positive and finite");
  }
  const double inv_x = 2.0 / x;
  double f = (nu + 1.0) * inv_x;
  if (f == 0.0) f = kTiny;
  double c = f;
  double d = 0.0;
  // In the oscillatory range (order below x) the partial convergents wander;
  // only trust the stopping test once the recurrence is monotone.
  const double settle = x - nu;
  const long max_iter = static_cast<long>(2.0 * x) + 10000;
  for (long i = 1; i <= max_iter; ++i) {
    const double b = (nu + 1.0 + static_cast<double>(i)) * inv_x;
    d = b + s * d;
    if (d == 0.0) d = kTiny;
    c = b + s / c;
    if (c == 0.0) c = kTiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (static_cast<double>(i) > settle && std::abs(delta - 1.0) < kEps) {
      return f;
    }
  }
  throw NumericalFailure(std::string(who) + ": continued fraction did not converge at nu = " +
                         std::to_string(nu) + ", x = " + std::to_string(x));
}

}  // namespace

double inverse_ratio_j(Order order, double x) { return lentz(order.nu, x, -1.0, "ratio_j"); }

double ratio_j(Order order, double x) {
  const double q = inverse_ratio_j(order, x);
  // Near a zero j of J_nu, q ~ -(x - j).
  if (std::abs(q) < 1e-12) {
    throw PoleError("ratio_j: x = " + std::to_string(x) + " is within 1e-12 of a zero of J_nu");
  }
  return 1.0 / q;
}

double ratio_i(Order order, double x) { return 1.0 / lentz(order.nu, x, 1.0, "ratio_i"); }

}  // namespace zerosum
