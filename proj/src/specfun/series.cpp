// Ascending power series for J_nu, I_nu and H_nu.
//
// Every series here has the shape
//   prefactor * sum_{m>=0} t_m,  t_0 = 1,
//   t_{m+1} = t_m * s * (x/2)^2 / ((m + a)(m + b)),  s = +-1,
// so only the term-ratio recurrence runs in extended precision; the
// Gamma-dependent prefactor is applied once in double.

#include <cmath>
#include <string>

#include "zerosum/errors.hpp"
#include "zerosum/ext_real.hpp"
#include "zerosum/specfun.hpp"

namespace zerosum {

namespace {

// Bits for the exact denominator (m + a)(m + b); a double plus a small
// integer product fits comfortably.
constexpr long kDenominatorBits = 192;

double hypergeometric_tail(double x, double a, double b, bool alternating, int target_digits) {
  const long prec = required_precision(x, target_digits);
  const double half = 0.5 * x;

  ExtReal y(half, 128);
  y *= ExtReal(half, 128);  // exact: 106 bits suffice

  ExtReal term = ExtReal::from_long(1, prec);
  ExtReal sum = ExtReal::from_long(1, prec);
  const ExtReal a_ext(a, kDenominatorBits);
  const ExtReal b_ext(b, kDenominatorBits);
  ExtReal denom(kDenominatorBits);
  ExtReal factor_b(kDenominatorBits);

  long max_exp = mpfr_get_exp(term.raw());
  const long max_terms = static_cast<long>(10.0 * x) + 200;
  const double peak = half + std::abs(b) + 2.0;
  for (long m = 0;; ++m) {
    if (m >= max_terms) {
      throw NumericalFailure("series did not converge in " + std::to_string(max_terms) +
                             " terms at x = " + std::to_string(x));
    }
    denom = a_ext;
    denom.add_ui(static_cast<unsigned long>(m));
    factor_b = b_ext;
    factor_b.add_ui(static_cast<unsigned long>(m));
    denom *= factor_b;
    if (denom.is_zero()) {
      // Only reachable for b a non-positive integer, excluded by callers.
      throw DomainError("series denominator vanished");
    }
    term *= y;
    term /= denom;
    if (alternating) term.negate();
    if (term.is_zero()) break;
    sum += term;

    const long e = mpfr_get_exp(term.raw());
    if (e > max_exp) max_exp = e;
    if (static_cast<double>(m) > peak && e < max_exp - prec - 2) break;
  }
  return sum.to_double();
}

void require_finite(double x, const char* who) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(who) + ": argument must be finite");
  }
}

double bessel_series(double nu, double x, bool modified, int digits, const char* who) {
  require_finite(x, who);
  if (!(nu > -1.0)) {
    throw DomainError(std::string(who) + ": order must exceed -1, got " + std::to_string(nu));
  }
  if (x < 0.0) {
    throw DomainError(std::string(who) + ": argument must be non-negative");
  }
  if (x == 0.0) {
    if (nu == 0.0) return 1.0;
    if (nu > 0.0) return 0.0;
    throw DomainError(std::string(who) + ": singular at x = 0 for negative order");
  }
  const double prefactor = std::pow(0.5 * x, nu) / gamma(nu + 1.0);
  return prefactor * hypergeometric_tail(x, 1.0, nu + 1.0, !modified, digits);
}

}  // namespace

double bessel_j(Order order, double x, int target_digits) {
  return bessel_series(order.nu, x, false, target_digits, "bessel_j");
}

double bessel_i(Order order, double x, int target_digits) {
  return bessel_series(order.nu, x, true, target_digits, "bessel_i");
}

double struve_h_any(double nu, double x, int target_digits) {
  require_finite(x, "struve_h");
  if (!(nu > -1.5)) {
    throw DomainError("struve_h: order must exceed -3/2, got " + std::to_string(nu));
  }
  if (!(x > 0.0)) {
    throw DomainError("struve_h: argument must be positive");
  }
  const double prefactor = std::pow(0.5 * x, nu + 1.0) / (gamma(1.5) * gamma(nu + 1.5));
  return prefactor * hypergeometric_tail(x, 1.5, nu + 1.5, true, target_digits);
}

double struve_h(Order order, double x, int target_digits) {
  if (order.nu > 0.5) {
    throw DomainError("struve_h: order must lie in (-3/2, 1/2], got " + std::to_string(order.nu));
  }
  return struve_h_any(order.nu, x, target_digits);
}

double struve_h_deriv(Order order, double x, int target_digits) {
  const double h = struve_h(order, x, target_digits);
  const double h_lower = struve_h(Order{order.nu - 1.0}, x, target_digits);
  return h_lower - (order.nu / x) * h;
}

double struve_forcing(double nu, double x) {
  return std::pow(x, nu) / (std::sqrt(kPi) * std::pow(2.0, nu - 1.0) * gamma(nu + 0.5));
}

}  // namespace zerosum
