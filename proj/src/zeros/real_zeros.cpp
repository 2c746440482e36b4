#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "zerosum/errors.hpp"
#include "zerosum/zeros.hpp"

namespace zerosum {

namespace {

constexpr int kMaxNewtonSteps = 50;
constexpr int kVerifyDigits = 18;
constexpr int kStruveDigits = 20;
constexpr double kStruveScanStart = 0.1;
constexpr double kStruveScanStep = kPi / 4.0;

std::string where(double nu, std::size_t n) {
  return "(nu = " + std::to_string(nu) + ", n = " + std::to_string(n) + ")";
}

// Asymptotic location of j_{nu,1} for large nu.
double first_zero_large_order(double nu) {
  const double c = std::cbrt(nu);
  return nu + 1.8557571 * c + 1.033150 / c - 0.00397 / nu - 0.0908 / (c * c * nu) +
         0.043 / (c * nu * nu);
}

double bessel_start(double nu, std::size_t n) {
  if (n == 1 && nu > 2.0) return first_zero_large_order(nu);
  return mcmahon_guess(Order{nu}, static_cast<int>(n));
}

double refine_bessel_zero(double nu, std::size_t n, double guess, double tol) {
  const Order order{nu};
  double x = guess;
  for (int step = 0; step < kMaxNewtonSteps; ++step) {
    const double q = inverse_ratio_j(order, x);
    double delta = q / (1.0 - nu * q / x);
    delta = std::clamp(delta, -kPi / 4.0, kPi / 4.0);
    x += delta;
    if (!(x > 0.0)) {
      throw NumericalFailure("Newton left the positive axis " + where(nu, n));
    }
    if (std::abs(delta) <= std::max(4.0 * std::numeric_limits<double>::epsilon() * x, 1e-3 * tol)) {
      return x;
    }
  }
  throw NumericalFailure("Newton iteration did not converge in 50 steps " + where(nu, n));
}

// Confirms a sign change of the series J_nu across [z - w, z + w] with
// w = max(tol, 2 ulp(z)); far out, an absolute tolerance can be finer than
// the spacing of doubles. If the Newton result sits just outside, the
// bracket is widened and bisected on the series sign. Returns the zero.
double verify_bessel_sign_change(double nu, std::size_t n, double z, double tol) {
  const Order order{nu};
  const double w = std::max(tol, 2.0 * (std::nextafter(z, INFINITY) - z));
  auto sign_at = [&](double x) {
    const double v = bessel_j(order, x, kVerifyDigits);
    return (v > 0.0) - (v < 0.0);
  };
  double h = w;
  for (int widen = 0; widen < 8; ++widen, h *= 2.0) {
    double lo = z - h, hi = z + h;
    int slo = sign_at(lo);
    const int shi = sign_at(hi);
    if (slo == 0) return lo;
    if (shi == 0) return hi;
    if (slo == shi) continue;
    if (widen == 0) return z;
    while (hi - lo > 2.0 * w) {
      const double mid = 0.5 * (lo + hi);
      const int sm = sign_at(mid);
      if (sm == 0) return mid;
      if (sm == slo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }
  throw NumericalFailure("no sign change of J_nu across the refined zero " + where(nu, n));
}

void extend_bessel(ZeroTable& table, std::size_t count) {
  const double nu = table.nu;
  for (std::size_t n = table.zeros.size() + 1; n <= count; ++n) {
    double guess = bessel_start(nu, n);
    if (!table.zeros.empty()) {
      guess = std::max(guess, table.zeros.back() + 1.0);
    }
    const double z = refine_bessel_zero(nu, n, guess, table.abs_tol);
    if (!table.zeros.empty() && !(z > table.zeros.back() + 0.5)) {
      throw OrderingError("refined zero collided with its predecessor " + where(nu, n));
    }
    table.zeros.push_back(verify_bessel_sign_change(nu, n, z, table.abs_tol));
  }
}

struct StruveSample {
  double x;
  double value;
};

double struve_value(double nu, double x) { return struve_h(Order{nu}, x, kStruveDigits); }

// Refines a bracketed zero of H_nu: bisection down to width 0.05, then
// Newton safeguarded by the bracket.
double refine_struve_zero(double nu, std::size_t n, StruveSample lo, StruveSample hi, double tol) {
  while (hi.x - lo.x > 0.05) {
    const double mid = 0.5 * (lo.x + hi.x);
    const double fm = struve_value(nu, mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (lo.value > 0.0)) {
      lo = {mid, fm};
    } else {
      hi = {mid, fm};
    }
  }
  const double eps = std::numeric_limits<double>::epsilon();
  auto accept = [&](double x, double f, double df) {
    const double w = std::max(tol, 2.0 * (std::nextafter(x, INFINITY) - x));
    if (std::abs(f) > w * std::abs(df)) {
      throw NumericalFailure("Struve zero failed the residual check " + where(nu, n));
    }
    return x;
  };
  double x = 0.5 * (lo.x + hi.x);
  for (int step = 0; step < kMaxNewtonSteps; ++step) {
    const double f = struve_value(nu, x);
    if (f == 0.0) return x;
    const double lower = struve_h(Order{nu - 1.0}, x, kStruveDigits);
    const double df = lower - (nu / x) * f;
    const double newton = f / df;
    if (std::abs(newton) <= 2.0 * eps * x) return x - newton;
    if ((f > 0.0) == (lo.value > 0.0)) {
      lo = {x, f};
    } else {
      hi = {x, f};
    }
    if (hi.x - lo.x <= 4.0 * eps * x) {
      // Bracket exhausted at double resolution; keep the better end.
      const StruveSample& best = std::abs(lo.value) < std::abs(hi.value) ? lo : hi;
      return accept(best.x, best.value, df);
    }
    double next = x - newton;
    if (!(next > lo.x && next < hi.x)) {
      next = 0.5 * (lo.x + hi.x);
    }
    x = next;
  }
  throw NumericalFailure("Struve refinement did not converge " + where(nu, n));
}

void extend_struve(ZeroTable& table, std::size_t count) {
  const double nu = table.nu;
  const double cap = 1.3 * kPi * (static_cast<double>(count) + 2.0);
  // Resume on the same scan grid a fresh search would use.
  long i = 0;
  if (!table.zeros.empty()) {
    i = static_cast<long>(std::floor((table.zeros.back() - kStruveScanStart) / kStruveScanStep)) + 1;
  }
  auto grid = [](long k) { return kStruveScanStart + static_cast<double>(k) * kStruveScanStep; };
  StruveSample prev{grid(i), struve_value(nu, grid(i))};
  while (table.zeros.size() < count) {
    ++i;
    const double x = grid(i);
    if (x > cap) {
      throw NumericalFailure("found only " + std::to_string(table.zeros.size()) + " of " +
                             std::to_string(count) + " Struve zeros below x = " + std::to_string(cap) +
                             " (nu = " + std::to_string(nu) + ")");
    }
    const StruveSample cur{x, struve_value(nu, x)};
    if (cur.value == 0.0 || (cur.value > 0.0) != (prev.value > 0.0)) {
      const std::size_t n = table.zeros.size() + 1;
      double z = cur.x;
      if (cur.value != 0.0) {
        z = refine_struve_zero(nu, n, prev, cur, table.abs_tol);
      }
      if (!table.zeros.empty() && !(z > table.zeros.back())) {
        throw OrderingError("Struve zeros out of order " + where(nu, n));
      }
      table.zeros.push_back(z);
    }
    prev = cur;
  }
}

}  // namespace

std::string to_string(Family f) { return f == Family::BesselJ ? "bessel-j" : "struve-h"; }

Family family_from_string(const std::string& name) {
  if (name == "bessel-j") return Family::BesselJ;
  if (name == "struve-h") return Family::StruveH;
  throw UsageError("unknown function family '" + name + "' (expected bessel-j or struve-h)");
}

double mcmahon_guess(Order order, int n) {
  const double beta = (static_cast<double>(n) + 0.5 * order.nu - 0.25) * kPi;
  return beta - (4.0 * order.nu * order.nu - 1.0) / (8.0 * beta);
}

void extend_zeros(ZeroTable& table, int count) {
  if (count < 1) {
    throw DomainError("zero count must be at least 1");
  }
  if (static_cast<std::size_t>(count) <= table.zeros.size()) return;
  if (table.family == Family::BesselJ) {
    extend_bessel(table, static_cast<std::size_t>(count));
  } else {
    extend_struve(table, static_cast<std::size_t>(count));
  }
}

ZeroTable find_bessel_zeros(Order order, int count, double abs_tol) {
  if (!(order.nu > -1.0)) {
    throw DomainError("find_bessel_zeros: order must exceed -1");
  }
  if (!(abs_tol > 0.0)) {
    throw DomainError("find_bessel_zeros: tolerance must be positive");
  }
  ZeroTable table{Family::BesselJ, order.nu, {}, abs_tol};
  extend_zeros(table, count);
  return table;
}

ZeroTable find_struve_zeros(Order order, int count, double abs_tol) {
  if (!(std::abs(order.nu) < 0.5)) {
    throw DomainError("find_struve_zeros: order must satisfy |nu| < 1/2");
  }
  if (!(abs_tol > 0.0)) {
    throw DomainError("find_struve_zeros: tolerance must be positive");
  }
  ZeroTable table{Family::StruveH, order.nu, {}, abs_tol};
  extend_zeros(table, count);
  return table;
}

}  // namespace zerosum
