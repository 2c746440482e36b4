// Identities over the complex zeros of K_{n+1/2}, i.e. of the polynomial H_n.

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <string>
#include <vector>

#include "report_util.hpp"

namespace zerosum {

namespace {

using WideComplex = std::complex<long double>;

// H_n with coefficients held in long double: exact while they fit in a
// 64-bit mantissa (n <= 17) and rounded beyond that.
struct WidePoly {
  std::vector<long double> c;

  explicit WidePoly(int n) {
    for (const std::string& s : hn_coeffs_exact(n)) c.push_back(std::stold(s));
  }

  // Value and first two derivatives.
  std::array<WideComplex, 3> jet(WideComplex z) const {
    WideComplex v = 0.0L, d1 = 0.0L, d2 = 0.0L;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      d2 = d2 * z + d1;
      d1 = d1 * z + v;
      v = v * z + *it;
    }
    return {v, d1, 2.0L * d2};
  }
};

void check_k_args(int n) {
  if (n < 1 || n > kMaxHnDegree) {
    throw DomainError("K identities need 1 <= n <= 60, got " + std::to_string(n));
  }
}

}  // namespace

IdentityReport verify_k_identity(const ComplexZeroSet& zeros, IdentityId id, int j, std::optional<double> tol) {
  if (id != IdentityId::KP1 && id != IdentityId::KP2 && id != IdentityId::KP4) {
    throw UsageError("not a finite K identity: " + cli_name(id));
  }
  const int n = zeros.n;
  check_k_args(n);
  if (j < 1 || j > n) {
    throw DomainError("zero index j must lie in [1, n]");
  }
  IdentityReport report = detail::start_report(id, tol);
  report.params.n = n;
  report.params.j = j;
  return detail::guarded(std::move(report), [&](IdentityReport& r) {
    const double nu = n + 0.5;
    const Complex zj = zeros.zeros[static_cast<std::size_t>(j - 1)];
    const Complex zj2 = zj * zj;
    const Complex zj4 = zj2 * zj2;
    CompensatedSum<Complex> lhs, over_sum, over_sq;
    for (int k = 1; k <= n; ++k) {
      const Complex zk = zeros.zeros[static_cast<std::size_t>(k - 1)];
      over_sum += 1.0 / (zk + zj);
      over_sq += 2.0 * zj / (zj2 + zk * zk);
      if (k == j) continue;
      const Complex zk2 = zk * zk;
      if (std::abs(zk2 * zk2 - zj4) < 1e-14 * std::abs(zj4)) {
        throw InvariantViolation("zeros " + std::to_string(j) + " and " + std::to_string(k) +
                                 " have equal fourth powers");
      }
      switch (id) {
        case IdentityId::KP1:
          lhs += 1.0 / (zk - zj);
          break;
        case IdentityId::KP2:
          lhs += 1.0 / ((zk - zj) * (zk + zj));
          break;
        default:
          lhs += 1.0 / ((zk - zj) * (zk + zj) * (zk2 + zj2));
          break;
      }
    }
    r.lhs = lhs.value();
    switch (id) {
      case IdentityId::KP1:
        r.rhs = (1.0 - 2.0 * zj - 2.0 * nu) / (2.0 * zj);
        break;
      case IdentityId::KP2:
        r.rhs = (1.0 - zj - nu) / (2.0 * zj2) - over_sum.value() / (2.0 * zj);
        break;
      default:
        r.rhs = (2.0 - nu - zj) / (4.0 * zj4) - (over_sum.value() + over_sq.value()) / (4.0 * zj2 * zj);
        break;
    }
  });
}

IdentityReport verify_k_identity(ZeroStore& store, IdentityId id, int n, int j, std::optional<double> tol) {
  check_k_args(n);
  return verify_k_identity(store.hn(n), id, j, tol);
}

IdentityReport verify_k_mittag(ZeroStore& store, int n, Complex z, std::optional<double> tol) {
  check_k_args(n);
  if (z == Complex(0.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("K ratio needs a finite non-zero z");
  }
  IdentityReport report = detail::start_report(IdentityId::KMl, tol);
  report.params.n = n;
  report.params.z = z;
  const ComplexZeroSet& zeros = store.hn(n);
  for (const Complex& zk : zeros.zeros) {
    if (std::abs(z - zk) < 1e-8) {
      throw PoleError("z is within 1e-8 of a zero of K_{n+1/2}");
    }
  }
  return detail::guarded(std::move(report), [&](IdentityReport& r) {
    const double nu = n + 0.5;
    const WideComplex w(z.real(), z.imag());
    const WideComplex ratio = WidePoly(n + 1).jet(w)[0] / (w * WidePoly(n).jet(w)[0]);
    r.lhs = Complex(static_cast<double>(ratio.real()), static_cast<double>(ratio.imag()));
    CompensatedSum<Complex> poles;
    for (const Complex& zk : zeros.zeros) poles += 1.0 / (z - zk);
    r.rhs = 1.0 + 2.0 * nu / z - poles.value();
  });
}

std::vector<StructuralResult> k_structure(int n, Complex zero) {
  check_k_args(n);
  const long double nu = n + 0.5L;
  const WideComplex z(zero.real(), zero.imag());
  const auto p = WidePoly(n).jet(z);
  const auto q = WidePoly(n + 1).jet(z);
  // K = f H_n with f = sqrt(pi/2) z^(-nu) e^(-z); everything below is
  // divided by f. a = f'/f.
  const WideComplex a = -nu / z - 1.0L;
  const WideComplex k1 = a * p[0] + p[1];
  const WideComplex k2 = (nu / (z * z) + a * a) * p[0] + 2.0L * a * p[1] + p[2];
  const WideComplex kp = q[0] / z;                            // K_{nu+1}
  const WideComplex kp1 = ((a - 1.0L / z) * q[0] + q[1]) / z;  // K_{nu+1}'

  auto rel = [](WideComplex res, std::initializer_list<WideComplex> terms) {
    long double scale = 0.0L;
    for (const auto& t : terms) scale = std::max(scale, std::abs(t));
    return static_cast<double>(scale > 0.0L ? std::abs(res) / scale : std::abs(res));
  };
  return {
      {"z K'' + K' = 0", rel(z * k2 + k1, {z * k2, k1})},
      {"K' + K_{nu+1} = 0", rel(k1 + kp, {k1, kp})},
      {"z K_{nu+1}' + (nu+1) K_{nu+1} = 0", rel(z * kp1 + (nu + 1.0L) * kp, {z * kp1, (nu + 1.0L) * kp})},
  };
}

}  // namespace zerosum
