// Richardson-type extrapolation of partial sums in inverse powers of M.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "zerosum/errors.hpp"
#include "zerosum/sums.hpp"

namespace zerosum {

namespace {

using Real = long double;

// Solves a small dense system by Gaussian elimination with partial pivoting.
std::vector<Real> solve(std::vector<std::vector<Real>> a, std::vector<Real> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (a[piv][col] == 0.0L) {
      throw NumericalFailure("singular extrapolation system");
    }
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Real f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Real> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Real acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
    x[i] = acc / a[i][i];
  }
  return x;
}

// m + 1 truncation points spread evenly over [N/2, N].
std::vector<int> sample_points(int N, int m) {
  std::vector<int> pts;
  for (int i = 0; i <= m; ++i) {
    const double frac = m == 0 ? 1.0 : (m + static_cast<double>(i)) / (2.0 * m);
    pts.push_back(static_cast<int>(std::lround(N * frac)));
  }
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Limit of S(M) = S + sum_{j<m} A_j M^-(q0 + j) fitted through the points.
// Works in u = N/M in [1, 2] so the system stays well scaled.
Real fit_limit(std::span<const double> s, int N, const std::vector<int>& pts, int q0) {
  const std::size_t n = pts.size();
  std::vector<std::vector<Real>> a(n, std::vector<Real>(n));
  std::vector<Real> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Real u = static_cast<Real>(N) / pts[i];
    a[i][0] = 1.0L;
    Real pw = std::pow(u, static_cast<Real>(q0));
    for (std::size_t j = 1; j < n; ++j) {
      a[i][j] = pw;
      pw *= u;
    }
    b[i] = s[static_cast<std::size_t>(pts[i]) - 1];
  }
  return solve(std::move(a), std::move(b))[0];
}

bool monotone_on(std::span<const double> s, int N) {
  const auto pts = sample_points(N, 8);
  int sign = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double d = s[static_cast<std::size_t>(pts[i]) - 1] - s[static_cast<std::size_t>(pts[i - 1]) - 1];
    const int sd = (d > 0.0) - (d < 0.0);
    if (sd == 0) continue;
    if (sign != 0 && sd != sign) return false;
    sign = sd;
  }
  return true;
}

}  // namespace

bool tail_at_noise_floor(const SumResult& r) {
  return r.tail_bound <= 1024.0 * std::numeric_limits<double>::epsilon() * std::abs(r.value);
}

SumResult extrapolate_tail(std::span<const double> cumulative, int decay_power, const TailOptions& opts) {
  if (decay_power < 2) {
    throw DomainError("tail extrapolation needs terms decaying at least like n^-2");
  }
  const int N = static_cast<int>(cumulative.size());
  if (N < 20) {
    throw DomainError("tail extrapolation needs N >= 20");
  }
  if (opts.levels < 1 || opts.levels > 12) {
    throw DomainError("extrapolation levels must lie in [1, 12]");
  }
  const int q0 = decay_power - 1;
  const double last = cumulative.back();

  SumResult r;
  r.truncation_N = N;
  r.method = SumMethod::direct_tail;
  r.warning = !monotone_on(cumulative, N);

  // Rounding in the partial sums themselves; the extrapolation amplifies it
  // by a modest constant.
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(last);

  if (opts.low_order) {
    const int m = decay_power == 2 ? 2 : 1;
    const double v = static_cast<double>(fit_limit(cumulative, N, sample_points(N, m), q0));
    r.value = v;
    r.tail_bound = 4.0 * std::abs(v - last) + floor;
    return r;
  }

  std::vector<double> est{last};
  for (int m = 1; m <= opts.levels; ++m) {
    est.push_back(static_cast<double>(fit_limit(cumulative, N, sample_points(N, m), q0)));
  }
  int best = 1;
  for (int m = 2; m <= opts.levels; ++m) {
    if (std::abs(est[m] - est[m - 1]) < std::abs(est[best] - est[best - 1])) best = m;
  }
  r.value = est[static_cast<std::size_t>(best)];
  r.tail_bound = 4.0 * std::abs(est[best] - est[best - 1]) + floor;
  return r;
}

}  // namespace zerosum
