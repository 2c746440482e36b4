// Special cases nu = 1/2 and nu = -1/2, where the zeros are integer
// multiples of pi (after scaling) and no special functions are needed.

#include <cmath>
#include <functional>
#include <vector>

#include "report_util.hpp"

namespace zerosum {

namespace {

// Partial sums of term(m), m = 1..N, compensated.
std::vector<double> cumulative(int N, const std::function<double(long)>& term) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(N));
  CompensatedSum<double> acc;
  for (long m = 1; m <= N; ++m) {
    acc += term(m);
    out.push_back(acc.value());
  }
  return out;
}

SumResult adaptive(int power, int reach, double target, std::optional<int> truncation,
                   const std::function<double(long)>& term) {
  int N = truncation.value_or(std::max(power == 2 ? kDefaultTruncationP2 : kDefaultTruncationP4, 20 * reach));
  if (N < 20 || N > kMaxTruncation) {
    throw DomainError("truncation must lie in [20, " + std::to_string(kMaxTruncation) + "]");
  }
  for (;;) {
    SumResult r = extrapolate_tail(cumulative(N, term), power);
    if (truncation || r.tail_bound < target || tail_at_noise_floor(r)) return r;
    if (2 * N > kMaxTruncation) {
      r.warning = true;
      return r;
    }
    N *= 2;
  }
}

}  // namespace

IdentityReport verify_halfinteger_special(IdentityId id, int k, std::optional<double> tol,
                                          std::optional<int> truncation) {
  if (id != IdentityId::QuarticInt && id != IdentityId::QuarticOdd && id != IdentityId::KnownP2) {
    throw UsageError("not an integer-sequence identity: " + cli_name(id));
  }
  if (k < 1) throw DomainError("k must be at least 1");
  if (id == IdentityId::QuarticOdd && k % 2 == 0) {
    throw UsageError("quartic-odd needs an odd k, got " + std::to_string(k));
  }
  IdentityReport report = detail::start_report(id, tol);
  report.params.k = k;
  return detail::guarded(std::move(report), [&](IdentityReport& r) {
    const double kk = k;
    const long k2 = static_cast<long>(k) * k;
    const long k4 = k2 * k2;
    SumResult s;
    // Integer denominators stay exact in double for n <= kMaxTruncation.
    switch (id) {
      case IdentityId::QuarticInt:
        s = adaptive(4, k, detail::tail_target(r.tolerance), truncation, [&](long n) {
          return n == k ? 0.0 : 1.0 / static_cast<double>(n * n * n * n - k4);
        });
        r.rhs = -kPi / (4.0 * kk * kk * kk) / std::tanh(kk * kPi) + 7.0 / (8.0 * kk * kk * kk * kk);
        break;
      case IdentityId::QuarticOdd:
        s = adaptive(4, (k + 1) / 2, detail::tail_target(r.tolerance), truncation, [&](long m) {
          const long n = 2 * m - 1;
          return n == k ? 0.0 : 1.0 / static_cast<double>(n * n * n * n - k4);
        });
        r.rhs = -kPi / (8.0 * kk * kk * kk) * std::tanh(0.5 * kk * kPi) + 3.0 / (8.0 * kk * kk * kk * kk);
        break;
      default:
        s = adaptive(2, k, detail::tail_target(r.tolerance), truncation, [&](long n) {
          return n == k ? 0.0 : 1.0 / static_cast<double>(n * n - k2);
        });
        r.rhs = 3.0 / (4.0 * kk * kk);
        break;
    }
    r.lhs = s.value;
    r.truncation_N = s.truncation_N;
    r.tail_bound = s.tail_bound;
    if (s.warning) r.notes = "tail model warning";
  });
}

}  // namespace zerosum
