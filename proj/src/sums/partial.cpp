#include <algorithm>
#include <cmath>
#include <string>

#include "zerosum/errors.hpp"
#include "zerosum/sums.hpp"

namespace zerosum {

namespace {

constexpr double kDegenerateRel = 1e-14;

double center_of(const SumSpec& spec, const ZeroTable& table) {
  if (spec.point) {
    if (!(*spec.point > 0.0) || !std::isfinite(*spec.point)) {
      throw DomainError("sum centre must be a positive finite abscissa");
    }
    return *spec.point;
  }
  if (spec.center_index < 1) {
    throw DomainError("centre index must be at least 1");
  }
  if (static_cast<std::size_t>(spec.center_index) > table.count()) {
    throw RangeError("centre index " + std::to_string(spec.center_index) + " is beyond the zero table (" +
                     std::to_string(table.count()) + " zeros)");
  }
  return table[static_cast<std::size_t>(spec.center_index)];
}

void validate(const SumSpec& spec, const ZeroTable& table, int N) {
  if (spec.power != 2 && spec.power != 4) {
    throw DomainError("sum power must be 2 or 4");
  }
  if (spec.exclude_index && *spec.exclude_index != spec.center_index) {
    throw DomainError("excluded index must equal the centre index");
  }
  if (table.family != spec.family || table.nu != spec.nu) {
    throw DomainError("zero table does not match the sum's family and order");
  }
  if (N < 0) {
    throw DomainError("truncation must be non-negative");
  }
  if (static_cast<std::size_t>(N) > table.count()) {
    throw RangeError("truncation N = " + std::to_string(N) + " exceeds the zero table (" +
                     std::to_string(table.count()) + " zeros)");
  }
}

// Factored denominators keep full relative accuracy when z_n is close to c.
double denominator(double z, double c, int power, Shift shift) {
  if (power == 2) {
    return shift == Shift::minus ? (z - c) * (z + c) : z * z + c * c;
  }
  const double z2 = z * z;
  const double c2 = c * c;
  return shift == Shift::minus ? (z - c) * (z + c) * (z2 + c2) : z2 * z2 + c2 * c2;
}

template <class Sink>
void accumulate(const SumSpec& spec, const ZeroTable& table, int N, Sink&& sink) {
  validate(spec, table, N);
  const double c = center_of(spec, table);
  const double scale = std::pow(c, spec.power);
  CompensatedSum<double> acc;
  for (int n = 1; n <= N; ++n) {
    if (!(spec.exclude_index && *spec.exclude_index == n)) {
      const double d = denominator(table[static_cast<std::size_t>(n)], c, spec.power, spec.shift);
      if (std::abs(d) < kDegenerateRel * scale) {
        throw DegenerateSpacing("term n = " + std::to_string(n) + " has a vanishing denominator");
      }
      acc += 1.0 / d;
    }
    sink(acc.value());
  }
}

}  // namespace

std::string to_string(SumMethod m) { return m == SumMethod::direct_tail ? "direct_tail" : "closed_form"; }

double partial_sum(const SumSpec& spec, const ZeroTable& table, int N) {
  double out = 0.0;
  accumulate(spec, table, N, [&](double s) { out = s; });
  return out;
}

std::vector<double> partial_sums(const SumSpec& spec, const ZeroTable& table, int N) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(N));
  accumulate(spec, table, N, [&](double s) { out.push_back(s); });
  return out;
}

SumResult tail_extrapolate(const SumSpec& spec, const ZeroTable& table, int N, const TailOptions& opts) {
  if (N < 20) {
    throw DomainError("tail extrapolation needs N >= 20");
  }
  const std::vector<double> s = partial_sums(spec, table, N);
  return extrapolate_tail(s, spec.power, opts);
}

SumResult sum_with_tail(const SumSpec& spec, ZeroTable& table, double target, std::optional<int> truncation) {
  if (!(target > 0.0)) {
    throw DomainError("target tolerance must be positive");
  }
  int N = truncation.value_or(spec.power == 2 ? kDefaultTruncationP2 : kDefaultTruncationP4);
  if (!truncation) {
    // Keep the fitted window [N/2, N] well clear of the centre term.
    int reach = spec.center_index;
    if (spec.point) reach = static_cast<int>(*spec.point / kPi) + 1;
    N = std::max(N, 20 * reach);
  }
  if (N < 20 || N > kMaxTruncation) {
    throw DomainError("truncation must lie in [20, " + std::to_string(kMaxTruncation) + "]");
  }
  for (;;) {
    extend_zeros(table, N);
    SumResult r = tail_extrapolate(spec, table, N);
    if (truncation || r.tail_bound < target || tail_at_noise_floor(r)) return r;
    if (2 * N > kMaxTruncation) {
      r.warning = true;
      return r;
    }
    N *= 2;
  }
}

}  // namespace zerosum
