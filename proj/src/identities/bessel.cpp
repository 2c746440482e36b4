#include <string>

#include "report_util.hpp"

namespace zerosum {

namespace {

void check_bessel_args(double nu, int k) {
  if (!(nu > -1.0)) throw DomainError("Bessel identities need nu > -1");
  if (k < 1) throw DomainError("zero index k must be at least 1");
}

}  // namespace

IdentityReport verify_calogero(ZeroStore& store, double nu, int k, std::optional<double> tol,
                               std::optional<int> truncation) {
  check_bessel_args(nu, k);
  IdentityReport report = detail::start_report(IdentityId::CalogeroP2, tol);
  report.params.nu = nu;
  report.params.k = k;
  return detail::guarded(std::move(report), [&](IdentityReport& r) {
    ZeroTable& table = store.table(Family::BesselJ, nu, k);
    const double jk = table[static_cast<std::size_t>(k)];
    const SumSpec spec{Family::BesselJ, nu, 2, Shift::minus, k, k, std::nullopt};
    const SumResult s = sum_with_tail(spec, table, detail::tail_target(r.tolerance), truncation);
    r.lhs = s.value;
    r.rhs = (nu + 1.0) / (2.0 * jk * jk);
    r.truncation_N = s.truncation_N;
    r.tail_bound = s.tail_bound;
    if (s.warning) r.notes = "tail model warning";
  });
}

IdentityReport verify_quartic_j(ZeroStore& store, double nu, int k, std::optional<double> tol,
                                std::optional<int> truncation) {
  check_bessel_args(nu, k);
  IdentityReport report = detail::start_report(IdentityId::QuarticJ, tol);
  report.params.nu = nu;
  report.params.k = k;
  return detail::guarded(std::move(report), [&](IdentityReport& r) {
    ZeroTable& table = store.table(Family::BesselJ, nu, k);
    const double jk = table[static_cast<std::size_t>(k)];
    const double jk2 = jk * jk;
    const SumSpec spec{Family::BesselJ, nu, 4, Shift::minus, k, k, std::nullopt};
    const SumResult s = sum_with_tail(spec, table, detail::tail_target(r.tolerance), truncation);
    r.lhs = s.value;
    r.rhs = -closed_plus_sum(Order{nu}, jk) / (2.0 * jk2) + (nu + 2.0) / (4.0 * jk2 * jk2);
    r.truncation_N = s.truncation_N;
    r.tail_bound = s.tail_bound;
    if (s.warning) r.notes = "tail model warning";
  });
}

}  // namespace zerosum
