#include <cmath>
#include <cstdio>
#include <string>

#include "report_util.hpp"

namespace zerosum {

namespace {

constexpr int kDigits = 20;

std::string residual_note(const char* factor, const char* used, double residual) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "with 2^%s in place of 2^%s the residual is %.3e", factor, used, residual);
  return buf;
}

}  // namespace

IdentityReport verify_struve(ZeroStore& store, IdentityId id, double nu, int k, std::optional<double> tol,
                             std::optional<int> truncation) {
  if (id != IdentityId::StruveP2 && id != IdentityId::StruveP4) {
    throw UsageError("not a Struve identity: " + cli_name(id));
  }
  if (!(std::abs(nu) < 0.5)) throw DomainError("Struve identities need |nu| < 1/2");
  if (k < 1) throw DomainError("zero index k must be at least 1");

  IdentityReport report = detail::start_report(id, tol);
  report.params.nu = nu;
  report.params.k = k;
  return detail::guarded(std::move(report), [&](IdentityReport& r) {
    ZeroTable& table = store.table(Family::StruveH, nu, k);
    const double h = table[static_cast<std::size_t>(k)];
    const double h2 = h * h;
    const double dh = struve_h_deriv(Order{nu}, h, kDigits);
    // h^nu / (sqrt(pi) Gamma(nu+1/2) H_nu'(h)); the powers of two differ
    // between the two identities.
    const double core = std::pow(h, nu) / (std::sqrt(kPi) * gamma(nu + 0.5) * dh);
    const double target = detail::tail_target(r.tolerance);

    if (id == IdentityId::StruveP2) {
      const SumSpec spec{Family::StruveH, nu, 2, Shift::minus, k, k, std::nullopt};
      const SumResult s = sum_with_tail(spec, table, target, truncation);
      const double base = (nu + 2.0) / (2.0 * h2);
      const double term = core / h2;
      r.lhs = s.value;
      r.rhs = base - term / std::pow(2.0, nu + 1.0);
      r.truncation_N = s.truncation_N;
      r.tail_bound = s.tail_bound;
      const double alternative = base - term / std::pow(2.0, nu - 1.0);
      r.notes = residual_note("(nu-1)", "(nu+1)", std::abs(s.value - alternative));
      if (s.warning) r.notes += "; tail model warning";
      return;
    }

    const SumSpec quartic{Family::StruveH, nu, 4, Shift::minus, k, k, std::nullopt};
    const SumResult s = sum_with_tail(quartic, table, target, truncation);
    // No closed form is known for the Struve plus-sum, so it is summed too.
    const SumSpec plus{Family::StruveH, nu, 2, Shift::plus, k, std::nullopt, std::nullopt};
    const SumResult p = sum_with_tail(plus, table, target * 2.0 * h2, truncation);
    const double base = -p.value / (2.0 * h2) + (nu + 3.0) / (4.0 * h2 * h2);
    const double term = core / (h2 * h2);
    r.lhs = s.value;
    r.rhs = base - term / std::pow(2.0, nu + 2.0);
    r.truncation_N = std::max(s.truncation_N, p.truncation_N);
    r.tail_bound = s.tail_bound + p.tail_bound / (2.0 * h2);
    const double alternative = base - term / std::pow(2.0, nu);
    r.notes = residual_note("nu", "(nu+2)", std::abs(s.value - alternative));
    if (s.warning || p.warning) r.notes += "; tail model warning";
  });
}

}  // namespace zerosum
