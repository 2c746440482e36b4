// Relations that hold at a zero of J_nu or H_nu, evaluated with derivatives
// taken from the recurrences and function values from the ascending series.

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "zerosum/errors.hpp"
#include "zerosum/identities.hpp"

namespace zerosum {

namespace {

constexpr int kDigits = 20;

double rel(double residual, std::initializer_list<double> terms) {
  double scale = 0.0;
  for (double t : terms) scale = std::max(scale, std::abs(t));
  return scale > 0.0 ? std::abs(residual) / scale : std::abs(residual);
}

}  // namespace

std::vector<StructuralResult> bessel_structure(double nu, double x) {
  if (!(x > 0.0)) throw DomainError("structural checks need a positive zero");
  const double j0 = bessel_j(Order{nu}, x, kDigits);
  const double j1 = bessel_j(Order{nu + 1.0}, x, kDigits);
  const double d0 = (nu / x) * j0 - j1;                 // J_nu'
  const double d1 = j0 - ((nu + 1.0) / x) * j1;         // J_{nu+1}'
  const double dd0 = -(nu / (x * x)) * j0 + (nu / x) * d0 - d1;  // J_nu''
  return {
      {"x J'' + J' = 0", rel(x * dd0 + d0, {x * dd0, d0})},
      {"J' + J_{nu+1} = 0", rel(j1 + d0, {j1, d0})},
      {"x J_{nu+1}' = (nu+1) J'", rel(x * d1 - (nu + 1.0) * d0, {x * d1, (nu + 1.0) * d0})},
  };
}

std::vector<StructuralResult> struve_structure(double nu, double x) {
  if (!(x > 0.0)) throw DomainError("structural checks need a positive zero");
  const double h0 = struve_h(Order{nu}, x, kDigits);
  const double hm = struve_h(Order{nu - 1.0}, x, kDigits);
  const double d0 = hm - (nu / x) * h0;  // H_nu'
  const double dm = ((nu - 1.0) / x) * hm - h0 + std::pow(0.5 * x, nu - 1.0) / (std::sqrt(kPi) * gamma(nu + 0.5));
  const double dd0 = dm + (nu / (x * x)) * h0 - (nu / x) * d0;  // H_nu''
  const double forcing = struve_forcing(nu, x);
  return {
      {"x H'' + H' = forcing", rel(x * dd0 + d0 - forcing, {x * dd0, d0, forcing})},
      {"H' = H_{nu-1}", rel(hm - d0, {hm, d0})},
      {"x H_{nu-1}' = nu H' + x H''", rel(x * dm - nu * d0 - x * dd0, {x * dm, nu * d0, x * dd0})},
  };
}

}  // namespace zerosum
