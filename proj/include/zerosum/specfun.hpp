#pragma once

#include <string>
#include <vector>

#include "zerosum/scalar.hpp"

namespace zerosum {

/// Order of a Bessel or Struve function. Domain checks live in the
/// evaluators: Bessel-family functions need nu > -1, the public Struve
/// evaluators accept nu in (-3/2, 1/2] so that H_{nu-1} is reachable from
/// any order in the open strip |nu| < 1/2.
struct Order {
  double nu;
};

inline constexpr int kDefaultDigits = 17;

/// J_nu(x) for nu > -1, x >= 0 from the ascending series summed in ExtReal.
double bessel_j(Order order, double x, int target_digits = kDefaultDigits);

/// I_nu(x) for nu > -1, x >= 0, same path as bessel_j.
double bessel_i(Order order, double x, int target_digits = kDefaultDigits);

/// Struve H_nu(x), x > 0, for nu in (-3/2, 1/2].
double struve_h(Order order, double x, int target_digits = kDefaultDigits);

/// H_nu'(x) = H_{nu-1}(x) - (nu/x) H_nu(x).
double struve_h_deriv(Order order, double x, int target_digits = kDefaultDigits);

/// Struve series without the public order restriction; valid for any
/// nu > -3/2. Used by structural checks that need H_{nu+1}-type values.
double struve_h_any(double nu, double x, int target_digits = kDefaultDigits);

/// J_{nu+1}(x) / J_nu(x) by continued fraction. Throws PoleError within
/// 1e-12 (relative) of a zero of J_nu.
double ratio_j(Order order, double x);

/// J_nu(x) / J_{nu+1}(x), the reciprocal of ratio_j. Smooth through zeros
/// of J_nu, so the zero finder iterates on this quantity.
double inverse_ratio_j(Order order, double x);

/// I_{nu+1}(x) / I_nu(x) by continued fraction; positive, and below 1 for
/// nu >= -1/2.
double ratio_i(Order order, double x);

/// Right side of the Struve equation x H'' + H' + x(1 - nu^2/x^2) H,
/// i.e. x^nu / (sqrt(pi) 2^(nu-1) Gamma(nu+1/2)).
double struve_forcing(double nu, double x);

/// Monic polynomial H_n with positive coefficients, ascending order.
struct PolyCoeffs {
  int degree = 0;
  std::vector<double> coeffs;
};

/// Coefficients of H_n: c_k = (2n-k)! / ((n-k)! k! 2^(n-k)), built from
/// exact integers. n <= 60.
PolyCoeffs hn_coeffs(int n);

/// The same coefficients as exact decimal integers. The zeros of H_n are
/// badly conditioned in the monomial basis (a relative perturbation of 1e-16
/// in the coefficients moves zeros of H_60 by O(10)), so root finding works
/// from these rather than from the rounded doubles.
std::vector<std::string> hn_coeffs_exact(int n);

/// Horner evaluation of p at z.
Complex hn_eval(const PolyCoeffs& p, Complex z);

/// Value and first two derivatives at z.
struct PolyJet {
  Complex value;
  Complex d1;
  Complex d2;
};
PolyJet hn_jet(const PolyCoeffs& p, Complex z);

inline constexpr int kMaxHnDegree = 60;

}  // namespace zerosum
