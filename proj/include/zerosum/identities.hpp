#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zerosum/sums.hpp"
#include "zerosum/zeros.hpp"

namespace zerosum {

enum class IdentityId {
  CalogeroP2,
  QuarticJ,
  QuarticInt,
  QuarticOdd,
  KnownP2,
  StruveP2,
  StruveP4,
  KP1,
  KP2,
  KP4,
  KMl,
};

/// Upper-case report name, e.g. "CALOGERO_P2".
std::string report_name(IdentityId id);
/// Command-line name, e.g. "calogero", "k-p4".
std::string cli_name(IdentityId id);
/// Parses a command-line name; throws UsageError.
IdentityId identity_from_cli_name(const std::string& name);
std::vector<IdentityId> all_identities();

/// 1e-9 for the Bessel and integer sums, 1e-8 for Struve, 1e-11 for the
/// finite K identities.
double default_tolerance(IdentityId id);

struct IdentityParams {
  std::optional<double> nu;
  std::optional<int> k;
  std::optional<int> n;
  std::optional<int> j;
  std::optional<Complex> z;
};

struct IdentityReport {
  IdentityId id = IdentityId::CalogeroP2;
  IdentityParams params;
  Complex lhs{};
  Complex rhs{};
  double abs_residual = 0.0;
  /// abs_residual / max(1, |rhs|).
  double rel_residual = 0.0;
  int truncation_N = 0;
  double tail_bound = 0.0;
  double tolerance = 0.0;
  /// rel_residual <= tolerance and no numerical failure.
  bool passed = false;
  /// Set when a numerical error stopped the evaluation; `error` says why.
  bool failed = false;
  std::string error;
  std::string notes;
};

/// sum_{n!=k} 1/(j_n^2 - j_k^2) against (nu+1)/(2 j_k^2).
IdentityReport verify_calogero(ZeroStore& store, double nu, int k, std::optional<double> tol = std::nullopt,
                               std::optional<int> truncation = std::nullopt);

/// sum_{n!=k} 1/(j_n^4 - j_k^4) against
/// -(1/2j_k^2) sum_n 1/(j_n^2 + j_k^2) + (nu+2)/(4 j_k^4), the plus-sum taken
/// in closed form.
IdentityReport verify_quartic_j(ZeroStore& store, double nu, int k, std::optional<double> tol = std::nullopt,
                                std::optional<int> truncation = std::nullopt);

/// Integer-sequence special cases, summed directly over n with an
/// extrapolated tail: QuarticInt (sum 1/(n^4-k^4) vs coth form), QuarticOdd
/// (odd n only, k odd; vs tanh form), KnownP2 (sum 1/(n^2-k^2) = 3/(4k^2)).
IdentityReport verify_halfinteger_special(IdentityId id, int k, std::optional<double> tol = std::nullopt,
                                          std::optional<int> truncation = std::nullopt);

/// Struve zero identities for |nu| < 1/2. The right-hand sides carry the
/// factor sqrt(pi) 2^(nu+1) Gamma(nu+1/2) (p = 2) and sqrt(pi) 2^(nu+2)
/// Gamma(nu+1/2) (p = 4); the report notes record the residual the smaller
/// factors 2^(nu-1) and 2^nu would give.
IdentityReport verify_struve(ZeroStore& store, IdentityId id, double nu, int k,
                             std::optional<double> tol = std::nullopt, std::optional<int> truncation = std::nullopt);

/// Finite sums over the zeros of H_n (nu = n + 1/2), 1 <= j <= n <= 60.
IdentityReport verify_k_identity(ZeroStore& store, IdentityId id, int n, int j,
                                 std::optional<double> tol = std::nullopt);
/// Same on an explicit zero set (any ordering).
IdentityReport verify_k_identity(const ComplexZeroSet& zeros, IdentityId id, int j,
                                 std::optional<double> tol = std::nullopt);

/// K_{nu+1}(z)/K_nu(z) = H_{n+1}(z)/(z H_n(z)) against
/// 1 + 2nu/z - sum_k 1/(z - z_k). Throws PoleError within 1e-8 of a zero.
IdentityReport verify_k_mittag(ZeroStore& store, int n, Complex z, std::optional<double> tol = std::nullopt);

// ------------------------------------------------------- structural checks

struct StructuralResult {
  std::string relation;  // the relation checked, e.g. "K' + K_{nu+1} = 0"
  double residual;       // relative to the largest term involved
};

/// At a zero x of J_nu: x J'' + J' = 0, J' = -J_{nu+1} and
/// x J_{nu+1}' = (nu+1) J'. Derivatives from the recurrences, values from
/// the ascending series.
std::vector<StructuralResult> bessel_structure(double nu, double zero);
/// At a zero x of H_nu: the Struve equation reduced to x H'' + H' = forcing,
/// H' = H_{nu-1} and x H_{nu-1}' = nu H' + x H''.
std::vector<StructuralResult> struve_structure(double nu, double zero);
/// At a zero z of K_nu (nu = n + 1/2): z K'' + K' = 0, K' = -K_{nu+1} and
/// z K_{nu+1}' = -(nu+1) K_{nu+1}, with K rebuilt from H_n and H_{n+1}.
std::vector<StructuralResult> k_structure(int n, Complex zero);

}  // namespace zerosum
