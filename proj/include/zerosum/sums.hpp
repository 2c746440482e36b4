#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zerosum/zeros.hpp"

namespace zerosum {

enum class Shift { minus, plus };
enum class SumMethod { direct_tail, closed_form };

std::string to_string(SumMethod m);

/// Sum over a zero family z_n of 1/(z_n^p - c^p) (minus) or 1/(z_n^p + c^p)
/// (plus). The centre c is z_k for `center_index` k, unless `point` is set,
/// in which case c is that arbitrary positive abscissa. `exclude_index`
/// drops one term and, when present, must equal `center_index`.
struct SumSpec {
  Family family = Family::BesselJ;
  double nu = 0.0;
  int power = 2;
  Shift shift = Shift::minus;
  int center_index = 1;
  std::optional<int> exclude_index;
  std::optional<double> point;
};

struct SumResult {
  double value = 0.0;
  int truncation_N = 0;
  /// Estimated bound on the error of the tail model; does not include the
  /// effect of inaccurate zeros.
  double tail_bound = 0.0;
  SumMethod method = SumMethod::direct_tail;
  /// Set when the sampled partial sums were not monotone, i.e. the
  /// asymptotic model did not describe the data.
  bool warning = false;
};

inline constexpr int kDefaultTruncationP2 = 200;
inline constexpr int kDefaultTruncationP4 = 60;
inline constexpr int kMaxTruncation = 3200;

/// Compensated sum of the first N terms (n = 1..N, minus the excluded one).
double partial_sum(const SumSpec& spec, const ZeroTable& table, int N);

/// All partial sums S(1), ..., S(N), compensated.
std::vector<double> partial_sums(const SumSpec& spec, const ZeroTable& table, int N);

struct TailOptions {
  /// Highest number of correction terms tried by the adaptive model.
  int levels = 6;
  /// Use the fixed two-parameter model (p = 2: S - A/M - B/M^2 on
  /// M = N/2, 3N/4, N; p = 4: S - A/M^3 on M = N/2, N) instead of the
  /// adaptive one. Its error order is known, which is what convergence-rate
  /// checks need.
  bool low_order = false;
};

/// Extrapolates S = lim S(M) from cumulative partial sums S(1..N) whose
/// terms decay like n^-p, i.e. S(M) = S - sum_j A_j M^-(p-1+j-1).
/// For each order m the model is fitted on m+1 points spread evenly over
/// [N/2, N]; the order whose estimate moved least from the previous one is
/// kept, and tail_bound = 4 |S_m - S_{m-1}|.
SumResult extrapolate_tail(std::span<const double> cumulative, int decay_power, const TailOptions& opts = {});

/// True when tail_bound is within a small multiple of the rounding floor
/// of the partial sums (1024 eps |value|): a larger N cannot improve it.
bool tail_at_noise_floor(const SumResult& r);

/// extrapolate_tail on the partial sums of `spec` over the first N zeros.
/// Requires N >= 20.
SumResult tail_extrapolate(const SumSpec& spec, const ZeroTable& table, int N, const TailOptions& opts = {});

/// Adaptive driver: starts at the default truncation (or `truncation` when
/// given), doubles N until tail_bound < target or the bound reaches the
/// rounding floor, extending `table` as needed. Stops at kMaxTruncation with
/// the warning flag set.
SumResult sum_with_tail(const SumSpec& spec, ZeroTable& table, double target,
                        std::optional<int> truncation = std::nullopt);

/// sum_n 1/(j_n^2 - x^2) = J_{nu+1}(x) / (2x J_nu(x)).
double closed_minus_sum(Order order, double x);
/// sum_n 1/(j_n^2 + x^2) = I_{nu+1}(x) / (2x I_nu(x)).
double closed_plus_sum(Order order, double x);
/// sum_n 1/(j_n^4 - x^4) = (ratio_j - ratio_i) / (4x^3).
double closed_quartic_sum(Order order, double x);
/// sum_n 1/(h_n^2 - x^2) = [(2nu+1)/x - H_{nu-1}(x)/H_nu(x)] / (2x), |nu| < 1/2.
double struve_ml_sum(Order order, double x);

struct VignatSides {
  double lhs;
  double rhs;
};

/// Both sides of
///   sum_{n!=k} 1/(a_n^4 - a_k^4)
///     = [sum_{n!=k} 1/(a_n^2 - a_k^2) - sum_{n!=k} 1/(a_n^2 + a_k^2)] / (2 a_k^2)
/// on a finite list; k is 1-based.
VignatSides vignat_split(std::span<const double> values, std::size_t k);

}  // namespace zerosum
