#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zerosum/specfun.hpp"

namespace zerosum {

enum class Family { BesselJ, StruveH };

std::string to_string(Family f);
/// Accepts "bessel-j" / "struve-h"; throws UsageError otherwise.
Family family_from_string(const std::string& name);

inline constexpr double kDefaultRealZeroTol = 1e-12;
inline constexpr double kDefaultComplexZeroTol = 1e-11;

/// Ordered positive zeros of J_nu or H_nu at one order.
struct ZeroTable {
  Family family = Family::BesselJ;
  double nu = 0.0;
  std::vector<double> zeros;
  double abs_tol = kDefaultRealZeroTol;

  std::size_t count() const { return zeros.size(); }
  /// 1-based access, matching j_{nu,n}.
  double operator[](std::size_t n) const { return zeros.at(n - 1); }
};

/// The n zeros of H_n (equivalently of K_{n+1/2}), closed under
/// conjugation, all in the open left half-plane.
struct ComplexZeroSet {
  int n = 0;
  double nu = 0.5;
  std::vector<Complex> zeros;
  double abs_tol = kDefaultComplexZeroTol;
};

/// First-order McMahon approximation beta - (4 nu^2 - 1)/(8 beta),
/// beta = (n + nu/2 - 1/4) pi.
double mcmahon_guess(Order order, int n);

/// Zeros j_{nu,1..count} by Newton iteration on the logarithmic derivative,
/// each one confirmed by a sign change of the series value of J_nu across
/// [z - abs_tol, z + abs_tol].
ZeroTable find_bessel_zeros(Order order, int count, double abs_tol = kDefaultRealZeroTol);

/// Zeros h_{nu,1..count} for |nu| < 1/2: sign-change scan with step pi/4
/// from x = 0.1, then bisection and safeguarded Newton.
ZeroTable find_struve_zeros(Order order, int count, double abs_tol = kDefaultRealZeroTol);

/// Continues `table` until it holds at least `count` zeros; reuses what is
/// already there.
void extend_zeros(ZeroTable& table, int count);

/// Zeros of H_n by Aberth-Ehrlich simultaneous iteration, 1 <= n <= 60.
ComplexZeroSet find_hn_zeros(int n, double abs_tol = kDefaultComplexZeroTol);

// ---------------------------------------------------------------- cache

inline constexpr int kCacheVersion = 1;

/// Writes `text` to `path` through a temporary file in the same directory
/// and a rename, so readers never see a partial file. Creates missing
/// parent directories.
void write_file_atomically(const std::string& path, const std::string& text);

/// Writes the table as a JSON document via a temporary file and an atomic
/// rename. Zeros are stored as decimal strings with 21 significant digits.
void cache_store(const ZeroTable& table, const std::string& path);
void cache_store(const ComplexZeroSet& set, const std::string& path);

/// Returns the cached table if the file exists, matches (family, nu) and
/// holds at least `min_count` zeros; nullopt otherwise. Malformed files
/// throw ParseError, other format versions throw StaleCacheError.
std::optional<ZeroTable> cache_load(Family family, double nu, int min_count, const std::string& path);
std::optional<ComplexZeroSet> cache_load_hn(int n, const std::string& path);

/// Canonical file name for a table inside a cache directory; the order is
/// encoded exactly (hex float) so distinct doubles never share a file.
std::string cache_file_name(Family family, double nu);
std::string cache_file_name_hn(int n);

// ---------------------------------------------------------------- store

/// In-memory collection of zero tables shared by the sums and identity
/// checks. With a cache directory, tables are read from it on first use and
/// written back by flush() when they have grown.
class ZeroStore {
 public:
  explicit ZeroStore(std::optional<std::string> cache_dir = std::nullopt);

  /// Table for (family, nu) holding at least min_count zeros.
  ZeroTable& table(Family family, double nu, int min_count);
  const ComplexZeroSet& hn(int n);

  /// Writes every table that changed since it was loaded.
  void flush();

  const std::optional<std::string>& cache_dir() const { return dir_; }

 private:
  struct Entry {
    ZeroTable table;
    std::size_t persisted = 0;
  };
  std::string path_for(const std::string& name) const;

  std::optional<std::string> dir_;
  std::map<std::pair<Family, double>, Entry> tables_;
  std::map<int, std::pair<ComplexZeroSet, bool>> hn_;
};

}  // namespace zerosum
