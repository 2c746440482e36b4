#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "zerosum/identities.hpp"

namespace zerosum::cli {

inline constexpr const char* kToolVersion = "1.0.0";

/// Environment variable naming the zero cache directory.
inline constexpr const char* kCacheEnv = "ZEROSUM_CACHE_DIR";

enum ExitCode : int {
  kExitPass = 0,
  kExitResidual = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

enum class Format { json, csv, text };

/// Runs the command line; argv[0] is the program name. Reports go to `out`
/// (or to --output, written atomically), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "a..b" inclusive, or a single integer "a". Throws UsageError.
std::pair<int, int> parse_range(const std::string& text);
/// Comma-separated reals, e.g. "-0.5,0,2.7". Throws UsageError.
std::vector<double> parse_grid(const std::string& text);
/// "re,im" or a single real. Throws UsageError.
Complex parse_complex(const std::string& text);

/// One JSON object (no trailing newline) per the report schema.
std::string report_json(const IdentityReport& r);
std::string report_csv_header();
std::string report_csv(const IdentityReport& r);
std::string report_text(const IdentityReport& r);

}  // namespace zerosum::cli
