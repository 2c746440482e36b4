#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "zerosum/cli.hpp"
#include "zerosum/errors.hpp"

namespace zerosum::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

int to_int(const std::string& raw, const std::string& context) {
  const std::string s = trim(raw);
  errno = 0;
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || *end != '\0' || errno == ERANGE || v < INT32_MIN || v > INT32_MAX) {
    throw UsageError("bad integer '" + raw + "' in " + context);
  }
  return static_cast<int>(v);
}

double to_real(const std::string& raw, const std::string& context) {
  const std::string s = trim(raw);
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
    throw UsageError("bad number '" + raw + "' in " + context);
  }
  return v;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text, "range '" + text + "'");
    return {v, v};
  }
  const int a = to_int(text.substr(0, dots), "range '" + text + "'");
  const int b = to_int(text.substr(dots + 2), "range '" + text + "'");
  if (b < a) {
    throw UsageError("empty range '" + text + "'");
  }
  return {a, b};
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    out.push_back(to_real(item, "grid '" + text + "'"));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {to_real(text, "complex '" + text + "'"), 0.0};
  return {to_real(text.substr(0, comma), "complex '" + text + "'"),
          to_real(text.substr(comma + 1), "complex '" + text + "'")};
}

}  // namespace zerosum::cli
