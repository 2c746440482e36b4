#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>

#include <json.hpp>

#include "zerosum/errors.hpp"
#include "zerosum/zeros.hpp"

namespace zerosum {

namespace {

using Json = nlohmann::ordered_json;

std::string decimal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.20e", v);
  return buf;
}

double parse_decimal(const Json& node, const std::string& path) {
  if (!node.is_string()) {
    throw ParseError(path + ": zero entry is not a decimal string", 0);
  }
  const std::string& s = node.get_ref<const std::string&>();
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0' || errno == ERANGE) {
    throw ParseError(path + ": bad decimal '" + s + "'", 0);
  }
  return v;
}

// nullopt when the file does not exist.
std::optional<Json> read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": malformed cache file", e.byte);
  }
  if (!doc.is_object() || !doc.contains("version")) {
    throw ParseError(path + ": cache document has no version", 0);
  }
  if (!doc["version"].is_number_integer() || doc["version"].get<int>() != kCacheVersion) {
    throw StaleCacheError(path + ": cache format version " + doc["version"].dump() + ", expected " +
                          std::to_string(kCacheVersion));
  }
  return doc;
}

template <class T>
T field(const Json& doc, const char* key, const std::string& path) {
  if (!doc.contains(key)) throw ParseError(path + ": missing field '" + key + "'", 0);
  try {
    return doc[key].get<T>();
  } catch (const Json::exception&) {
    throw ParseError(path + ": field '" + key + "' has the wrong type", 0);
  }
}

const Json& zero_array(const Json& doc, const std::string& path) {
  if (!doc.contains("zeros") || !doc["zeros"].is_array()) {
    throw ParseError(path + ": missing zero array", 0);
  }
  return doc["zeros"];
}

}  // namespace

void write_file_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) {
    fs::create_directories(target.parent_path());
  }
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + tmp.string() + "' for writing");
    out << text;
    out.flush();
    if (!out) throw Error("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("cannot rename cache file into place: " + ec.message());
  }
}

void cache_store(const ZeroTable& table, const std::string& path) {
  Json doc;
  doc["version"] = kCacheVersion;
  doc["family"] = to_string(table.family);
  doc["nu"] = table.nu;
  doc["abs_tol"] = table.abs_tol;
  Json zeros = Json::array();
  for (double z : table.zeros) zeros.push_back(decimal(z));
  doc["zeros"] = std::move(zeros);
  write_file_atomically(path, doc.dump(1) + "\n");
}

void cache_store(const ComplexZeroSet& set, const std::string& path) {
  Json doc;
  doc["version"] = kCacheVersion;
  doc["family"] = "bessel-k";
  doc["n"] = set.n;
  doc["nu"] = set.nu;
  doc["abs_tol"] = set.abs_tol;
  Json zeros = Json::array();
  for (const Complex& z : set.zeros) {
    Json entry;
    entry["re"] = decimal(z.real());
    entry["im"] = decimal(z.imag());
    zeros.push_back(std::move(entry));
  }
  doc["zeros"] = std::move(zeros);
  write_file_atomically(path, doc.dump(1) + "\n");
}

std::optional<ZeroTable> cache_load(Family family, double nu, int min_count, const std::string& path) {
  const auto doc = read_document(path);
  if (!doc) return std::nullopt;
  const auto name = field<std::string>(*doc, "family", path);
  if (name != to_string(family) || field<double>(*doc, "nu", path) != nu) {
    return std::nullopt;
  }
  ZeroTable table{family, nu, {}, field<double>(*doc, "abs_tol", path)};
  for (const Json& z : zero_array(*doc, path)) table.zeros.push_back(parse_decimal(z, path));
  if (table.zeros.size() < static_cast<std::size_t>(std::max(min_count, 0))) {
    return std::nullopt;
  }
  return table;
}

std::optional<ComplexZeroSet> cache_load_hn(int n, const std::string& path) {
  const auto doc = read_document(path);
  if (!doc) return std::nullopt;
  if (field<std::string>(*doc, "family", path) != "bessel-k" || field<int>(*doc, "n", path) != n) {
    return std::nullopt;
  }
  ComplexZeroSet set{n, field<double>(*doc, "nu", path), {}, field<double>(*doc, "abs_tol", path)};
  for (const Json& z : zero_array(*doc, path)) {
    if (!z.is_object() || !z.contains("re") || !z.contains("im")) {
      throw ParseError(path + ": complex zero needs 're' and 'im'", 0);
    }
    set.zeros.emplace_back(parse_decimal(z["re"], path), parse_decimal(z["im"], path));
  }
  if (set.zeros.size() != static_cast<std::size_t>(n)) return std::nullopt;
  return set;
}

std::string cache_file_name(Family family, double nu) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%a", nu);
  return to_string(family) + "_" + buf + ".json";
}

std::string cache_file_name_hn(int n) { return "bessel-k_n" + std::to_string(n) + ".json"; }

}  // namespace zerosum
