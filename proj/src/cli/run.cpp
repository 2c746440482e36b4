#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zerosum/cli.hpp"
#include "zerosum/errors.hpp"

namespace zerosum::cli {

namespace {

using Json = nlohmann::ordered_json;

// ------------------------------------------------------------ options

struct CommonOpts {
  std::string format = "json";
  std::string output;
  std::string cache_dir;
  bool no_cache = false;
};

struct VerifyOpts {
  std::string id;
  std::string nu;
  std::string k;
  std::string n;
  std::string j;
  std::string z;
  double tol = 0.0;
  int truncation = 0;
};

struct SweepOpts {
  std::string ids;
  std::string nu;
  std::string k;
  std::string n;
  std::string preset;
  double tol = 0.0;
};

struct ZerosOpts {
  std::string family;
  double nu = 0.0;
  bool nu_given = false;
  int count = 0;
  int n = 0;
  double tol = 0.0;
};

struct SumOpts {
  std::string family;
  double nu = 0.0;
  int power = 2;
  std::string shift = "minus";
  int k = 0;
  double x = 0.0;
  bool exclude = false;
  bool closed = false;
  double tol = 1e-10;
  int truncation = 0;
};

struct CacheOpts {
  std::string action;
  std::string family;
  std::string nu;
  std::string n;
  int count = 0;
};

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw UsageError("unknown format '" + s + "' (expected json, csv or text)");
}

std::optional<std::string> resolve_cache_dir(const CommonOpts& c) {
  if (c.no_cache) return std::nullopt;
  if (!c.cache_dir.empty()) return c.cache_dir;
  if (const char* env = std::getenv(kCacheEnv); env && *env) return std::string(env);
  if (const char* home = std::getenv("HOME"); home && *home) {
    return (std::filesystem::path(home) / ".cache" / "zerosum").string();
  }
  return std::nullopt;
}

std::vector<int> expand(const std::pair<int, int>& r) {
  std::vector<int> out;
  for (int i = r.first; i <= r.second; ++i) out.push_back(i);
  return out;
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

// ------------------------------------------------------------ identity cells

struct Cell {
  IdentityId id;
  std::optional<double> nu;
  int a = 0;  // k, or n for the K identities
  int b = 0;  // j for the K identities
  std::optional<Complex> z;
  std::optional<double> tol;
};

enum class Needs { nu_k, k_only, n_j, n_z };

Needs needs(IdentityId id) {
  switch (id) {
    case IdentityId::CalogeroP2:
    case IdentityId::QuarticJ:
    case IdentityId::StruveP2:
    case IdentityId::StruveP4:
      return Needs::nu_k;
    case IdentityId::QuarticInt:
    case IdentityId::QuarticOdd:
    case IdentityId::KnownP2:
      return Needs::k_only;
    case IdentityId::KMl:
      return Needs::n_z;
    default:
      return Needs::n_j;
  }
}

IdentityReport evaluate(ZeroStore& store, const Cell& c, std::optional<int> truncation) {
  switch (c.id) {
    case IdentityId::CalogeroP2:
      return verify_calogero(store, *c.nu, c.a, c.tol, truncation);
    case IdentityId::QuarticJ:
      return verify_quartic_j(store, *c.nu, c.a, c.tol, truncation);
    case IdentityId::QuarticInt:
    case IdentityId::QuarticOdd:
    case IdentityId::KnownP2:
      return verify_halfinteger_special(c.id, c.a, c.tol, truncation);
    case IdentityId::StruveP2:
    case IdentityId::StruveP4:
      return verify_struve(store, c.id, *c.nu, c.a, c.tol, truncation);
    case IdentityId::KMl:
      return verify_k_mittag(store, c.a, *c.z, c.tol);
    default:
      return verify_k_identity(store, c.id, c.a, c.b, c.tol);
  }
}

// Builds the cells for one identity from textual selectors, rejecting
// selectors that do not apply before anything is computed.
void add_cells(std::vector<Cell>& cells, IdentityId id, const std::string& nu, const std::string& k,
               const std::string& n, const std::string& j, const std::string& z, std::optional<double> tol) {
  const std::string name = cli_name(id);
  auto forbid = [&](const std::string& value, const char* flag) {
    if (!value.empty()) throw UsageError(std::string(flag) + " does not apply to " + name);
  };
  auto require = [&](const std::string& value, const char* flag) {
    if (value.empty()) throw UsageError(name + " needs " + flag);
  };
  switch (needs(id)) {
    case Needs::nu_k: {
      require(nu, "--nu");
      require(k, "--k");
      forbid(n, "--n");
      forbid(j, "--j");
      forbid(z, "--z");
      std::vector<double> grid = parse_grid(nu);
      std::sort(grid.begin(), grid.end());
      grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
      for (double v : grid) {
        for (int kk : expand(parse_range(k))) cells.push_back({id, v, kk, 0, std::nullopt, tol});
      }
      break;
    }
    case Needs::k_only:
      require(k, "--k");
      forbid(nu, "--nu");
      forbid(n, "--n");
      forbid(j, "--j");
      forbid(z, "--z");
      for (int kk : expand(parse_range(k))) cells.push_back({id, std::nullopt, kk, 0, std::nullopt, tol});
      break;
    case Needs::n_j:
      require(n, "--n");
      forbid(nu, "--nu");
      forbid(k, "--k");
      forbid(z, "--z");
      for (int nn : expand(parse_range(n))) {
        const auto jr = j.empty() ? std::make_pair(1, nn) : parse_range(j);
        for (int jj : expand(jr)) cells.push_back({id, std::nullopt, nn, jj, std::nullopt, tol});
      }
      break;
    case Needs::n_z:
      require(n, "--n");
      require(z, "--z");
      forbid(nu, "--nu");
      forbid(k, "--k");
      forbid(j, "--j");
      for (int nn : expand(parse_range(n))) cells.push_back({id, std::nullopt, nn, 0, parse_complex(z), tol});
      break;
  }
}

// The grids of the acceptance criteria, with their tolerances.
std::vector<Cell> acceptance_cells() {
  std::vector<Cell> cells;
  const std::string bessel_nu = "-0.9,-0.5,0,0.5,1,2.7,5";
  add_cells(cells, IdentityId::CalogeroP2, bessel_nu, "1..10", "", "", "", 1e-9);
  add_cells(cells, IdentityId::QuarticJ, bessel_nu, "1..10", "", "", "", 1e-9);
  add_cells(cells, IdentityId::QuarticInt, "", "1..8", "", "", "", 1e-10);
  for (int k : {1, 3, 5, 7}) add_cells(cells, IdentityId::QuarticOdd, "", std::to_string(k), "", "", "", 1e-10);
  add_cells(cells, IdentityId::KnownP2, "", "1..20", "", "", "", 1e-12);
  add_cells(cells, IdentityId::StruveP2, "-0.4,-0.2,0,0.2,0.4", "1..6", "", "", "", 1e-8);
  add_cells(cells, IdentityId::StruveP4, "-0.4,-0.2,0,0.2,0.4", "1..6", "", "", "", 1e-8);
  for (IdentityId id : {IdentityId::KP1, IdentityId::KP2, IdentityId::KP4}) {
    add_cells(cells, id, "", "", "1..12", "", "", 1e-11);
  }
  return cells;
}

// ------------------------------------------------------------ output

struct Outcome {
  std::string body;
  int code = kExitPass;
};

int code_for(const std::vector<IdentityReport>& reports) {
  bool residual = false;
  for (const auto& r : reports) {
    if (r.failed) return kExitNumerical;
    if (!r.passed) residual = true;
  }
  return residual ? kExitResidual : kExitPass;
}

std::string summary_json(const std::vector<IdentityReport>& reports) {
  Json max_res = Json::object();
  int passed = 0, failed = 0, errors = 0;
  for (const auto& r : reports) {
    const std::string key = report_name(r.id);
    if (r.failed) {
      ++errors;
    } else {
      if (r.passed) ++passed; else ++failed;
      const double prev = max_res.contains(key) ? max_res[key].get<double>() : 0.0;
      max_res[key] = std::max(prev, r.rel_residual);
    }
  }
  Json s{{"tool_version", kToolVersion},
         {"records", reports.size()},
         {"passed", passed},
         {"failed", failed},
         {"numerical_failures", errors},
         {"max_residual", max_res}};
  return Json{{"summary", s}}.dump();
}

std::string render(const std::vector<IdentityReport>& reports, Format format, bool with_summary) {
  std::ostringstream os;
  if (format == Format::csv) os << report_csv_header() << "\n";
  for (const auto& r : reports) {
    switch (format) {
      case Format::json:
        os << report_json(r) << "\n";
        break;
      case Format::csv:
        os << report_csv(r) << "\n";
        break;
      case Format::text:
        os << report_text(r) << "\n";
        break;
    }
  }
  if (with_summary && format == Format::json) os << summary_json(reports) << "\n";
  if (with_summary && format == Format::text) {
    const int code = code_for(reports);
    os << reports.size() << " records, "
       << std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.passed; }) << " passed"
       << (code == kExitPass ? "" : code == kExitResidual ? ", residual failures" : ", numerical failures") << "\n";
  }
  return os.str();
}

// ------------------------------------------------------------ commands

Outcome cmd_verify(const VerifyOpts& v, Format format, ZeroStore& store) {
  const IdentityId id = identity_from_cli_name(v.id);
  std::optional<double> tol;
  if (v.tol != 0.0) tol = v.tol;
  std::vector<Cell> cells;
  add_cells(cells, id, v.nu, v.k, v.n, v.j, v.z, tol);
  const std::optional<int> truncation = v.truncation > 0 ? std::optional<int>(v.truncation) : std::nullopt;
  std::vector<IdentityReport> reports;
  for (const Cell& c : cells) reports.push_back(evaluate(store, c, truncation));
  return {render(reports, format, false), code_for(reports)};
}

Outcome cmd_sweep(const SweepOpts& s, Format format, ZeroStore& store) {
  std::vector<Cell> cells;
  if (!s.preset.empty()) {
    if (s.preset != "acceptance") throw UsageError("unknown preset '" + s.preset + "'");
    if (!s.ids.empty() || !s.nu.empty() || !s.k.empty() || !s.n.empty()) {
      throw UsageError("--preset cannot be combined with --ids, --nu, --k or --n");
    }
    cells = acceptance_cells();
    if (s.tol != 0.0) {
      for (auto& c : cells) c.tol = s.tol;
    }
  } else {
    if (s.ids.empty()) throw UsageError("sweep needs --ids or --preset");
    std::optional<double> tol;
    if (s.tol != 0.0) tol = s.tol;
    std::vector<IdentityId> ids;
    std::stringstream ss(s.ids);
    for (std::string item; std::getline(ss, item, ',');) {
      if (!item.empty()) ids.push_back(identity_from_cli_name(item));
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (IdentityId id : ids) {
      // Each identity takes the selectors it understands from the grid.
      const Needs nd = needs(id);
      if (nd == Needs::n_z) throw UsageError("k-ml needs a point z; use verify");
      add_cells(cells, id, nd == Needs::nu_k ? s.nu : "", nd == Needs::n_j ? "" : s.k, nd == Needs::n_j ? s.n : "",
                "", "", tol);
    }
  }
  if (cells.empty()) throw UsageError("the sweep grid is empty");
  std::vector<IdentityReport> reports;
  for (const Cell& c : cells) reports.push_back(evaluate(store, c, std::nullopt));
  return {render(reports, format, true), code_for(reports)};
}

Outcome cmd_zeros(const ZerosOpts& z, Format format, ZeroStore& store) {
  std::ostringstream os;
  if (z.family == "bessel-k") {
    if (z.n < 1) throw UsageError("bessel-k zeros need --n >= 1");
    if (z.nu_given || z.count != 0) throw UsageError("--nu and --count do not apply to bessel-k; use --n");
    const ComplexZeroSet& set = store.hn(z.n);
    if (format == Format::csv) os << "index,re,im\n";
    for (std::size_t i = 0; i < set.zeros.size(); ++i) {
      const Complex c = set.zeros[i];
      switch (format) {
        case Format::json:
          os << Json{{"family", "bessel-k"}, {"n", set.n}, {"nu", set.nu}, {"index", i + 1}, {"re", c.real()},
                     {"im", c.imag()}}
                    .dump()
             << "\n";
          break;
        case Format::csv:
          os << i + 1 << "," << fmt("%.17g", c.real()) << "," << fmt("%.17g", c.imag()) << "\n";
          break;
        case Format::text:
          os << fmt("%.16g", c.real()) << " " << fmt("%.16g", c.imag()) << "\n";
          break;
      }
    }
    return {os.str(), kExitPass};
  }
  const Family family = family_from_string(z.family);
  if (!z.nu_given) throw UsageError("zeros needs --nu");
  if (z.count < 1) throw UsageError("zeros needs --count >= 1");
  if (z.n != 0) throw UsageError("--n applies only to bessel-k");
  if (family == Family::BesselJ && !(z.nu > -1.0)) throw UsageError("bessel-j needs nu > -1");
  if (family == Family::StruveH && !(std::abs(z.nu) < 0.5)) throw UsageError("struve-h needs |nu| < 1/2");
  ZeroTable table;
  if (z.tol != 0.0) {
    table = family == Family::BesselJ ? find_bessel_zeros(Order{z.nu}, z.count, z.tol)
                                      : find_struve_zeros(Order{z.nu}, z.count, z.tol);
  } else {
    table = store.table(family, z.nu, z.count);
  }
  if (format == Format::csv) os << "index,zero\n";
  for (int i = 1; i <= z.count; ++i) {
    const double v = table[static_cast<std::size_t>(i)];
    switch (format) {
      case Format::json:
        os << Json{{"family", z.family}, {"nu", z.nu}, {"index", i}, {"zero", v}}.dump() << "\n";
        break;
      case Format::csv:
        os << i << "," << fmt("%.17g", v) << "\n";
        break;
      case Format::text:
        os << fmt("%.16g", v) << "\n";
        break;
    }
  }
  return {os.str(), kExitPass};
}

Outcome cmd_sum(const SumOpts& s, bool x_given, bool k_given, Format format, ZeroStore& store) {
  const Family family = family_from_string(s.family);
  if (s.power != 2 && s.power != 4) throw UsageError("--power must be 2 or 4");
  if (s.shift != "minus" && s.shift != "plus") throw UsageError("--shift must be minus or plus");
  if (x_given == k_given) throw UsageError("sum needs exactly one of --k and --x");
  if (!(s.tol > 0.0)) throw UsageError("--tol must be positive");
  SumSpec spec;
  spec.family = family;
  spec.nu = s.nu;
  spec.power = s.power;
  spec.shift = s.shift == "minus" ? Shift::minus : Shift::plus;
  if (k_given) {
    if (s.k < 1) throw UsageError("--k must be at least 1");
    spec.center_index = s.k;
    // A minus-sum centred on a zero must drop its own term.
    if (spec.shift == Shift::minus || s.exclude) spec.exclude_index = s.k;
  } else {
    if (!(s.x > 0.0)) throw UsageError("--x must be positive");
    if (s.exclude) throw UsageError("--exclude needs --k");
    spec.point = s.x;
  }
  ZeroTable& table = store.table(family, s.nu, k_given ? s.k : 1);
  const std::optional<int> truncation = s.truncation > 0 ? std::optional<int>(s.truncation) : std::nullopt;
  const SumResult r = sum_with_tail(spec, table, s.tol, truncation);

  std::optional<double> closed;
  if (s.closed) {
    if (!x_given) throw UsageError("--closed needs --x");
    const Order order{s.nu};
    if (family == Family::BesselJ) {
      if (s.power == 4 && spec.shift == Shift::plus) throw UsageError("no closed form for the quartic plus-sum");
      closed = s.power == 4 ? closed_quartic_sum(order, s.x)
                            : (spec.shift == Shift::minus ? closed_minus_sum(order, s.x) : closed_plus_sum(order, s.x));
    } else {
      if (s.power != 2 || spec.shift != Shift::minus) {
        throw UsageError("the only Struve closed form is the p = 2 minus-sum");
      }
      closed = struve_ml_sum(order, s.x);
    }
  }
  int code = kExitPass;
  Json rec{{"tool_version", kToolVersion}, {"family", s.family}, {"nu", s.nu}, {"power", s.power},
           {"shift", s.shift}};
  if (k_given) rec["k"] = s.k; else rec["x"] = s.x;
  rec["value"] = r.value;
  rec["truncation_N"] = r.truncation_N;
  rec["tail_bound"] = r.tail_bound;
  rec["method"] = to_string(r.method);
  rec["warning"] = r.warning;
  if (closed) {
    const double diff = std::abs(r.value - *closed);
    rec["closed_form"] = *closed;
    rec["difference"] = diff;
    rec["agrees"] = diff <= r.tail_bound + 1e-9 * std::abs(*closed);
    if (!rec["agrees"].get<bool>()) code = kExitResidual;
  }
  std::ostringstream os;
  switch (format) {
    case Format::json:
      os << rec.dump() << "\n";
      break;
    case Format::csv: {
      std::string head, row;
      for (auto it = rec.begin(); it != rec.end(); ++it) {
        head += (head.empty() ? "" : ",") + it.key();
        const std::string v = it->is_string() ? it->get<std::string>() : it->dump();
        row += (row.empty() ? "" : ",") + v;
      }
      os << head << "\n" << row << "\n";
      break;
    }
    case Format::text:
      os << fmt("%.17g", r.value) << "  (N = " << r.truncation_N << ", tail bound " << fmt("%.3e", r.tail_bound)
         << ")";
      if (closed) os << "  closed form " << fmt("%.17g", *closed) << "  difference " << fmt("%.3e", std::abs(r.value - *closed));
      os << "\n";
      break;
  }
  return {os.str(), code};
}

Outcome cmd_cache(const CacheOpts& c, const std::optional<std::string>& dir, ZeroStore& store) {
  namespace fs = std::filesystem;
  if (c.action == "path") {
    if (!dir) throw UsageError("no cache directory configured");
    return {*dir + "\n", kExitPass};
  }
  if (!dir) throw UsageError("cache commands need a cache directory (--cache-dir or " + std::string(kCacheEnv) + ")");
  std::ostringstream os;
  auto ours = [](const fs::path& p) {
    const std::string name = p.filename().string();
    return p.extension() == ".json" &&
           (name.rfind("bessel-j_", 0) == 0 || name.rfind("struve-h_", 0) == 0 || name.rfind("bessel-k_", 0) == 0);
  };
  if (c.action == "list") {
    std::vector<std::string> names;
    if (fs::exists(*dir)) {
      for (const auto& e : fs::directory_iterator(*dir)) {
        if (e.is_regular_file() && ours(e.path())) names.push_back(e.path().filename().string());
      }
    }
    std::sort(names.begin(), names.end());
    for (const auto& n : names) os << n << "\n";
    return {os.str(), kExitPass};
  }
  if (c.action == "clear") {
    int removed = 0;
    if (fs::exists(*dir)) {
      for (const auto& e : fs::directory_iterator(*dir)) {
        if (e.is_regular_file() && ours(e.path())) {
          fs::remove(e.path());
          ++removed;
        }
      }
    }
    os << "removed " << removed << " cache files\n";
    return {os.str(), kExitPass};
  }
  // warm
  if (c.family == "bessel-k") {
    if (c.n.empty()) throw UsageError("cache warm for bessel-k needs --n");
    for (int n : expand(parse_range(c.n))) store.hn(n);
  } else {
    const Family family = family_from_string(c.family);
    if (c.nu.empty() || c.count < 1) throw UsageError("cache warm needs --nu and --count");
    for (double nu : parse_grid(c.nu)) store.table(family, nu, c.count);
  }
  store.flush();
  os << "cache warmed in " << *dir << "\n";
  return {os.str(), kExitPass};
}

void add_common(CLI::App* sub, CommonOpts& common, bool formats = true) {
  if (formats) {
    sub->add_option("--format", common.format, "Output format: json (one object per line), csv or text")
        ->capture_default_str();
    sub->add_option("--output,-o", common.output, "Write the report to this file (atomically) instead of stdout");
  }
  sub->add_option("--cache-dir", common.cache_dir, std::string("Zero cache directory (default: $") + kCacheEnv +
                                                       ", else ~/.cache/zerosum)");
  sub->add_flag("--no-cache", common.no_cache, "Do not read or write the zero cache");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify Rayleigh-type sum identities over zeros of Bessel, Struve and Macdonald functions.",
               "zerosum"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  CommonOpts common;

  VerifyOpts verify;
  auto* v = app.add_subcommand("verify", "Check one identity on a parameter range");
  v->add_option("--id", verify.id, "Identity: calogero, quartic-j, quartic-int, quartic-odd, known-p2, "
                                   "struve-p2, struve-p4, k-p1, k-p2, k-p4, k-ml")
      ->required();
  v->add_option("--nu", verify.nu, "Order, or comma-separated orders");
  v->add_option("--k", verify.k, "Zero index or range a..b");
  v->add_option("--n", verify.n, "Degree n (nu = n + 1/2) or range, for the K identities");
  v->add_option("--j", verify.j, "Zero index or range for the K identities (default: all)");
  v->add_option("--z", verify.z, "Point re,im for k-ml");
  v->add_option("--tol", verify.tol, "Tolerance override")->check(CLI::PositiveNumber);
  v->add_option("--truncation", verify.truncation, "Fixed truncation N (disables the adaptive tail)")
      ->check(CLI::Range(20, kMaxTruncation));
  add_common(v, common);

  SweepOpts sweep;
  auto* s = app.add_subcommand("sweep", "Check identities over a grid and summarize");
  s->add_option("--ids", sweep.ids, "Comma-separated identities");
  s->add_option("--nu", sweep.nu, "Comma-separated orders");
  s->add_option("--k", sweep.k, "Zero index range a..b");
  s->add_option("--n", sweep.n, "Degree range a..b for the K identities");
  s->add_option("--preset", sweep.preset, "Named grid: acceptance");
  s->add_option("--tol", sweep.tol, "Tolerance override for every cell")->check(CLI::PositiveNumber);
  add_common(s, common);

  ZerosOpts zeros;
  auto* z = app.add_subcommand("zeros", "Print zeros of J_nu, H_nu or K_{n+1/2}");
  z->add_option("--family", zeros.family, "bessel-j, struve-h or bessel-k")->required();
  auto* z_nu = z->add_option("--nu", zeros.nu, "Order (bessel-j, struve-h)");
  z->add_option("--count", zeros.count, "Number of zeros (bessel-j, struve-h)");
  z->add_option("--n", zeros.n, "Degree n, nu = n + 1/2 (bessel-k)");
  z->add_option("--tol", zeros.tol, "Absolute tolerance (bypasses the cache)")->check(CLI::PositiveNumber);
  add_common(z, common);

  SumOpts sum;
  auto* u = app.add_subcommand("sum", "Evaluate a sum over zeros by truncation and tail extrapolation");
  u->add_option("--family", sum.family, "bessel-j or struve-h")->required();
  u->add_option("--nu", sum.nu, "Order")->required();
  u->add_option("--power", sum.power, "2 or 4")->capture_default_str();
  u->add_option("--shift", sum.shift, "minus or plus")->capture_default_str();
  auto* u_k = u->add_option("--k", sum.k, "Centre at the k-th zero");
  auto* u_x = u->add_option("--x", sum.x, "Centre at an arbitrary point x > 0");
  u->add_flag("--exclude", sum.exclude, "Drop the k-th term also from a plus-sum");
  u->add_flag("--closed", sum.closed, "Also evaluate the closed form (needs --x)");
  u->add_option("--tol", sum.tol, "Target tail bound")->capture_default_str()->check(CLI::PositiveNumber);
  u->add_option("--truncation", sum.truncation, "Fixed truncation N")->check(CLI::Range(20, kMaxTruncation));
  add_common(u, common);

  CacheOpts cache;
  auto* c = app.add_subcommand("cache", "Inspect or fill the zero cache");
  c->add_option("action", cache.action, "list, clear, warm or path")
      ->required()
      ->check(CLI::IsMember({"list", "clear", "warm", "path"}));
  c->add_option("--family", cache.family, "bessel-j, struve-h or bessel-k (warm)");
  c->add_option("--nu", cache.nu, "Comma-separated orders (warm)");
  c->add_option("--count", cache.count, "Zeros per order (warm)");
  c->add_option("--n", cache.n, "Degree range for bessel-k (warm)");
  add_common(c, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const Format format = parse_format(common.format);
    const std::optional<std::string> dir = resolve_cache_dir(common);
    ZeroStore store(dir);
    Outcome result;
    if (*v) {
      result = cmd_verify(verify, format, store);
    } else if (*s) {
      result = cmd_sweep(sweep, format, store);
    } else if (*z) {
      zeros.nu_given = z_nu->count() > 0;
      result = cmd_zeros(zeros, format, store);
    } else if (*u) {
      result = cmd_sum(sum, u_x->count() > 0, u_k->count() > 0, format, store);
    } else {
      result = cmd_cache(cache, dir, store);
    }
    // A cache that cannot be written must not lose a finished report.
    try {
      store.flush();
    } catch (const std::exception& e) {
      err << "warning: could not update the zero cache: " << e.what() << "\n";
    }
    if (common.output.empty()) {
      out << result.body;
    } else {
      write_file_atomically(common.output, result.body);
    }
    return result.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace zerosum::cli
