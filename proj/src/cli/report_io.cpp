#include <cstdio>
#include <string>

#include <json.hpp>

#include "zerosum/cli.hpp"

namespace zerosum::cli {

namespace {

using Json = nlohmann::ordered_json;

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <class T>
std::string opt_csv(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, double>) {
    return num(*v);
  } else {
    return std::to_string(*v);
  }
}

// RFC 4180 quoting for free-text fields.
std::string quoted(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string note_text(const IdentityReport& r) {
  if (r.failed) return r.error;
  return r.notes;
}

}  // namespace

std::string report_json(const IdentityReport& r) {
  Json params{{"nu", opt(r.params.nu)}, {"k", opt(r.params.k)}, {"n", opt(r.params.n)}, {"j", opt(r.params.j)}};
  if (r.params.z) params["z"] = complex_json(*r.params.z);
  Json doc{
      {"tool_version", kToolVersion},
      {"identity_id", report_name(r.id)},
      {"params", params},
      {"lhs", complex_json(r.lhs)},
      {"rhs", complex_json(r.rhs)},
      {"abs_residual", r.abs_residual},
      {"rel_residual", r.rel_residual},
      {"truncation_N", r.truncation_N},
      {"tail_bound", r.tail_bound},
      {"tolerance", r.tolerance},
      {"passed", r.passed},
  };
  if (r.failed) doc["error"] = r.error;
  if (!r.notes.empty()) doc["notes"] = r.notes;
  return doc.dump();
}

std::string report_csv_header() {
  return "tool_version,identity_id,nu,k,n,j,z_re,z_im,lhs_re,lhs_im,rhs_re,rhs_im,abs_residual,rel_residual,"
         "truncation_N,tail_bound,tolerance,passed,notes";
}

std::string report_csv(const IdentityReport& r) {
  std::string z_re, z_im;
  if (r.params.z) {
    z_re = num(r.params.z->real());
    z_im = num(r.params.z->imag());
  }
  std::string row = std::string(kToolVersion) + "," + report_name(r.id);
  for (const std::string& f :
       {opt_csv(r.params.nu), opt_csv(r.params.k), opt_csv(r.params.n), opt_csv(r.params.j), z_re, z_im,
        num(r.lhs.real()), num(r.lhs.imag()), num(r.rhs.real()), num(r.rhs.imag()), num(r.abs_residual),
        num(r.rel_residual), std::to_string(r.truncation_N), num(r.tail_bound), num(r.tolerance)}) {
    row += "," + f;
  }
  row += std::string(",") + (r.passed ? "true" : "false") + "," + quoted(note_text(r));
  return row;
}

std::string report_text(const IdentityReport& r) {
  std::string params;
  auto add = [&](const char* name, const std::string& v) {
    params += (params.empty() ? "" : " ") + std::string(name) + "=" + v;
  };
  if (r.params.nu) add("nu", num(*r.params.nu));
  if (r.params.k) add("k", std::to_string(*r.params.k));
  if (r.params.n) add("n", std::to_string(*r.params.n));
  if (r.params.j) add("j", std::to_string(*r.params.j));
  if (r.params.z) add("z", num(r.params.z->real()) + (r.params.z->imag() < 0 ? "" : "+") + num(r.params.z->imag()) + "i");
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-12s %-24s residual %.3e  tol %.1e  %s", report_name(r.id).c_str(),
                params.c_str(), r.rel_residual, r.tolerance, r.failed ? "ERROR" : (r.passed ? "ok" : "FAIL"));
  std::string line = buf;
  if (r.failed) line += "  " + r.error;
  return line;
}

}  // namespace zerosum::cli
