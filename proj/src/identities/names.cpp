#include <array>
#include <string>

#include "zerosum/errors.hpp"
#include "zerosum/identities.hpp"

namespace zerosum {

namespace {

struct Names {
  IdentityId id;
  const char* report;
  const char* cli;
};

constexpr std::array<Names, 11> kNames{{
    {IdentityId::CalogeroP2, "CALOGERO_P2", "calogero"},
    {IdentityId::QuarticJ, "QUARTIC_J", "quartic-j"},
    {IdentityId::QuarticInt, "QUARTIC_INT", "quartic-int"},
    {IdentityId::QuarticOdd, "QUARTIC_ODD", "quartic-odd"},
    {IdentityId::KnownP2, "KNOWN_P2", "known-p2"},
    {IdentityId::StruveP2, "STRUVE_P2", "struve-p2"},
    {IdentityId::StruveP4, "STRUVE_P4", "struve-p4"},
    {IdentityId::KP1, "K_P1", "k-p1"},
    {IdentityId::KP2, "K_P2", "k-p2"},
    {IdentityId::KP4, "K_P4", "k-p4"},
    {IdentityId::KMl, "K_ML", "k-ml"},
}};

const Names& lookup(IdentityId id) {
  for (const auto& n : kNames) {
    if (n.id == id) return n;
  }
  throw DomainError("unknown identity");
}

}  // namespace

std::string report_name(IdentityId id) { return lookup(id).report; }
std::string cli_name(IdentityId id) { return lookup(id).cli; }

IdentityId identity_from_cli_name(const std::string& name) {
  for (const auto& n : kNames) {
    if (name == n.cli || name == n.report) return n.id;
  }
  std::string known;
  for (const auto& n : kNames) known += std::string(known.empty() ? "" : ", ") + n.cli;
  throw UsageError("unknown identity '" + name + "' (expected one of " + known + ")");
}

std::vector<IdentityId> all_identities() {
  std::vector<IdentityId> out;
  for (const auto& n : kNames) out.push_back(n.id);
  return out;
}

double default_tolerance(IdentityId id) {
  switch (id) {
    case IdentityId::StruveP2:
    case IdentityId::StruveP4:
      return 1e-8;
    case IdentityId::KP1:
    case IdentityId::KP2:
    case IdentityId::KP4:
    case IdentityId::KMl:
      return 1e-11;
    default:
      return 1e-9;
  }
}

}  // namespace zerosum
