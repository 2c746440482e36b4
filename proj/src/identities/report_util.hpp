#pragma once

#include <algorithm>
#include <cmath>
#include <optional>

#include "zerosum/errors.hpp"
#include "zerosum/identities.hpp"

namespace zerosum::detail {

inline IdentityReport start_report(IdentityId id, std::optional<double> tol) {
  IdentityReport r;
  r.id = id;
  r.tolerance = tol.value_or(default_tolerance(id));
  if (!(r.tolerance > 0.0)) {
    throw UsageError("tolerance must be positive");
  }
  return r;
}

// Accuracy asked of an adaptive tail sum, as a share of the tolerance.
inline double tail_target(double tolerance) { return 0.1 * tolerance; }

inline void finish(IdentityReport& r) {
  r.abs_residual = std::abs(r.lhs - r.rhs);
  r.rel_residual = r.abs_residual / std::max(1.0, std::abs(r.rhs));
  r.passed = !r.failed && r.rel_residual <= r.tolerance;
}

// Runs the evaluation; numerical errors are recorded in the report instead
// of propagating, so one bad cell does not abort a sweep. Usage and domain
// errors still propagate: they mean the request itself was wrong.
template <class F>
IdentityReport guarded(IdentityReport r, F&& body) {
  try {
    body(r);
    finish(r);
  } catch (const UsageError&) {
    throw;
  } catch (const DomainError&) {
    throw;
  } catch (const Error& e) {
    r.failed = true;
    r.passed = false;
    r.error = e.what();
  }
  return r;
}

}  // namespace zerosum::detail
