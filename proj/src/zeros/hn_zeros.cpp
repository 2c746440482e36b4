// Aberth-Ehrlich iteration for the zeros of H_n. The zeros are severely
// ill-conditioned in the monomial basis, so the polynomial is held with exact
// integer coefficients and the iteration runs in 512-bit MPFR arithmetic;
// only the converged zeros are rounded to double.

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "zerosum/errors.hpp"
#include "zerosum/zeros.hpp"

namespace zerosum {

namespace {

constexpr mpfr_prec_t kPrec = 512;
constexpr int kMaxSweeps = 200;
constexpr double kStepTol = 1e-60;
constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

class Real {
 public:
  Real() {
    mpfr_init2(v_, kPrec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, kPrec);
    mpfr_set(v_, o.v_, kRnd);
  }
  Real& operator=(const Real& o) {
    mpfr_set(v_, o.v_, kRnd);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, kRnd); }

 private:
  mpfr_t v_;
};

struct Cx {
  Real re, im;
  double abs_double() const { return std::hypot(re.to_double(), im.to_double()); }
};

// Scratch registers so the inner loops do not allocate.
struct Workspace {
  Real t1, t2, t3, t4, t5;
};

void add(Cx& out, const Cx& a, const Cx& b) {
  mpfr_add(out.re.get(), a.re.get(), b.re.get(), kRnd);
  mpfr_add(out.im.get(), a.im.get(), b.im.get(), kRnd);
}

void sub(Cx& out, const Cx& a, const Cx& b) {
  mpfr_sub(out.re.get(), a.re.get(), b.re.get(), kRnd);
  mpfr_sub(out.im.get(), a.im.get(), b.im.get(), kRnd);
}

// out may alias a or b.
void mul(Cx& out, const Cx& a, const Cx& b, Workspace& w) {
  mpfr_mul(w.t1.get(), a.re.get(), b.re.get(), kRnd);
  mpfr_mul(w.t2.get(), a.im.get(), b.im.get(), kRnd);
  mpfr_mul(w.t3.get(), a.re.get(), b.im.get(), kRnd);
  mpfr_mul(w.t4.get(), a.im.get(), b.re.get(), kRnd);
  mpfr_sub(out.re.get(), w.t1.get(), w.t2.get(), kRnd);
  mpfr_add(out.im.get(), w.t3.get(), w.t4.get(), kRnd);
}

// out may alias a or b; b must be non-zero.
void div(Cx& out, const Cx& a, const Cx& b, Workspace& w) {
  mpfr_sqr(w.t1.get(), b.re.get(), kRnd);
  mpfr_sqr(w.t2.get(), b.im.get(), kRnd);
  mpfr_add(w.t5.get(), w.t1.get(), w.t2.get(), kRnd);
  mpfr_mul(w.t1.get(), a.re.get(), b.re.get(), kRnd);
  mpfr_mul(w.t2.get(), a.im.get(), b.im.get(), kRnd);
  mpfr_mul(w.t3.get(), a.im.get(), b.re.get(), kRnd);
  mpfr_mul(w.t4.get(), a.re.get(), b.im.get(), kRnd);
  mpfr_add(w.t1.get(), w.t1.get(), w.t2.get(), kRnd);
  mpfr_sub(w.t3.get(), w.t3.get(), w.t4.get(), kRnd);
  mpfr_div(out.re.get(), w.t1.get(), w.t5.get(), kRnd);
  mpfr_div(out.im.get(), w.t3.get(), w.t5.get(), kRnd);
}

bool is_zero(const Cx& a) { return mpfr_zero_p(a.re.get()) && mpfr_zero_p(a.im.get()); }

// Value and derivative by Horner's rule.
void horner(const std::vector<Real>& c, const Cx& z, Cx& value, Cx& deriv, Workspace& w) {
  mpfr_set_zero(value.re.get(), 1);
  mpfr_set_zero(value.im.get(), 1);
  mpfr_set_zero(deriv.re.get(), 1);
  mpfr_set_zero(deriv.im.get(), 1);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    mul(deriv, deriv, z, w);
    add(deriv, deriv, value);
    mul(value, value, z, w);
    mpfr_add(value.re.get(), value.re.get(), it->get(), kRnd);
  }
}

std::string tag(int n) { return " (n = " + std::to_string(n) + ")"; }

}  // namespace

ComplexZeroSet find_hn_zeros(int n, double abs_tol) {
  if (n < 1 || n > kMaxHnDegree) {
    throw RangeError("find_hn_zeros: degree must lie in [1, 60], got " + std::to_string(n));
  }
  const std::vector<std::string> exact = hn_coeffs_exact(n);
  std::vector<Real> c(exact.size());
  for (std::size_t k = 0; k < exact.size(); ++k) {
    mpfr_set_str(c[k].get(), exact[k].c_str(), 10, kRnd);
  }
  const auto un = static_cast<std::size_t>(n);

  // Start on a circle of radius c_0^(1/n), the geometric mean of the root
  // moduli, at angles symmetric about the negative real axis.
  const double radius = std::exp(mpfr_get_d(c[0].get(), kRnd) > 0.0
                                     ? std::log(mpfr_get_d(c[0].get(), kRnd)) / n
                                     : 0.0);
  std::vector<Cx> z(un);
  for (std::size_t j = 0; j < un; ++j) {
    const double theta = 0.5 * kPi + kPi * (static_cast<double>(j) + 0.5) / n;
    mpfr_set_d(z[j].re.get(), radius * std::cos(theta), kRnd);
    mpfr_set_d(z[j].im.get(), radius * std::sin(theta), kRnd);
  }

  Workspace w;
  Cx value, deriv, ratio, repulsion, diff, delta, one;
  mpfr_set_ui(one.re.get(), 1, kRnd);
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    double worst = 0.0;
    for (std::size_t i = 0; i < un; ++i) {
      horner(c, z[i], value, deriv, w);
      if (is_zero(value)) continue;
      div(ratio, value, deriv, w);
      mpfr_set_zero(repulsion.re.get(), 1);
      mpfr_set_zero(repulsion.im.get(), 1);
      for (std::size_t j = 0; j < un; ++j) {
        if (j == i) continue;
        sub(diff, z[i], z[j]);
        div(diff, one, diff, w);
        add(repulsion, repulsion, diff);
      }
      // delta = ratio / (1 - ratio * repulsion)
      mul(diff, ratio, repulsion, w);
      sub(diff, one, diff);
      div(delta, ratio, diff, w);
      sub(z[i], z[i], delta);
      worst = std::max(worst, delta.abs_double() / std::max(1.0, z[i].abs_double()));
    }
    converged = worst < kStepTol;
  }
  if (!converged) {
    throw NumericalFailure("find_hn_zeros: Aberth iteration did not converge in 200 sweeps" + tag(n));
  }

  std::vector<Complex> approx(un);
  for (std::size_t j = 0; j < un; ++j) {
    approx[j] = Complex(z[j].re.to_double(), z[j].im.to_double());
  }
  std::sort(approx.begin(), approx.end(), [](const Complex& a, const Complex& b) {
    return a.imag() > b.imag();
  });

  // Pair each upper-half zero with its mirror; the lower one becomes the exact
  // conjugate. For n odd the middle zero is real.
  std::vector<Complex> out(un);
  for (std::size_t i = 0; i < un / 2; ++i) {
    const Complex upper = approx[i];
    const Complex lower = approx[un - 1 - i];
    if (!(upper.imag() > 0.0) || std::abs(upper - std::conj(lower)) > 1e-9 * std::abs(upper)) {
      throw InvariantViolation("find_hn_zeros: zeros are not conjugate-paired" + tag(n));
    }
    out[i] = upper;
    out[un - 1 - i] = std::conj(upper);
  }
  if (un % 2 == 1) {
    out[un / 2] = Complex(approx[un / 2].real(), 0.0);
  }
  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() > b.imag();
  });

  ComplexZeroSet set{n, n + 0.5, std::move(out), abs_tol};

  CompensatedSum<double> vieta;
  for (const Complex& zi : set.zeros) {
    if (!(zi.real() < 0.0)) {
      throw InvariantViolation("find_hn_zeros: zero outside the left half-plane" + tag(n));
    }
    vieta += zi.real();
  }
  const double expected = -0.5 * n * (n + 1.0);
  if (std::abs(vieta.value() - expected) > 1e-9 * n * n) {
    throw InvariantViolation("find_hn_zeros: zero sum violates Vieta" + tag(n));
  }
  return set;
}

}  // namespace zerosum
