#include <gmp.h>
#include <mpfr.h>

#include <string>

#include "zerosum/errors.hpp"
#include "zerosum/specfun.hpp"

namespace zerosum {

namespace {

class BigInt {
 public:
  BigInt() { mpz_init(v_); }
  ~BigInt() { mpz_clear(v_); }
  BigInt(const BigInt&) = delete;
  BigInt& operator=(const BigInt&) = delete;
  mpz_ptr get() { return v_; }

 private:
  mpz_t v_;
};

double to_nearest_double(mpz_srcptr value) {
  mpfr_t tmp;
  mpfr_init2(tmp, 64);
  mpfr_set_z(tmp, value, MPFR_RNDN);
  double out = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return out;
}

void coeff_exact(int n, int k, mpz_ptr out) {
  BigInt den, tmp;
  mpz_fac_ui(out, static_cast<unsigned long>(2 * n - k));
  mpz_fac_ui(den.get(), static_cast<unsigned long>(n - k));
  mpz_fac_ui(tmp.get(), static_cast<unsigned long>(k));
  mpz_mul(den.get(), den.get(), tmp.get());
  mpz_mul_2exp(den.get(), den.get(), static_cast<mp_bitcnt_t>(n - k));
  if (!mpz_divisible_p(out, den.get())) {
    throw InvariantViolation("hn_coeffs: non-integral coefficient at k = " + std::to_string(k));
  }
  mpz_divexact(out, out, den.get());
}

void check_degree(int n) {
  if (n < 0) {
    throw DomainError("hn_coeffs: degree must be non-negative");
  }
  if (n > kMaxHnDegree) {
    throw RangeError("hn_coeffs: degree " + std::to_string(n) + " exceeds the supported maximum " +
                     std::to_string(kMaxHnDegree));
  }
}

}  // namespace

PolyCoeffs hn_coeffs(int n) {
  check_degree(n);
  PolyCoeffs out;
  out.degree = n;
  out.coeffs.resize(static_cast<size_t>(n) + 1);

  BigInt c;
  for (int k = 0; k <= n; ++k) {
    coeff_exact(n, k, c.get());
    out.coeffs[static_cast<size_t>(k)] = to_nearest_double(c.get());
  }
  return out;
}

std::vector<std::string> hn_coeffs_exact(int n) {
  check_degree(n);
  std::vector<std::string> out;
  BigInt c;
  for (int k = 0; k <= n; ++k) {
    coeff_exact(n, k, c.get());
    char* text = mpz_get_str(nullptr, 10, c.get());
    out.emplace_back(text);
    void (*release)(void*, size_t) = nullptr;
    mp_get_memory_functions(nullptr, nullptr, &release);
    release(text, out.back().size() + 1);
  }
  return out;
}

Complex hn_eval(const PolyCoeffs& p, Complex z) {
  Complex acc = 0.0;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

PolyJet hn_jet(const PolyCoeffs& p, Complex z) {
  Complex v = 0.0, d1 = 0.0, d2 = 0.0;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    d2 = d2 * z + d1;
    d1 = d1 * z + v;
    v = v * z + *it;
  }
  return {v, d1, 2.0 * d2};
}

}  // namespace zerosum
