#include "zerosum/ext_real.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "zerosum/errors.hpp"

namespace zerosum {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

long clamp_precision(long bits) {
  if (bits < ExtReal::kMinPrecision) {
    throw DomainError("ExtReal precision must be at least 2 bits");
  }
  return std::min<long>(bits, MPFR_PREC_MAX);
}

// Grows `target` to `bits` keeping its value.
void widen(mpfr_t target, long bits) {
  if (mpfr_get_prec(target) < bits) {
    mpfr_prec_round(target, bits, kRound);
  }
}

}  // namespace

ExtReal::ExtReal(long precision_bits) {
  mpfr_init2(value_, clamp_precision(precision_bits));
  mpfr_set_zero(value_, 1);
}

ExtReal::ExtReal(double value, long precision_bits) {
  if (!std::isfinite(value)) {
    throw DomainError("ExtReal cannot hold a non-finite value");
  }
  mpfr_init2(value_, clamp_precision(precision_bits));
  mpfr_set_d(value_, value, kRound);
}

ExtReal ExtReal::from_long(long value, long precision_bits) {
  ExtReal out(precision_bits);
  mpfr_set_si(out.value_, value, kRound);
  return out;
}

ExtReal ExtReal::from_string(const std::string& text, long precision_bits) {
  ExtReal out(precision_bits);
  char* end = nullptr;
  mpfr_strtofr(out.value_, text.c_str(), &end, 0, kRound);
  if (end == text.c_str() || *end != '\0' || !mpfr_number_p(out.value_)) {
    throw DomainError("not a finite number: '" + text + "'");
  }
  return out;
}

ExtReal::ExtReal(const ExtReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRound);
}

ExtReal::ExtReal(ExtReal&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

ExtReal& ExtReal::operator=(const ExtReal& other) {
  if (this != &other) {
    if (mpfr_get_prec(value_) != mpfr_get_prec(other.value_)) {
      mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    }
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

ExtReal& ExtReal::operator=(ExtReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

ExtReal::~ExtReal() { mpfr_clear(value_); }

long ExtReal::precision() const noexcept { return mpfr_get_prec(value_); }

int ExtReal::sign() const noexcept { return mpfr_sgn(value_); }

long ExtReal::exponent() const {
  if (is_zero()) {
    throw DomainError("exponent of zero is undefined");
  }
  // mpfr_get_exp uses a mantissa in [1/2, 1); shift to an integer mantissa.
  return mpfr_get_exp(value_) - precision();
}

std::string ExtReal::mantissa_bits() const {
  if (is_zero()) {
    return {};
  }
  mpfr_exp_t exp = 0;
  std::unique_ptr<char, void (*)(char*)> digits(
      mpfr_get_str(nullptr, &exp, 2, static_cast<size_t>(precision()), value_, kRound),
      mpfr_free_str);
  std::string bits(digits.get());
  if (!bits.empty() && bits.front() == '-') {
    bits.erase(0, 1);
  }
  return bits;
}

double ExtReal::to_double() const noexcept { return mpfr_get_d(value_, kRound); }

std::string ExtReal::to_string(int digits) const {
  digits = std::max(digits, 1);
  std::string fmt = "%." + std::to_string(digits - 1) + "Re";
  int len = mpfr_snprintf(nullptr, 0, fmt.c_str(), value_);
  std::string out(static_cast<size_t>(len) + 1, '\0');
  mpfr_snprintf(out.data(), out.size(), fmt.c_str(), value_);
  out.resize(static_cast<size_t>(len));
  return out;
}

ExtReal ExtReal::ulp() const {
  ExtReal out(precision());
  if (is_zero()) {
    mpfr_set_ui_2exp(out.value_, 1, mpfr_get_emin(), kRound);
  } else {
    mpfr_set_ui_2exp(out.value_, 1, exponent(), kRound);
  }
  return out;
}

ExtReal& ExtReal::operator+=(const ExtReal& rhs) {
  widen(value_, rhs.precision());
  mpfr_add(value_, value_, rhs.value_, kRound);
  return *this;
}

ExtReal& ExtReal::operator-=(const ExtReal& rhs) {
  widen(value_, rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, kRound);
  return *this;
}

ExtReal& ExtReal::operator*=(const ExtReal& rhs) {
  widen(value_, rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, kRound);
  return *this;
}

ExtReal& ExtReal::operator/=(const ExtReal& rhs) {
  if (rhs.is_zero()) {
    throw DivisionByZero("ExtReal division by zero");
  }
  widen(value_, rhs.precision());
  mpfr_div(value_, value_, rhs.value_, kRound);
  return *this;
}

ExtReal& ExtReal::add_ui(unsigned long rhs) {
  mpfr_add_ui(value_, value_, rhs, kRound);
  return *this;
}

ExtReal& ExtReal::mul_ui(unsigned long rhs) {
  mpfr_mul_ui(value_, value_, rhs, kRound);
  return *this;
}

ExtReal& ExtReal::div_ui(unsigned long rhs) {
  if (rhs == 0) {
    throw DivisionByZero("ExtReal division by zero");
  }
  mpfr_div_ui(value_, value_, rhs, kRound);
  return *this;
}

ExtReal& ExtReal::negate() noexcept {
  mpfr_neg(value_, value_, kRound);
  return *this;
}

ExtReal ExtReal::abs() const {
  ExtReal out(*this);
  mpfr_abs(out.value_, out.value_, kRound);
  return out;
}

bool operator==(const ExtReal& a, const ExtReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
  if (mpfr_less_p(a.value_, b.value_)) return std::partial_ordering::less;
  if (mpfr_greater_p(a.value_, b.value_)) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

ExtReal arith(const ExtReal& a, const ExtReal& b, ExtReal::Op op) {
  ExtReal out(a);
  switch (op) {
    case ExtReal::Op::add:
      out += b;
      break;
    case ExtReal::Op::sub:
      out -= b;
      break;
    case ExtReal::Op::mul:
      out *= b;
      break;
    case ExtReal::Op::div:
      out /= b;
      break;
  }
  return out;
}

}  // namespace zerosum
