#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

namespace zerosum {

/// Binary floating-point number with a caller-chosen working precision.
///
/// Value is sign * mantissa * 2^exponent with an integer mantissa of exactly
/// `precision()` bits whose top bit is set (zero has sign 0 and no
/// mantissa). Arithmetic rounds to nearest at the working precision, which is
/// well inside the 2-ulp contract the series evaluators rely on.
///
/// Backed by MPFR; the class owns one mpfr_t and is a regular value type.
class ExtReal {
 public:
  enum class Op { add, sub, mul, div };

  static constexpr long kMinPrecision = 2;

  /// Zero at the given precision.
  explicit ExtReal(long precision_bits = 64);
  /// Exact conversion when precision_bits >= 53.
  ExtReal(double value, long precision_bits);
  static ExtReal from_long(long value, long precision_bits);
  /// Parses a decimal or hexadecimal literal, rounding to nearest.
  static ExtReal from_string(const std::string& text, long precision_bits);

  ExtReal(const ExtReal& other);
  ExtReal(ExtReal&& other) noexcept;
  ExtReal& operator=(const ExtReal& other);
  ExtReal& operator=(ExtReal&& other) noexcept;
  ~ExtReal();

  long precision() const noexcept;
  int sign() const noexcept;
  bool is_zero() const noexcept { return sign() == 0; }
  /// Base-2 scale of the integer mantissa; meaningless for zero.
  long exponent() const;
  /// Mantissa as a string of exactly precision() binary digits ("" for zero).
  std::string mantissa_bits() const;

  double to_double() const noexcept;
  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits) const;

  /// Spacing of representable values at this magnitude.
  ExtReal ulp() const;

  ExtReal& operator+=(const ExtReal& rhs);
  ExtReal& operator-=(const ExtReal& rhs);
  ExtReal& operator*=(const ExtReal& rhs);
  ExtReal& operator/=(const ExtReal& rhs);
  ExtReal& add_ui(unsigned long rhs);
  ExtReal& mul_ui(unsigned long rhs);
  ExtReal& div_ui(unsigned long rhs);
  ExtReal& negate() noexcept;

  ExtReal abs() const;

  friend ExtReal operator+(ExtReal lhs, const ExtReal& rhs) { return lhs += rhs; }
  friend ExtReal operator-(ExtReal lhs, const ExtReal& rhs) { return lhs -= rhs; }
  friend ExtReal operator*(ExtReal lhs, const ExtReal& rhs) { return lhs *= rhs; }
  friend ExtReal operator/(ExtReal lhs, const ExtReal& rhs) { return lhs /= rhs; }
  friend ExtReal operator-(ExtReal v) { return v.negate(); }

  friend bool operator==(const ExtReal& a, const ExtReal& b);
  friend std::partial_ordering operator<=>(const ExtReal& a, const ExtReal& b);

  mpfr_srcptr raw() const noexcept { return value_; }

 private:
  mpfr_t value_;
};

/// One rounded arithmetic operation. Result precision is the larger of the
/// operand precisions. Division by zero throws DivisionByZero.
ExtReal arith(const ExtReal& a, const ExtReal& b, ExtReal::Op op);

}  // namespace zerosum
