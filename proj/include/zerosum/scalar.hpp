#pragma once

#include <cmath>
#include <complex>

namespace zerosum {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Gamma function for x > 0 at machine precision. Throws DomainError for
/// x <= 0 or non-finite x.
double gamma(double x);

/// Working precision, in bits, for summing an ascending Bessel/Struve-type
/// power series at argument x to `target_digits` significant digits. The
/// largest series term exceeds the result by roughly e^x, so the estimate
/// is log2(e)*x + log2(10)*target_digits plus a fixed guard. Monotone in
/// both arguments.
long required_precision(double x, int target_digits);

/// Neumaier's variant of Kahan summation: the running error term stays
/// exact also when an addend is larger than the running sum.
template <class T>
class CompensatedSum {
 public:
  void add(T v) {
    T t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(T v) {
    add(v);
    return *this;
  }

  T value() const { return sum_ + comp_; }

 private:
  T sum_{};
  T comp_{};
};

template <class F>
class CompensatedSum<std::complex<F>> {
 public:
  void add(std::complex<F> v) {
    re_.add(v.real());
    im_.add(v.imag());
  }

  CompensatedSum& operator+=(std::complex<F> v) {
    add(v);
    return *this;
  }

  std::complex<F> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<F> re_;
  CompensatedSum<F> im_;
};

}  // namespace zerosum
