#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "zerosum/errors.hpp"
#include "zerosum/ext_real.hpp"
#include "zerosum/scalar.hpp"

using namespace zerosum;

TEST_CASE("ExtReal holds doubles exactly and keeps its precision") {
  const ExtReal a(0.1, 200);
  CHECK(a.precision() == 200);
  CHECK(a.to_double() == 0.1);
  CHECK(a.mantissa_bits().size() == 200);
  CHECK(a.mantissa_bits().front() == '1');
  CHECK(ExtReal(64).is_zero());
  CHECK(ExtReal(64).mantissa_bits().empty());
  CHECK_THROWS_AS(ExtReal(64).exponent(), DomainError);
  CHECK_THROWS_AS(ExtReal(1.0, 1), DomainError);
  CHECK_THROWS_AS(ExtReal(INFINITY, 64), DomainError);
}

TEST_CASE("ExtReal value is mantissa times a power of two") {
  const ExtReal a(-3.0, 8);
  CHECK(a.sign() == -1);
  CHECK(a.mantissa_bits() == "11000000");
  CHECK(a.exponent() == -6);
}

TEST_CASE("ExtReal arithmetic rounds once") {
  // 1/3 at 300 bits, times 3, is within one ulp of 1.
  const ExtReal one = ExtReal::from_long(1, 300);
  const ExtReal third = one / ExtReal::from_long(3, 300);
  const ExtReal back = third * ExtReal::from_long(3, 300);
  CHECK((back - one).abs() <= one.ulp());
  CHECK(arith(one, third, ExtReal::Op::sub).to_double() == doctest::Approx(2.0 / 3.0));
  CHECK_THROWS_AS(one / ExtReal(300), DivisionByZero);
  CHECK_THROWS_AS(ExtReal(one).div_ui(0), DivisionByZero);
}

TEST_CASE("ExtReal cancellation is exact where doubles lose everything") {
  const ExtReal big(1e20, 200);
  ExtReal s = big;
  s += ExtReal(1.0, 200);
  s -= big;
  CHECK(s.to_double() == 1.0);
}

TEST_CASE("arith takes the wider precision") {
  const ExtReal a(1.5, 80);
  const ExtReal b(2.5, 160);
  CHECK(arith(a, b, ExtReal::Op::add).precision() == 160);
  CHECK(arith(a, b, ExtReal::Op::mul).to_double() == 3.75);
}

TEST_CASE("ExtReal parses decimal strings") {
  const ExtReal p = ExtReal::from_string("3.14159265358979323846264338327950288419716939937510", 256);
  CHECK(p.to_double() == kPi);
  CHECK(p.to_string(30).substr(0, 20) == "3.141592653589793238");
  CHECK_THROWS_AS(ExtReal::from_string("pi", 64), DomainError);
}

TEST_CASE("ExtReal ordering") {
  const ExtReal a(1.0, 64), b(2.0, 128);
  CHECK(a < b);
  CHECK(a == ExtReal(1.0, 200));
  CHECK(-a < a);
}

TEST_CASE("gamma satisfies the recurrence") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.25, 50.0);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng);
    CHECK(zerosum::gamma(x + 1.0) == doctest::Approx(x * zerosum::gamma(x)).epsilon(1e-13));
  }
  CHECK(zerosum::gamma(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-15));
  CHECK_THROWS_AS(zerosum::gamma(0.0), DomainError);
  CHECK_THROWS_AS(zerosum::gamma(-1.5), DomainError);
  CHECK_THROWS_AS(zerosum::gamma(500.0), RangeError);
}

TEST_CASE("required_precision grows with x and digits") {
  long prev = 0;
  for (double x = 0.0; x < 200.0; x += 3.7) {
    const long p = required_precision(x, 17);
    CHECK(p >= prev);
    CHECK(p >= 53);
    prev = p;
  }
  CHECK(required_precision(10.0, 30) > required_precision(10.0, 17));
  // Enough to absorb the e^x growth of the largest series term.
  CHECK(required_precision(100.0, 17) >= static_cast<long>(100.0 / std::log(2.0) + 17 * 3.32));
}

TEST_CASE("compensated summation recovers small addends") {
  CompensatedSum<double> s;
  s += 1.0;
  for (int i = 0; i < 1000; ++i) s += 1e-17;
  s += -1.0;
  CHECK(s.value() == doctest::Approx(1e-14).epsilon(1e-12));

  CompensatedSum<Complex> c;
  c += Complex(1e16, 1.0);
  c += Complex(1.0, -1e16);
  c += Complex(-1e16, 1e16);
  CHECK(c.value() == Complex(1.0, 1.0));
}
