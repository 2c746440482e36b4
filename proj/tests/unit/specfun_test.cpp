#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/specfun.hpp"

using namespace zerosum;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("series values match frozen high-precision references") {
  CHECK(rel(bessel_j(Order{0.0}, 1.0), 0.765197686557966551449717526103) < 1e-15);
  CHECK(rel(bessel_j(Order{2.7}, 10.3), 0.198536982811359419321533321872) < 1e-14);
  CHECK(rel(bessel_j(Order{-0.9}, 25.0), 0.139552026327166840205996414384) < 1e-14);
  CHECK(rel(bessel_i(Order{0.5}, 3.0), 4.61482290340760094785298030025) < 1e-15);
  CHECK(rel(struve_h(Order{0.0}, 5.0), -0.185216815776684890105718692144) < 1e-14);
  CHECK(rel(struve_h(Order{0.3}, 2.0), 0.822299158918657831569420093108) < 1e-15);
  CHECK(rel(struve_h(Order{-0.4}, 30.0), -0.144332820593871945382112295015) < 1e-13);
}

TEST_CASE("series values agree with the 100-digit oracle") {
  for (double nu : {-0.9, -0.3, 0.0, 0.5, 1.7, 5.0}) {
    for (double x : {0.3, 1.0, 4.2, 12.5, 31.0}) {
      const double ref = static_cast<double>(oracle::bessel_j(oracle::Big(nu), oracle::Big(x)));
      CHECK_MESSAGE(rel(bessel_j(Order{nu}, x), ref) < 1e-13, "J nu=" << nu << " x=" << x);
      const double iref = static_cast<double>(oracle::bessel_i(oracle::Big(nu), oracle::Big(x)));
      CHECK_MESSAGE(rel(bessel_i(Order{nu}, x), iref) < 1e-14, "I nu=" << nu << " x=" << x);
    }
  }
  for (double nu : {-0.45, -0.2, 0.0, 0.25, 0.5}) {
    for (double x : {0.3, 1.0, 4.2, 12.5, 31.0}) {
      const double ref = static_cast<double>(oracle::struve_h(oracle::Big(nu), oracle::Big(x)));
      CHECK_MESSAGE(rel(struve_h(Order{nu}, x), ref) < 1e-13, "H nu=" << nu << " x=" << x);
    }
  }
}

TEST_CASE("half-integer orders reduce to elementary functions") {
  for (double x : {0.1, 1.0, 3.0, 17.0}) {
    const double c = std::sqrt(2.0 / (kPi * x));
    CHECK(bessel_j(Order{0.5}, x) == doctest::Approx(c * std::sin(x)).epsilon(1e-14));
    CHECK(bessel_j(Order{-0.5}, x) == doctest::Approx(c * std::cos(x)).epsilon(1e-14));
    CHECK(bessel_i(Order{0.5}, x) == doctest::Approx(c * std::sinh(x)).epsilon(1e-14));
    CHECK(struve_h(Order{0.5}, x) == doctest::Approx(c * (1.0 - std::cos(x))).epsilon(1e-13));
  }
}

TEST_CASE("three-term recurrences hold") {
  for (double x : {0.7, 3.3, 9.1, 22.0}) {
    for (double nu : {0.2, 1.3, 3.0}) {
      const double lhs = bessel_j(Order{nu - 1}, x) + bessel_j(Order{nu + 1}, x);
      const double rhs = 2 * nu / x * bessel_j(Order{nu}, x);
      CHECK(std::abs(lhs - rhs) < 1e-14 * (1 + std::abs(rhs)));
    }
    for (double nu : {-0.3, 0.0, 0.4}) {
      const double lhs = struve_h_any(nu - 1, x) + struve_h_any(nu + 1, x);
      const double rhs = 2 * nu / x * struve_h_any(nu, x) + std::pow(x / 2, nu) / (std::sqrt(kPi) * std::tgamma(nu + 1.5));
      CHECK(std::abs(lhs - rhs) < 1e-13 * (1 + std::abs(rhs)));
    }
  }
}

TEST_CASE("Struve function solves its inhomogeneous equation") {
  // Central differences with step 1e-3; truncation error is about 1e-7.
  const double h = 1e-3;
  for (double nu : {-0.4, 0.0, 0.3}) {
    for (double x : {1.0, 5.0, 11.0}) {
      const Order o{nu};
      const double f = struve_h(o, x);
      const double d1 = struve_h_deriv(o, x);
      const double d2 = (struve_h(o, x + h) - 2 * f + struve_h(o, x - h)) / (h * h);
      const double residual = x * d2 + d1 + x * (1 - nu * nu / (x * x)) * f - struve_forcing(nu, x);
      CHECK(std::abs(residual) < 1e-5);
      CHECK(d1 == doctest::Approx((struve_h(o, x + h) - struve_h(o, x - h)) / (2 * h)).epsilon(1e-5));
    }
  }
}

TEST_CASE("continued-fraction ratios equal series quotients") {
  for (double nu : {-0.9, 0.0, 0.5, 2.7}) {
    for (double x : {0.5, 3.0, 7.7, 20.0}) {
      const double q = bessel_j(Order{nu + 1}, x) / bessel_j(Order{nu}, x);
      CHECK(ratio_j(Order{nu}, x) == doctest::Approx(q).epsilon(1e-12));
      CHECK(inverse_ratio_j(Order{nu}, x) == doctest::Approx(1 / q).epsilon(1e-12));
      const double qi = bessel_i(Order{nu + 1}, x) / bessel_i(Order{nu}, x);
      CHECK(ratio_i(Order{nu}, x) == doctest::Approx(qi).epsilon(1e-13));
      CHECK(ratio_i(Order{nu}, x) > 0.0);
      if (nu >= -0.5) CHECK(ratio_i(Order{nu}, x) < 1.0);
    }
  }
}

TEST_CASE("ratio_j reports a pole at a zero of J") {
  CHECK_THROWS_AS(ratio_j(Order{0.0}, 2.404825557695773), PoleError);
  CHECK_NOTHROW(inverse_ratio_j(Order{0.0}, 2.404825557695773));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(bessel_j(Order{-1.0}, 1.0), DomainError);
  CHECK_THROWS_AS(bessel_j(Order{0.0}, -1.0), DomainError);
  CHECK_THROWS_AS(struve_h(Order{0.7}, 1.0), DomainError);
  CHECK_THROWS_AS(struve_h(Order{0.0}, 0.0), DomainError);
  CHECK_THROWS_AS(ratio_i(Order{-2.0}, 1.0), DomainError);
}

TEST_CASE("H_n coefficients") {
  const PolyCoeffs h2 = hn_coeffs(2);
  CHECK(h2.degree == 2);
  CHECK(h2.coeffs == std::vector<double>{3, 3, 1});
  const PolyCoeffs h3 = hn_coeffs(3);
  CHECK(h3.coeffs == std::vector<double>{15, 15, 6, 1});
  CHECK(hn_coeffs_exact(3) == std::vector<std::string>{"15", "15", "6", "1"});
  // c_0 = (2n)! / (n! 2^n) = (2n-1)!!
  CHECK(hn_coeffs_exact(10).front() == "654729075");
  const auto big = hn_coeffs_exact(60);
  CHECK(big.size() == 61);
  CHECK(big.back() == "1");
  CHECK(big[59] == "1830");  // n(n+1)/2
  CHECK_THROWS_AS(hn_coeffs(61), RangeError);
  CHECK_THROWS_AS(hn_coeffs(-1), DomainError);
}

TEST_CASE("H_n evaluation and derivatives") {
  const PolyCoeffs p = hn_coeffs(2);
  const Complex z(0.3, -1.2);
  CHECK(std::abs(hn_eval(p, z) - (z * z + 3.0 * z + 3.0)) < 1e-15);
  const PolyJet jet = hn_jet(p, z);
  CHECK(std::abs(jet.d1 - (2.0 * z + 3.0)) < 1e-15);
  CHECK(std::abs(jet.d2 - 2.0) < 1e-15);
  // K_{n+1/2}(z) sqrt(2z/pi) e^z z^n = H_n(z); at n = 1, H_1 = z + 1.
  CHECK(hn_coeffs(1).coeffs == std::vector<double>{1, 1});
}
