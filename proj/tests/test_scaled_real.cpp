#include <cmath>
#include <limits>

#include "doctest.h"
#include "relper/errors.hpp"
#include "relper/scaled_real.hpp"

using relper::errc;
using relper::error;
using relper::scaled_real;

TEST_SUITE("scaled_real") {

TEST_CASE("construction normalizes the mantissa into [1, e)") {
  for (double v : {1.0, 2.5, 12.0, 1e-7, 3.9e18, 7e-300, 1e300, -42.0}) {
    scaled_real s(v);
    CHECK(std::fabs(s.mantissa()) >= 1.0);
    CHECK(std::fabs(s.mantissa()) < 2.718281828459046);
    CHECK(s.to_double() == doctest::Approx(v).epsilon(1e-14));
  }
  CHECK(scaled_real(0.0).is_zero());
  CHECK(scaled_real(0.0).to_double() == 0.0);
  CHECK(scaled_real(-3.0).negative());
  CHECK_FALSE(scaled_real(3.0).negative());
}

TEST_CASE("from_parts normalizes too") {
  scaled_real s = scaled_real::from_parts(123.0, 10);
  CHECK(s.to_double() == doctest::Approx(123.0 * std::exp(10.0)).epsilon(1e-14));
  CHECK(std::fabs(s.mantissa()) < 2.718281828459046);
  CHECK(scaled_real::from_parts(0.0, 999).is_zero());
}

TEST_CASE("nan is rejected") {
  CHECK_THROWS_AS(scaled_real(std::nan("")), error);
}

TEST_CASE("multiplication and division track doubles") {
  scaled_real a(3.5), b(-2.0);
  CHECK((a * b).to_double() == doctest::Approx(-7.0).epsilon(1e-15));
  CHECK((a / b).to_double() == doctest::Approx(-1.75).epsilon(1e-15));
  // Far outside double range and back.
  scaled_real big = scaled_real::pow_int(scaled_real(1e3), 1000);
  scaled_real almost = scaled_real::pow_int(scaled_real(1e3), 999);
  CHECK((big / almost).to_double() == doctest::Approx(1e3).epsilon(1e-12));
}

TEST_CASE("addition aligns exponents and drops invisible addends") {
  CHECK((scaled_real(2.0) + scaled_real(3.0)).to_double() == doctest::Approx(5.0).epsilon(1e-15));
  CHECK((scaled_real(1e10) + scaled_real(-1e10)).is_zero());
  scaled_real big(5e120), tiny(3e-120);
  scaled_real sum = big + tiny;
  CHECK(sum.mantissa() == big.mantissa());
  CHECK(sum.exponent() == big.exponent());
  CHECK((tiny + big).mantissa() == big.mantissa());  // order must not matter
  CHECK((scaled_real(7.0) - scaled_real(4.0)).to_double() == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("comparison works across scales") {
  CHECK(scaled_real(1e-300) < scaled_real(1e300));
  CHECK(scaled_real(-5.0) < scaled_real(2.0));
  CHECK_FALSE(scaled_real(2.0) < scaled_real(2.0));
  CHECK(scaled_real::pow_int(scaled_real(2.0), 100) < scaled_real::pow_int(scaled_real(2.0), 101));
}

TEST_CASE("pow_int: binary exponentiation incl. negative powers") {
  CHECK(scaled_real::pow_int(scaled_real(2.0), 10).to_double() == doctest::Approx(1024.0).epsilon(1e-14));
  CHECK(scaled_real::pow_int(scaled_real(2.0), -3).to_double() == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(scaled_real::pow_int(scaled_real(5.0), 0).to_double() == 1.0);
  CHECK(scaled_real::pow_int(scaled_real(0.0), 5).is_zero());
  CHECK(scaled_real::pow_int(scaled_real(1e3), 4).to_double() == doctest::Approx(1e12).epsilon(1e-13));
  // A^{2m} for m = 1000, A = 1e3: exponent ~ 13816, far beyond double.
  scaled_real huge = scaled_real::pow_int(scaled_real(1e3), 2000);
  CHECK(huge.exponent() > 13000);
  CHECK_FALSE(huge.negative());
}

TEST_CASE("sqrt handles both exponent parities") {
  CHECK(scaled_real::sqrt(scaled_real(2.0)).to_double() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  for (std::int64_t e : {6, 7, -13}) {
    scaled_real x = scaled_real::from_parts(1.5, e);
    scaled_real r = scaled_real::sqrt(x);
    CHECK((r * r).to_double() == doctest::Approx(x.to_double()).epsilon(1e-13));
  }
  scaled_real big = scaled_real::pow_int(scaled_real(1e3), 2000);
  scaled_real root = scaled_real::sqrt(big);
  CHECK((root / scaled_real::pow_int(scaled_real(1e3), 1000)).to_double() ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(scaled_real::sqrt(scaled_real(0.0)).is_zero());
  try {
    scaled_real::sqrt(scaled_real(-1.0));
    FAIL("expected a throw");
  } catch (const error& e) {
    CHECK(e.code() == errc::domain);
  }
}

TEST_CASE("to_double overflow policy") {
  CHECK(scaled_real::from_parts(1.0, 700).to_double() ==
        doctest::Approx(std::exp(700.0)).epsilon(1e-12));
  try {
    scaled_real::from_parts(1.0, 701).to_double();
    FAIL("expected a throw");
  } catch (const error& e) {
    CHECK(e.code() == errc::overflow_risk);
  }
  CHECK(scaled_real::from_parts(1.0, 701).to_double(true) ==
        std::numeric_limits<double>::infinity());
  CHECK(scaled_real::from_parts(-1.0, 701).to_double(true) ==
        -std::numeric_limits<double>::infinity());
  CHECK(scaled_real::from_parts(1.0, -701).to_double(true) == 0.0);
}

}  // TEST_SUITE
