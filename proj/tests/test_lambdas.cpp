#include <cmath>
#include <numbers>

#include "doctest.h"
#include "relper/errors.hpp"
#include "relper/lambdas.hpp"

using relper::errc;
using relper::error;
using relper::lambda_table;

namespace {
constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
}

TEST_SUITE("lambdas") {

TEST_CASE("seeds and closed-form values") {
  CHECK(relper::lambda_closed(0) == 1.0);
  CHECK(relper::lambda_closed(1) == 0.5);
  CHECK(relper::lambda_closed(2) == doctest::Approx(1.0 - 6.0 / kPi2).epsilon(1e-15));
  CHECK(relper::lambda_closed(2) == doctest::Approx(0.39207289814597337).epsilon(1e-15));
  CHECK(relper::lambda_closed(3) == doctest::Approx(0.23317173768904633).epsilon(1e-15));
  CHECK(relper::lambda_closed(3) ==
        doctest::Approx((kPi2 - 6.0) * (kPi2 - 4.0) / (kPi2 * kPi2)).epsilon(1e-15));
  CHECK(relper::lambda_closed(4) == doctest::Approx(0.13867079187066683).epsilon(1e-15));
  CHECK(relper::lambda_closed(5) == doctest::Approx(0.082469636794841896).epsilon(1e-15));
  try {
    relper::lambda_closed(-1);
    FAIL("expected a throw");
  } catch (const error& e) {
    CHECK(e.code() == errc::domain);
  }
}

TEST_CASE("bootstrap recursion matches the closed form to 1e-13") {
  std::vector<double> it = relper::lambda_iterative(50);
  REQUIRE(it.size() == 51);
  CHECK(it[0] == 1.0);
  CHECK(it[1] == 0.5);
  CHECK(it[2] == doctest::Approx(1.0 - 6.0 / kPi2).epsilon(1e-15));
  for (int n = 0; n <= 50; ++n)
    CHECK(std::fabs(it[static_cast<size_t>(n)] - relper::lambda_closed(n)) <= 1e-13);
  try {
    relper::lambda_iterative(1);
    FAIL("expected a throw");
  } catch (const error& e) {
    CHECK(e.code() == errc::domain);
  }
}

TEST_CASE("sequence lies in (0, 1) and decreases from n = 1") {
  double prev = relper::lambda_closed(1);
  for (int n = 2; n <= 60; ++n) {
    double cur = relper::lambda_closed(n);
    CHECK(cur > 0.0);
    CHECK(cur < 1.0);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("partial sums: frozen values, monotone growth, pi^2/4 limit") {
  CHECK(relper::lambda_partial_sum(1) == 1.0);
  CHECK(relper::lambda_partial_sum(2) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(relper::lambda_partial_sum(3) == doctest::Approx(1.8920728981459734).epsilon(1e-15));
  CHECK(relper::lambda_partial_sum(4) == doctest::Approx(2.1252446358350197).epsilon(1e-15));
  CHECK(relper::lambda_partial_sum(10) == doctest::Approx(2.4522627249802281).epsilon(1e-15));
  double limit = kPi2 / 4.0;
  double prev = 0.0;
  for (int n = 1; n <= 80; ++n) {
    double cur = relper::lambda_partial_sum(n);
    // the geometric tail drops below one ulp of the limit near n = 70
    if (n <= 60)
      CHECK(cur > prev);
    else
      CHECK(cur >= prev);
    CHECK(cur < limit + 1e-15);
    prev = cur;
  }
  CHECK(std::fabs(relper::lambda_partial_sum(200) - limit) <= 1e-13);

  // partial sums are literally the running sums of the sequence
  double acc = 0.0;
  for (int n = 1; n <= 20; ++n) {
    acc += relper::lambda_closed(n - 1);
    CHECK(relper::lambda_partial_sum(n) == doctest::Approx(acc).epsilon(1e-14));
  }
  try {
    relper::lambda_partial_sum(0);
    FAIL("expected a throw");
  } catch (const error& e) {
    CHECK(e.code() == errc::domain);
  }
}

TEST_CASE("boundary-condition identity 1 - lambda_{2m} = (4/pi^2) partial_sum(m)") {
  for (int m = 2; m <= 50; ++m)
    CHECK(std::fabs(1.0 - relper::lambda_closed(m) -
                    4.0 / kPi2 * relper::lambda_partial_sum(m)) <= 1e-13);
}

TEST_CASE("table modes") {
  lambda_table general(lambda_table::mode::general);
  CHECK(general.table_mode() == lambda_table::mode::general);
  CHECK(general.value(0) == 1.0);
  CHECK(general.value(1) == 0.5);
  CHECK(general.value(7) == relper::lambda_closed(7));

  lambda_table special(lambda_table::mode::harmonic_special);
  CHECK(special.value(0) == 1.0);
  CHECK(special.value(1) == 0.5);
  CHECK(special.value(2) == doctest::Approx(2.0 / kPi2).epsilon(1e-15));
  CHECK(special.value(2) == doctest::Approx(0.20264236728467554).epsilon(1e-15));
  CHECK(special.value(2) != relper::lambda_closed(2));  // the modes genuinely differ
  try {
    special.value(3);
    FAIL("expected a throw");
  } catch (const error& e) {
    CHECK(e.code() == errc::missing_lambda);
  }
  CHECK(relper::lambda_harmonic_l4() == doctest::Approx(2.0 / kPi2).epsilon(1e-16));
}

}  // TEST_SUITE
