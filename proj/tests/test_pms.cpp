#include "doctest.h"

#include "relper/closed_forms.hpp"
#include "relper/errors.hpp"
#include "relper/even_poly.hpp"
#include "relper/pms.hpp"
#include "relper/potential.hpp"

#include <cmath>

using doctest::Approx;

namespace {

constexpr double kPi = 3.14159265358979323846;

const relper::lambda_table kGeneral{relper::lambda_table::mode::general};
const relper::lambda_table kSpecial{relper::lambda_table::mode::harmonic_special};

relper::errc code_of(void (*fn)()) {
  try {
    fn();
  } catch (const relper::error& e) {
    return e.code();
  }
  return relper::errc::none;
}

}  // namespace

TEST_SUITE("pms") {

TEST_CASE("factored substitution equals the polynomial-division route") {
  auto check_one = [](const relper::potential& p, double A) {
    CAPTURE(A);
    relper::qs_pair qs = relper::make_qs_pair(p, A);
    double want_q = relper::lambda_substitute(qs.q, A, kGeneral);
    double want_s = relper::lambda_substitute(qs.s, A, kGeneral);
    relper::r_lambda r = relper::build_R(p, A, kGeneral);
    CHECK(r.mode == relper::r_lambda::subst_mode::factored);
    CHECK(r.q_val.to_double() == Approx(want_q).epsilon(1e-12));
    CHECK(r.s_val.to_double() == Approx(want_s).epsilon(1e-12));
  };
  for (double A : {0.3, 1.0, 2.5}) {
    check_one(relper::potential::augmented(2), A);
    check_one(relper::potential::sum_family(3), A);
    check_one(relper::potential::pure_family(4), A);
    check_one(relper::potential::parse("2:0.5,6:0.125,10:0.0625"), A);
  }
}

TEST_CASE("period is 2 pi over the root of R") {
  relper::r_lambda r = relper::build_R(relper::potential::sum_family(3), 1.3, kGeneral);
  CHECK(r.period() == Approx(2.0 * kPi / std::sqrt(r.R())).epsilon(1e-14));
}

TEST_CASE("expanded mode reproduces the quadratic closed form") {
  relper::r_lambda r = relper::build_R(relper::potential::harmonic(), 1.0, kSpecial);
  CHECK(r.mode == relper::r_lambda::subst_mode::expanded);
  CHECK(r.R() == Approx(9.0 / (12.0 + 4.0 / (kPi * kPi))).epsilon(1e-15));
  CHECK(r.R() == Approx(0.72549725319242619).epsilon(1e-15));
  CHECK(r.period() == Approx(relper::period_harmonic_closed(1.0)).epsilon(1e-14));
}

TEST_CASE("table mode must match the potential structure") {
  CHECK(code_of(+[] {
          relper::build_R(relper::potential::harmonic(), 1.0, kGeneral);
        }) == relper::errc::mode_mismatch);
  CHECK(code_of(+[] {
          relper::build_R(relper::potential::parse("2:2"), 1.0, kGeneral);
        }) == relper::errc::mode_mismatch);
  CHECK(code_of(+[] {
          relper::build_R(relper::potential::augmented(2), 1.0, kSpecial);
        }) == relper::errc::mode_mismatch);
}

TEST_CASE("quadratic dispatch") {
  for (double A : {0.1, 1.0, 10.0, 1e3}) {
    CAPTURE(A);
    CHECK(relper::period_pms(relper::potential::harmonic(), A) ==
          Approx(relper::period_harmonic_closed(A)).epsilon(1e-13));
  }
  // c x^2 rescales the harmonic solution: T(A) = T_h(A sqrt(2c)) / sqrt(2c)
  relper::potential stiff = relper::potential::parse("2:2");
  CHECK(relper::period_pms(stiff, 0.7) ==
        Approx(relper::period_harmonic_closed(1.4) / 2.0).epsilon(1e-14));
}

TEST_CASE("family dispatch matches the dedicated family forms") {
  for (int m : {2, 3, 20}) {
    for (double A : {0.5, 2.0}) {
      CAPTURE(m);
      CAPTURE(A);
      CHECK(relper::period_pms(relper::potential::augmented(m), A) ==
            Approx(relper::period_family_a(m, A)).epsilon(1e-12));
      CHECK(relper::period_pms(relper::potential::sum_family(m), A) ==
            Approx(relper::period_family_b(m, A)).epsilon(1e-12));
      CHECK(relper::period_pms(relper::potential::pure_family(m), A) ==
            Approx(relper::period_family_c(m, A)).epsilon(1e-12));
    }
  }
  // same structure spelled as an explicit coefficient list
  CHECK(relper::period_pms(relper::potential::parse("4:0.25"), 1.0) ==
        Approx(relper::period_family_c(2, 1.0)).epsilon(1e-12));
}

TEST_CASE("generic potentials go through the factored table") {
  relper::potential p = relper::potential::parse("2:0.5,4:0.1,8:0.05");
  for (double A : {0.4, 1.5, 30.0}) {
    CAPTURE(A);
    CHECK(relper::period_pms(p, A) ==
          Approx(relper::build_R(p, A, kGeneral).period()).epsilon(1e-14));
  }
}

TEST_CASE("zero amplitude limits") {
  CHECK(relper::period_pms(relper::potential::harmonic(), 0.0) ==
        Approx(2.0 * kPi).epsilon(1e-15));
  CHECK(relper::period_pms(relper::potential::parse("2:1.5,4:1"), 0.0) ==
        Approx(2.0 * kPi / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(code_of(+[] {
          relper::period_pms(relper::potential::pure_family(2), 0.0);
        }) == relper::errc::zero_amplitude);
  CHECK(code_of(+[] {
          relper::period_pms(relper::potential::harmonic(), -1.0);
        }) == relper::errc::negative_amplitude);
}

TEST_CASE("ultrarelativistic boundary condition holds") {
  CHECK(relper::period_pms(relper::potential::sum_family(3), 1e3) ==
        Approx(4000.0).epsilon(1e-3));
  CHECK(relper::period_pms(relper::potential::parse("pure:1000"), 1e3) ==
        Approx(4000.0).epsilon(1e-3));
}

TEST_CASE("first order frequency") {
  CHECK(relper::omega_first_order_pms(relper::potential::harmonic(), 1e-3, 32) ==
        Approx(1.0).epsilon(1e-5));
  CHECK(relper::omega_first_order_pms(relper::potential::augmented(2), 10.0, 32) ==
        Approx(1.03242320175665).epsilon(1e-9));

  CHECK(code_of(+[] {
          relper::omega_first_order_pms(relper::potential::harmonic(), 1.0, 16);
        }) == relper::errc::domain);
  CHECK(code_of(+[] {
          relper::omega_first_order_pms(relper::potential::harmonic(), 0.0, 32);
        }) == relper::errc::zero_amplitude);
  CHECK(code_of(+[] {
          relper::omega_first_order_pms(relper::potential::harmonic(), -2.0, 32);
        }) == relper::errc::negative_amplitude);
}

}  // TEST_SUITE
