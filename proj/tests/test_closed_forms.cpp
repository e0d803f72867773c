#include "doctest.h"

#include "relper/closed_forms.hpp"
#include "relper/errors.hpp"

#include <cmath>

using doctest::Approx;

namespace {

constexpr double kPi = 3.14159265358979323846;

relper::errc code_of(void (*fn)()) {
  try {
    fn();
  } catch (const relper::error& e) {
    return e.code();
  }
  return relper::errc::none;
}

// Fully expanded special cases of the family forms, kept independent of the
// scaled-arithmetic implementation they are checked against.
double quartic_direct(double A) {
  double A2 = A * A, A4 = A2 * A2;
  return 2.0 * std::sqrt(2.0) * (6.0 * A4 + (4.0 + A2) * kPi * kPi) /
         std::sqrt((4.0 + 3.0 * A2) * (6.0 * A4 + (8.0 + A2) * kPi * kPi));
}

double sextic_direct(double A) {
  double A2 = A * A, A4 = A2 * A2, A6 = A4 * A2;
  double p2 = kPi * kPi, p4 = p2 * p2;
  return (24.0 * p4 + 6.0 * A2 * p4 + A6 * (40.0 * p2 - 96.0)) /
         std::sqrt((6.0 * p2 + A4 * (5.0 * p2 - 12.0)) *
                   (24.0 * p4 + 3.0 * A2 * p4 + A6 * (20.0 * p2 - 48.0)));
}

double sum246_direct(double A) {
  double A2 = A * A, A4 = A2 * A2, A6 = A4 * A2;
  double p2 = kPi * kPi, p4 = p2 * p2;
  return 2.0 * std::sqrt(2.0) *
         (-48.0 * A6 + 2.0 * A4 * (9.0 + 10.0 * A2) * p2 + 3.0 * (4.0 + A2) * p4) /
         std::sqrt((-24.0 * A4 + (12.0 + 9.0 * A2 + 10.0 * A4) * p2) *
                   (-48.0 * A6 + 2.0 * A4 * (9.0 + 10.0 * A2) * p2 + 3.0 * (8.0 + A2) * p4));
}

double pure_quartic_direct(double A) {
  double A2 = A * A, A4 = A2 * A2, A6 = A4 * A2;
  double p2 = kPi * kPi, p4 = p2 * p2;
  return (12.0 * A4 * kPi + 8.0 * kPi * p2) / std::sqrt(9.0 * A6 * p2 + 12.0 * A2 * p4);
}

}  // namespace

TEST_SUITE("closed_forms") {

TEST_CASE("complete elliptic integral K") {
  CHECK(relper::agm_K(0.0) == Approx(kPi / 2.0).epsilon(1e-15));
  CHECK(relper::agm_K(0.2) == Approx(1.659623598610528).epsilon(1e-14));
  CHECK(relper::agm_K(0.5) == Approx(1.8540746773013719).epsilon(1e-14));
  // near the logarithmic singularity
  CHECK(relper::agm_K(1.0 - 1e-6) == Approx(8.29405146361544).epsilon(1e-10));

  CHECK(code_of(+[] { relper::agm_K(1.0); }) == relper::errc::domain);
  CHECK(code_of(+[] { relper::agm_K(-0.1); }) == relper::errc::domain);
}

TEST_CASE("complete elliptic integral E") {
  CHECK(relper::agm_E(0.0) == Approx(kPi / 2.0).epsilon(1e-15));
  CHECK(relper::agm_E(0.2) == Approx(1.4890350580958529).epsilon(1e-14));
  CHECK(relper::agm_E(0.5) == Approx(1.3506438810476755).epsilon(1e-14));
  CHECK(relper::agm_E(1.0) == 1.0);

  CHECK(code_of(+[] { relper::agm_E(1.1); }) == relper::errc::domain);
  CHECK(code_of(+[] { relper::agm_E(-0.1); }) == relper::errc::domain);
}

TEST_CASE("K and E satisfy the Legendre relation") {
  for (double m : {0.1, 0.3, 0.7}) {
    double lhs = relper::agm_E(m) * relper::agm_K(1.0 - m) +
                 relper::agm_E(1.0 - m) * relper::agm_K(m) -
                 relper::agm_K(m) * relper::agm_K(1.0 - m);
    CHECK(lhs == Approx(kPi / 2.0).epsilon(1e-14));
  }
}

TEST_CASE("harmonic closed form") {
  CHECK(relper::period_harmonic_closed(0.0) == Approx(2.0 * kPi).epsilon(1e-15));
  CHECK(relper::period_harmonic_closed(0.5) == Approx(6.5718016388590991).epsilon(1e-14));
  CHECK(relper::period_harmonic_closed(1.0) == Approx(7.3766976294898399).epsilon(1e-14));
  CHECK(relper::period_harmonic_closed(1e3) == Approx(4000.0037392166191).epsilon(1e-14));

  CHECK(code_of(+[] { relper::period_harmonic_closed(-1.0); }) ==
        relper::errc::negative_amplitude);
}

TEST_CASE("harmonic exact period") {
  CHECK(relper::period_harmonic_exact(0.0) == Approx(2.0 * kPi).epsilon(1e-14));
  CHECK(relper::period_harmonic_exact(0.1) == Approx(6.2949570891446042).epsilon(1e-14));
  CHECK(relper::period_harmonic_exact(1.0) == Approx(7.380684549441157).epsilon(1e-14));
  CHECK(relper::period_harmonic_exact(10.0) == Approx(40.406779692257384).epsilon(1e-14));
  CHECK(relper::period_harmonic_exact(100.0) == Approx(400.04001618841299).epsilon(1e-14));
  CHECK(relper::period_harmonic_exact(1000.0) == Approx(4000.0040000254035).epsilon(1e-14));

  CHECK(code_of(+[] { relper::period_harmonic_exact(-1.0); }) ==
        relper::errc::negative_amplitude);
}

TEST_CASE("harmonic closed form error against the exact period") {
  auto rel = [](double A) {
    double c = relper::period_harmonic_closed(A);
    double e = relper::period_harmonic_exact(A);
    return std::fabs(c - e) / e;
  };
  CHECK(rel(1.0) == Approx(5.40182949780584e-4).epsilon(1e-6));
  CHECK(rel(100.0) == Approx(6.5400750529125686e-6).epsilon(1e-6));
  CHECK(rel(1000.0) == Approx(6.5202130897919105e-8).epsilon(1e-4));
}

TEST_CASE("family period values") {
  CHECK(relper::period_family_a(2, 1.0) == Approx(6.0762181284415372).epsilon(1e-13));
  CHECK(relper::period_family_a(3, 1.0) == Approx(6.2173971133605402).epsilon(1e-13));
  CHECK(relper::period_family_b(3, 1.0) == Approx(5.5390111596915936).epsilon(1e-13));
  CHECK(relper::period_family_c(2, 1.0) == Approx(8.057318818189109).epsilon(1e-13));
  CHECK(relper::period_family_c(2, 0.1) == Approx(72.552801560093362).epsilon(1e-13));
  CHECK(relper::period_family_a(500, 0.5) == Approx(6.5739565042614623).epsilon(1e-12));
}

TEST_CASE("families approach the light-speed bound at large amplitude") {
  // T -> 4A once the motion is ultrarelativistic
  CHECK(relper::period_family_b(100, 10.0) == Approx(40.0).epsilon(1e-3));
  CHECK(relper::period_family_a(1000, 1000.0) == Approx(4000.0).epsilon(1e-3));
  CHECK(relper::period_family_a(500, 2.0) == Approx(8.0).epsilon(1e-3));
}

TEST_CASE("expanded special cases agree with the scaled evaluation") {
  for (int i = 0; i < 20; ++i) {
    double A = 0.05 * std::pow(400.0, i / 19.0);
    CAPTURE(A);
    CHECK(relper::period_family_a(2, A) == Approx(quartic_direct(A)).epsilon(1e-12));
    CHECK(relper::period_family_a(3, A) == Approx(sextic_direct(A)).epsilon(1e-12));
    CHECK(relper::period_family_b(3, A) == Approx(sum246_direct(A)).epsilon(1e-12));
    CHECK(relper::period_family_c(2, A) == Approx(pure_quartic_direct(A)).epsilon(1e-12));
  }
}

TEST_CASE("lowest sum family collapses to the quartic family") {
  for (double A : {0.1, 0.7, 1.0, 3.0, 25.0}) {
    CAPTURE(A);
    CHECK(relper::period_family_b(2, A) ==
          Approx(relper::period_family_a(2, A)).epsilon(1e-13));
  }
}

TEST_CASE("pure family scales like the classical power law at small amplitude") {
  // classical T ~ A^(1-m); relativistic corrections are ~A^2m
  double ratio = relper::period_family_c(3, 0.01) / relper::period_family_c(3, 0.1);
  CHECK(ratio == Approx(99.99999041465748).epsilon(1e-12));
}

TEST_CASE("classical limit of the families") {
  double A = 1e-3;
  double delta = (3.0 / 16.0) * A * A * 2.0 * kPi;
  // leading corrections: +3A^2/16 relativistic, -3A^2/8 from a quartic term
  CHECK(relper::period_harmonic_closed(A) == Approx(2.0 * kPi + delta).epsilon(1e-9));
  CHECK(relper::period_family_a(2, A) == Approx(2.0 * kPi - delta).epsilon(1e-9));
  CHECK(relper::period_family_a(20, A) == Approx(2.0 * kPi + delta).epsilon(1e-9));
  CHECK(relper::period_family_b(5, A) == Approx(2.0 * kPi - delta).epsilon(1e-9));
}

TEST_CASE("family argument validation") {
  CHECK(code_of(+[] { relper::period_family_a(1, 1.0); }) == relper::errc::bad_m);
  CHECK(code_of(+[] { relper::period_family_b(1, 1.0); }) == relper::errc::bad_m);
  CHECK(code_of(+[] { relper::period_family_c(0, 1.0); }) == relper::errc::bad_m);
  CHECK(code_of(+[] { relper::period_family_a(2, -1.0); }) ==
        relper::errc::negative_amplitude);
  CHECK(code_of(+[] { relper::period_family_b(3, -0.5); }) ==
        relper::errc::negative_amplitude);
  CHECK(code_of(+[] { relper::period_family_c(2, -2.0); }) ==
        relper::errc::negative_amplitude);
  CHECK(code_of(+[] { relper::period_family_c(2, 0.0); }) ==
        relper::errc::zero_amplitude);
}

TEST_CASE("zero amplitude limits of the bounded families") {
  CHECK(relper::period_family_a(2, 0.0) == Approx(2.0 * kPi).epsilon(1e-14));
  CHECK(relper::period_family_b(4, 0.0) == Approx(2.0 * kPi).epsilon(1e-14));
}

}  // TEST_SUITE
