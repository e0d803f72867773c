#include "relper/closed_forms.hpp"

#include <cmath>
#include <numbers>

#include "relper/errors.hpp"
#include "relper/lambdas.hpp"
#include "relper/scaled_real.hpp"

namespace relper {

namespace {

constexpr double kPi = std::numbers::pi;

// AGM with the E-series residual sum: b0 = sqrt(1 - m) is passed in so
// callers that know 1 - m analytically avoid the cancellation in computing it.
void agm_iterate(double m_param, double b0, double* K_out, double* E_out) {
  double a = 1.0;
  double b = b0;
  double sum = 0.5 * m_param;  // 2^{-1} c_0^2
  double pow2 = 1.0;
  while (a - b > 1e-15 * a) {
    double c = 0.5 * (a - b);
    double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    sum += pow2 * c * c;
    pow2 *= 2.0;
  }
  double K = kPi / (2.0 * a);
  if (K_out) *K_out = K;
  if (E_out) *E_out = K * (1.0 - sum);
}

void check_amplitude(double A) {
  if (A < 0.0) fail(errc::negative_amplitude, "amplitude must be >= 0");
}

void check_family_m(int m) {
  if (m < 2) fail(errc::bad_m, "family index m must be >= 2, got " + std::to_string(m));
}

}  // namespace

double agm_K(double m_param) {
  if (!(m_param >= 0.0) || m_param >= 1.0)
    fail(errc::domain, "K parameter must lie in [0, 1)");
  double K;
  agm_iterate(m_param, std::sqrt(1.0 - m_param), &K, nullptr);
  return K;
}

double agm_E(double m_param) {
  if (!(m_param >= 0.0) || m_param > 1.0)
    fail(errc::domain, "E parameter must lie in [0, 1]");
  if (m_param == 1.0) return 1.0;
  double E;
  agm_iterate(m_param, std::sqrt(1.0 - m_param), nullptr, &E);
  return E;
}

double period_harmonic_closed(double A) {
  check_amplitude(A);
  double a2 = A * A;
  return 4.0 * std::sqrt(a2 * a2 + (2.0 + a2) * kPi * kPi) / std::sqrt(8.0 + a2);
}

double period_harmonic_exact(double A) {
  check_amplitude(A);
  double a2 = A * A;
  double m_param = a2 / (4.0 + a2);
  // 1 - m = 4/(4+A^2) exactly; the subtraction would lose digits at large A.
  double b0 = 2.0 / std::sqrt(4.0 + a2);
  double K, E;
  agm_iterate(m_param, b0, &K, &E);
  return (4.0 * (4.0 + a2) * E - 8.0 * K) / std::sqrt(4.0 + a2);
}

double period_family_a(int m, double A) {
  check_family_m(m);
  check_amplitude(A);
  scaled_real a2(A * A);
  scaled_real a2m = scaled_real::pow_int(scaled_real(A), 2 * m);
  scaled_real z1 = scaled_real(0.5 * m) * a2 + a2m * scaled_real(1.0 - lambda_closed(m));
  scaled_real bracket =
      scaled_real(static_cast<double>(m)) +
      scaled_real::pow_int(scaled_real(A), 2 * m - 2) * scaled_real(lambda_partial_sum(m));
  scaled_real num = scaled_real(2.0 * kPi) * (scaled_real(2.0 * m) + z1);
  scaled_real den = scaled_real::sqrt((scaled_real(4.0 * m) + z1) * bracket);
  return (num / den).to_double();
}

double period_family_b(int m, double A) {
  check_family_m(m);
  check_amplitude(A);
  scaled_real a2(A * A);
  scaled_real z2, s_sum;
  scaled_real a_pow(1.0);  // A^{2n-2}, advanced per term
  for (int n = 1; n <= m; ++n) {
    s_sum = s_sum + a_pow * scaled_real(lambda_partial_sum(n) / (2.0 * n));
    a_pow = a_pow * a2;  // now A^{2n}
    z2 = z2 + a_pow * scaled_real((1.0 - lambda_closed(n)) / (2.0 * n));
  }
  scaled_real num = scaled_real(2.0 * kPi) * (scaled_real(1.0) + z2);
  scaled_real den = scaled_real::sqrt((scaled_real(2.0) + z2) * s_sum);
  return (num / den).to_double();
}

double period_family_c(int m, double A) {
  check_family_m(m);
  check_amplitude(A);
  if (A == 0.0) fail(errc::zero_amplitude, "pure-family period diverges at A = 0");
  scaled_real w =
      scaled_real::pow_int(scaled_real(A), 2 * m) * scaled_real(1.0 - lambda_closed(m));
  scaled_real num = scaled_real(2.0 * kPi) * (scaled_real(2.0 * m) + w);
  scaled_real den = scaled_real::pow_int(scaled_real(A), m - 1) *
                    scaled_real::sqrt((scaled_real(4.0 * m) + w) *
                                      scaled_real(lambda_partial_sum(m)));
  return (num / den).to_double();
}

}  // namespace relper
