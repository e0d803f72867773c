#include "relper/pms.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "relper/errors.hpp"
#include "relper/gauss_legendre.hpp"

namespace relper {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxNodes = 32768;

void check_positive_amplitude(double A) {
  if (A < 0.0) fail(errc::negative_amplitude, "amplitude must be >= 0");
  if (A == 0.0) fail(errc::zero_amplitude, "amplitude must be positive");
}

}  // namespace

double r_lambda::R() const {
  if (mode == subst_mode::expanded) return num / den;
  scaled_real qp1 = q_val + scaled_real(1.0);
  scaled_real qp2 = q_val + scaled_real(2.0);
  return (s_val * qp2 / (qp1 * qp1)).to_double();
}

double r_lambda::period() const {
  if (mode == subst_mode::expanded) return 2.0 * kPi * std::sqrt(den / num);
  scaled_real qp1 = q_val + scaled_real(1.0);
  scaled_real qp2 = q_val + scaled_real(2.0);
  return (scaled_real(2.0 * kPi) * qp1 / scaled_real::sqrt(s_val * qp2)).to_double();
}

r_lambda build_R(const potential& phi, double A, const lambda_table& table) {
  if (A < 0.0) fail(errc::negative_amplitude, "amplitude must be >= 0");

  if (phi.matches_quadratic()) {
    if (table.table_mode() != lambda_table::mode::harmonic_special)
      fail(errc::mode_mismatch, "quadratic potentials take the harmonic_special table");
    double c = phi.poly().coeff(2);
    double l2 = table.value(1);
    double l4 = table.value(2);
    // c x^2 at amplitude A is x^2/2 at A sqrt(2c) up to the time scale
    // sqrt(2c), which multiplies R.
    double u = 2.0 * c * A * A;
    r_lambda r;
    r.mode = r_lambda::subst_mode::expanded;
    r.A = A;
    r.num = 2.0 * c * (4.0 + u * (1.0 - l2));
    r.den = 4.0 + 4.0 * u * (1.0 - l2) + u * u * (1.0 - 2.0 * l2 + l4);
    return r;
  }

  if (table.table_mode() != lambda_table::mode::general)
    fail(errc::mode_mismatch, "only quadratic potentials take the harmonic_special table");

  int kmax = phi.poly().degree() / 2;
  std::vector<double> prefix(kmax + 1, 0.0);  // prefix[k] = sum_{j<k} lambda_{2j}
  for (int j = 0; j < kmax; ++j) prefix[j + 1] = prefix[j] + table.value(j);

  r_lambda r;
  r.mode = r_lambda::subst_mode::factored;
  r.A = A;
  scaled_real sA(A);
  for (const auto& [exp, c] : phi.poly().terms()) {
    int k = exp / 2;
    r.s_val = r.s_val +
              scaled_real(c * prefix[k]) * scaled_real::pow_int(sA, 2 * k - 2);
    r.q_val = r.q_val +
              scaled_real(c * (1.0 - table.value(k))) * scaled_real::pow_int(sA, 2 * k);
  }
  return r;
}

double period_pms(const potential& phi, double A) {
  if (A < 0.0) fail(errc::negative_amplitude, "amplitude must be >= 0");
  if (A == 0.0) {
    double c2 = phi.poly().coeff(2);
    if (c2 > 0.0) return 2.0 * kPi / std::sqrt(2.0 * c2);
    if (c2 == 0.0) fail(errc::zero_amplitude, "period diverges at zero amplitude");
    fail(errc::domain, "zero-amplitude limit undefined without a convex origin");
  }
  lambda_table table(phi.matches_quadratic() ? lambda_table::mode::harmonic_special
                                             : lambda_table::mode::general);
  return build_R(phi, A, table).period();
}

double omega_first_order_pms(const potential& phi, double A, int nodes) {
  check_positive_amplitude(A);
  if (nodes < 32) fail(errc::domain, "node count must be >= 32");

  auto omega_with = [&](int n) {
    const gl_rule& rule = gauss_legendre(n);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      double theta = 0.25 * kPi * (rule.x[i] + 1.0);
      qs_at_angle qs = eval_qs_at_angle(phi, A, theta);
      scaled_real qp1 = qs.q + scaled_real(1.0);
      scaled_real qp2 = qs.q + scaled_real(2.0);
      acc += rule.w[i] * (qs.s * qp2 / (qp1 * qp1)).to_double();
    }
    // (1/pi) int_0^pi R dtheta = (2/pi) * (pi/4) * sum w R on [-1, 1]
    return std::sqrt(0.5 * acc);
  };

  int n = nodes;
  double prev = omega_with(n);
  while (2 * n <= kMaxNodes) {
    n *= 2;
    double next = omega_with(n);
    if (std::abs(prev - next) <= 1e-8 * std::abs(next)) return next;
    prev = next;
  }
  fail(errc::quadrature_non_convergence,
       "frequency integral did not settle by " + std::to_string(kMaxNodes) +
           " nodes (last estimates " + std::to_string(prev) + ")");
}

}  // namespace relper
