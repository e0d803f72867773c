#include "relper/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "relper/errors.hpp"
#include "relper/gauss_legendre.hpp"
#include "relper/scaled_real.hpp"

namespace relper {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxNodes = 32768;

void check_positive_amplitude(double A) {
  if (A < 0.0) fail(errc::negative_amplitude, "amplitude must be >= 0");
  if (A == 0.0) fail(errc::zero_amplitude, "amplitude must be positive");
}

double quad_once(const potential& phi, double A, int n) {
  const gl_rule& rule = gauss_legendre(n);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    double theta = 0.25 * kPi * (rule.x[i] + 1.0);
    qs_at_angle qs = eval_qs_at_angle(phi, A, theta);
    scaled_real qp1 = qs.q + scaled_real(1.0);
    scaled_real qp2 = qs.q + scaled_real(2.0);
    acc += rule.w[i] * (qp1 / scaled_real::sqrt(qs.s * qp2)).to_double();
  }
  // 4 int_0^{pi/2} = 4 * (pi/4) * sum w f on [-1, 1]
  return kPi * acc;
}

struct ode_state {
  double x;
  double v;
};

// x' = v, v' = -phi'(x) (1 - v^2)^{3/2}; false when a stage leaves |v| < 1.
bool rk4_step(const even_poly& p, const ode_state& y, double dt, ode_state* out) {
  auto deriv = [&p](const ode_state& s, ode_state* d) {
    double g = 1.0 - s.v * s.v;
    if (!(g > 0.0)) return false;
    d->x = s.v;
    d->v = -p.eval_deriv(s.x) * g * std::sqrt(g);
    return true;
  };
  ode_state k1, k2, k3, k4;
  if (!deriv(y, &k1)) return false;
  if (!deriv({y.x + 0.5 * dt * k1.x, y.v + 0.5 * dt * k1.v}, &k2)) return false;
  if (!deriv({y.x + 0.5 * dt * k2.x, y.v + 0.5 * dt * k2.v}, &k3)) return false;
  if (!deriv({y.x + dt * k3.x, y.v + dt * k3.v}, &k4)) return false;
  out->x = y.x + dt / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
  out->v = y.v + dt / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v);
  return std::isfinite(out->x) && std::isfinite(out->v);
}

// One controlled step: full dt vs two half steps, |y2 - y1|/15 as the error
// estimate, the half-step result as the candidate.
bool attempt_step(const even_poly& p, const ode_state& y, double dt, double x_scale,
                  ode_state* out, double* est) {
  ode_state full, mid, half2;
  if (!rk4_step(p, y, dt, &full) || !rk4_step(p, y, 0.5 * dt, &mid) ||
      !rk4_step(p, mid, 0.5 * dt, &half2))
    return false;
  *est = std::max(std::abs(full.x - half2.x) / x_scale, std::abs(full.v - half2.v)) / 15.0;
  *out = half2;
  return true;
}

struct ode_driver {
  const potential& phi;
  ode_config cfg;
  double A;
  double dt0;
  double dt_cap;

  ode_driver(const potential& phi_in, double A_in, const ode_config& cfg_in)
      : phi(phi_in), cfg(cfg_in), A(A_in) {
    check_positive_amplitude(A);
    dt0 = cfg.dt_init > 0.0 ? cfg.dt_init : 1e-3 * (4.0 * A + 2.0 * kPi);
    // Keep steps well under a quarter period so the crossing refinement
    // stays inside one locally accurate RK4 step.
    dt_cap = (4.0 * A + 2.0 * kPi) / 50.0;
  }

  // Advances until stop(t, y) says done or the step count runs out; calls
  // on_accept(t, y) after every accepted step.
  template <typename Stop, typename Accept>
  void run(Stop&& stop, Accept&& on_accept, double t_limit) {
    ode_state y{A, 0.0};
    double t = 0.0;
    double dt = std::min(dt0, dt_cap);
    double x_scale = std::max(1.0, A);
    long steps = 0;
    while (!stop(t, y)) {
      if (steps++ >= cfg.max_steps)
        fail(errc::max_steps_exceeded,
             "no turning point within " + std::to_string(cfg.max_steps) + " steps");
      double dt_try = dt;
      if (t_limit > 0.0) dt_try = std::min(dt_try, t_limit - t);
      ode_state ynext;
      double est;
      if (!attempt_step(phi.poly(), y, dt_try, x_scale, &ynext, &est)) {
        dt *= 0.5;
        if (dt < 1e-15 * dt0)
          fail(errc::max_steps_exceeded, "step size collapsed during integration");
        continue;
      }
      if (est > cfg.tol) {
        dt = dt_try * std::clamp(0.9 * std::pow(cfg.tol / est, 0.2), 0.2, 1.0);
        if (dt < 1e-15 * dt0)
          fail(errc::max_steps_exceeded, "step size collapsed during integration");
        continue;
      }
      if (std::abs(ynext.v) >= 1.0)
        fail(errc::superluminal_state, "integration reached |v| >= 1");
      last_y = y;
      last_dt = dt_try;
      y = ynext;
      t += dt_try;
      on_accept(t, y);
      double grow = est > 0.0 ? 0.9 * std::pow(cfg.tol / est, 0.2) : 5.0;
      dt = std::min(dt_try * std::clamp(grow, 0.2, 5.0), dt_cap);
    }
    final_t = t;
    final_y = y;
  }

  ode_state last_y{0.0, 0.0};  // state before the last accepted step
  double last_dt = 0.0;
  double final_t = 0.0;
  ode_state final_y{0.0, 0.0};
};

}  // namespace

quadrature_config default_quadrature_config() {
  quadrature_config cfg;
  if (const char* env = std::getenv("RELPER_QUAD_NODES")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end && *end == '\0' && n > 0 && n <= kMaxNodes) cfg.nodes = static_cast<int>(n);
  }
  return cfg;
}

double period_quadrature(const potential& phi, double A, const quadrature_config& cfg) {
  check_positive_amplitude(A);
  if (cfg.nodes < 32) fail(errc::domain, "node count must be >= 32");
  if (!cfg.richardson) return quad_once(phi, A, cfg.nodes);
  int n = cfg.nodes;
  double prev = quad_once(phi, A, n);
  while (2 * n <= kMaxNodes) {
    n *= 2;
    double next = quad_once(phi, A, n);
    if (std::abs(prev - next) <= cfg.tol * std::abs(next)) return next;
    prev = next;
  }
  fail(errc::quadrature_non_convergence,
       "period integral did not settle by " + std::to_string(kMaxNodes) + " nodes");
}

double period_ode(const potential& phi, double A, const ode_config& cfg) {
  ode_driver drv(phi, A, cfg);
  drv.run([](double, const ode_state& y) { return y.x <= 0.0; },
          [](double, const ode_state&) {}, -1.0);
  if (drv.last_dt == 0.0) return 0.0;  // A crossed at t = 0; unreachable for A > 0

  // x(h) along a single RK4 step from the pre-crossing state is monotone
  // through zero; bisect h in (0, last_dt].
  double lo = 0.0, hi = drv.last_dt;
  for (int i = 0; i < 200 && hi - lo > 1e-16 * drv.last_dt; ++i) {
    double mid = 0.5 * (lo + hi);
    ode_state probe;
    if (!rk4_step(phi.poly(), drv.last_y, mid, &probe) || probe.x <= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  double t_quarter = drv.final_t - drv.last_dt + 0.5 * (lo + hi);
  return 4.0 * t_quarter;
}

double ode_energy_drift(const potential& phi, double A, const ode_config& cfg) {
  double T = period_ode(phi, A, cfg);
  ode_driver drv(phi, A, cfg);
  double e0 = 1.0 + phi.poly().eval(A);
  double worst = 0.0;
  drv.run([&](double t, const ode_state&) { return t >= T; },
          [&](double, const ode_state& y) {
            double e = 1.0 / std::sqrt(1.0 - y.v * y.v) + phi.poly().eval(y.x);
            worst = std::max(worst, std::abs(e / e0 - 1.0));
          },
          T);
  return worst;
}

double relative_error(double approx, double reference) {
  if (reference == 0.0) fail(errc::zero_reference, "reference value is zero");
  return std::abs(approx / reference - 1.0);
}

}  // namespace relper
