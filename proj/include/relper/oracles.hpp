#pragma once

#include "relper/potential.hpp"

namespace relper {

struct quadrature_config {
  int nodes = 200;         // starting rule size, >= 32
  bool richardson = true;  // compare against the doubled rule and escalate
  double tol = 1e-12;      // relative agreement target between n and 2n
};

// Default config; RELPER_QUAD_NODES (a positive integer) overrides nodes.
quadrature_config default_quadrature_config();

struct ode_config {
  double dt_init = 0.0;  // 0 means 1e-3 * (4A + 2 pi)
  double tol = 1e-10;    // local error target per step
  long max_steps = 2000000;
};

// Ground truth #1: Gauss-Legendre quadrature of the period integral in the
// angle variable x = A cos(theta), where the turning-point singularity is
// gone and the integrand is smooth. Node count doubles until two successive
// estimates agree to cfg.tol relative (cap 32768) unless cfg.richardson is
// off, in which case the single cfg.nodes rule is returned unchecked.
double period_quadrature(const potential& phi, double A, const quadrature_config& cfg);

// Ground truth #2: adaptive RK4 on x'' = -phi'(x) (1 - x'^2)^{3/2} from
// x(0) = A at rest; the first x = 0 crossing is refined by bisection and
// T = 4 t*. Step doubling drives the local error to cfg.tol; a step that
// reaches |v| >= 1 raises superluminal_state.
double period_ode(const potential& phi, double A, const ode_config& cfg);

// Max relative drift of (1 - v^2)^{-1/2} + phi(x) along one full period of
// the same trajectory; the conservation check behind the ODE oracle.
double ode_energy_drift(const potential& phi, double A, const ode_config& cfg);

// |approx / reference - 1|; raises zero_reference.
double relative_error(double approx, double reference);

}  // namespace relper
