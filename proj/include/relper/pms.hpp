#pragma once

#include "relper/lambdas.hpp"
#include "relper/potential.hpp"
#include "relper/scaled_real.hpp"

namespace relper {

// The period kernel R after the stand-in substitution. Two constructions:
//  - factored: substitution applied to S and Q separately, then
//    R = s_val (q_val + 2) / (q_val + 1)^2. Used for every potential of
//    half-degree m >= 2; squares of substituted quantities deliberately stand
//    in for the higher harmonics.
//  - expanded: numerator and denominator polynomials expanded in x before
//    substitution, so the x^4 stand-in enters on its own. Quadratic
//    potentials only; this is where 2/pi^2 belongs.
// The two constructions give different values; the mode is part of the type.
struct r_lambda {
  enum class subst_mode { factored, expanded };

  subst_mode mode;
  double A = 0.0;
  scaled_real s_val;  // factored: S with x^{2k} -> A^{2k} lambda_{2k}
  scaled_real q_val;  // factored: Q likewise
  double num = 0.0;   // expanded: numerator of R
  double den = 0.0;   // expanded: denominator of R

  double R() const;       // may raise overflow_risk in extreme factored cases
  double period() const;  // 2 pi / sqrt(R), overflow-safe in factored mode
};

// Requires the table mode to match the potential: quadratic potentials take
// the harmonic_special table (expanded), everything else the general table
// (factored); raises mode_mismatch otherwise.
r_lambda build_R(const potential& phi, double A, const lambda_table& table);

// Zeroth-order approximate period T = 2 pi / sqrt(R) with the boundary-fixed
// stand-ins; selects the substitution mode from the potential structure.
// A = 0 returns the analytic limit (raises zero_amplitude when the potential
// has no x^2 term and the limit diverges).
double period_pms(const potential& phi, double A);

// First-order variational frequency sqrt((1/pi) int_0^pi R(theta) dtheta)
// with the exact R, no stand-ins. Node count escalates by doubling from
// `nodes` until successive estimates agree to 1e-8 relative; raises
// quadrature_non_convergence at the escalation cap. Exposed to demonstrate
// that this route misses T -> 4A at large amplitude; period_pms does not
// use it.
double omega_first_order_pms(const potential& phi, double A, int nodes);

}  // namespace relper
