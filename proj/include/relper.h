/* C interface to the relativistic-oscillator period library.
 *
 * Every operation reports a relper_status; out-values are written only on
 * RELPER_OK. A human-readable message for the most recent failure on the
 * calling thread is available from relper_last_error(). Potentials are opaque
 * handles owned by the caller and released with relper_potential_free.
 */
#ifndef RELPER_H
#define RELPER_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct relper_potential relper_potential;

typedef enum relper_status {
  RELPER_OK = 0,
  RELPER_ERR_PARSE,
  RELPER_ERR_ODD_EXPONENT,
  RELPER_ERR_NON_POSITIVE_LEADING,
  RELPER_ERR_EMPTY_POTENTIAL,
  RELPER_ERR_BAD_M,
  RELPER_ERR_NEGATIVE_AMPLITUDE,
  RELPER_ERR_ZERO_AMPLITUDE,
  RELPER_ERR_OUT_OF_RANGE,
  RELPER_ERR_DOMAIN,
  RELPER_ERR_NONZERO_REMAINDER,
  RELPER_ERR_MISSING_LAMBDA,
  RELPER_ERR_MODE_MISMATCH,
  RELPER_ERR_OVERFLOW_RISK,
  RELPER_ERR_ZERO_REFERENCE,
  RELPER_ERR_QUADRATURE_NON_CONVERGENCE,
  RELPER_ERR_SUPERLUMINAL_STATE,
  RELPER_ERR_MAX_STEPS_EXCEEDED,
  RELPER_ERR_IO,
  RELPER_ERR_INVALID_ARGUMENT,
  RELPER_ERR_INTERNAL
} relper_status;

typedef enum relper_family {
  RELPER_FAMILY_HARMONIC = 0,
  RELPER_FAMILY_AUGMENTED,
  RELPER_FAMILY_SUM,
  RELPER_FAMILY_PURE,
  RELPER_FAMILY_GENERIC
} relper_family;

const char* relper_version(void);
const char* relper_status_name(relper_status status);
/* Message for the last failing call on this thread; empty string if none. */
const char* relper_last_error(void);

/* Construction. Grammar for parse:
 *   harmonic | aug:m | sum:m | pure:m | exp:coeff[,exp:coeff...]
 * with even exponents >= 2 and a positive leading coefficient. */
relper_status relper_potential_parse(const char* text, relper_potential** out);
relper_status relper_potential_harmonic(relper_potential** out);
relper_status relper_potential_augmented(int m, relper_potential** out);
relper_status relper_potential_sum(int m, relper_potential** out);
relper_status relper_potential_pure(int m, relper_potential** out);
relper_status relper_potential_from_coeffs(const int* exponents, const double* coeffs,
                                           size_t count, relper_potential** out);
void relper_potential_free(relper_potential* p);

relper_status relper_potential_family(const relper_potential* p, relper_family* out);
relper_status relper_potential_m(const relper_potential* p, int* out);
relper_status relper_potential_eval(const relper_potential* p, double x, double* out);

/* Kinematics. */
relper_status relper_total_energy(const relper_potential* p, double A, double* out);
relper_status relper_velocity_at(const relper_potential* p, double A, double x, double* out);
relper_status relper_max_velocity(const relper_potential* p, double A, double* out);

/* Periods. closed dispatches on potential structure (quadratic or one of the
 * three closed-form families; anything else is RELPER_ERR_DOMAIN). elliptic
 * accepts quadratic potentials only. nodes = 0 means the default rule size
 * (or the RELPER_QUAD_NODES environment override). */
relper_status relper_period_closed(const relper_potential* p, double A, double* out);
relper_status relper_period_pms(const relper_potential* p, double A, double* out);
relper_status relper_period_elliptic(const relper_potential* p, double A, double* out);
relper_status relper_period_quadrature(const relper_potential* p, double A, int nodes,
                                       double* out);
relper_status relper_period_ode(const relper_potential* p, double A, double* out);
/* tol <= 0 and max_steps <= 0 select the defaults (1e-10, 2000000); the
 * energy_drift out-pointer may be NULL to skip the conservation sweep. */
relper_status relper_period_ode_ex(const relper_potential* p, double A, double tol,
                                   long max_steps, double* period, double* energy_drift);
relper_status relper_omega_first_order(const relper_potential* p, double A, int nodes,
                                       double* out);

/* Stand-in sequence and partial sums. */
relper_status relper_lambda_closed(int n, double* out);
/* Bootstrap recursion; fills out[0..up_to_n] with lambda_0 .. lambda_{2 up_to_n}.
 * Requires up_to_n >= 2. */
relper_status relper_lambda_iterative(int up_to_n, double* out);
relper_status relper_lambda_partial_sum(int n, double* out);
relper_status relper_lambda_harmonic_l4(double* out);

/* Elliptic integrals (parameter convention, argument = k^2) and the named
 * closed forms. */
relper_status relper_agm_K(double m_param, double* out);
relper_status relper_agm_E(double m_param, double* out);
relper_status relper_period_harmonic_closed(double A, double* out);
relper_status relper_period_harmonic_exact(double A, double* out);
relper_status relper_period_family_a(int m, double A, double* out);
relper_status relper_period_family_b(int m, double A, double* out);
relper_status relper_period_family_c(int m, double A, double* out);

relper_status relper_relative_error(double approx, double reference, double* out);

#ifdef __cplusplus
}
#endif

#endif /* RELPER_H */
