#include "relper.h"

#include <cmath>
#include <exception>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "relper/closed_forms.hpp"
#include "relper/errors.hpp"
#include "relper/lambdas.hpp"
#include "relper/oracles.hpp"
#include "relper/pms.hpp"
#include "relper/potential.hpp"

struct relper_potential {
  relper::potential impl;
};

namespace {

thread_local std::string g_last_error;

relper_status status_from(relper::errc c) {
  using relper::errc;
  switch (c) {
    case errc::none: return RELPER_OK;
    case errc::parse: return RELPER_ERR_PARSE;
    case errc::odd_exponent: return RELPER_ERR_ODD_EXPONENT;
    case errc::non_positive_leading: return RELPER_ERR_NON_POSITIVE_LEADING;
    case errc::empty_potential: return RELPER_ERR_EMPTY_POTENTIAL;
    case errc::bad_m: return RELPER_ERR_BAD_M;
    case errc::negative_amplitude: return RELPER_ERR_NEGATIVE_AMPLITUDE;
    case errc::zero_amplitude: return RELPER_ERR_ZERO_AMPLITUDE;
    case errc::out_of_range: return RELPER_ERR_OUT_OF_RANGE;
    case errc::domain: return RELPER_ERR_DOMAIN;
    case errc::nonzero_remainder: return RELPER_ERR_NONZERO_REMAINDER;
    case errc::missing_lambda: return RELPER_ERR_MISSING_LAMBDA;
    case errc::mode_mismatch: return RELPER_ERR_MODE_MISMATCH;
    case errc::overflow_risk: return RELPER_ERR_OVERFLOW_RISK;
    case errc::zero_reference: return RELPER_ERR_ZERO_REFERENCE;
    case errc::quadrature_non_convergence: return RELPER_ERR_QUADRATURE_NON_CONVERGENCE;
    case errc::superluminal_state: return RELPER_ERR_SUPERLUMINAL_STATE;
    case errc::max_steps_exceeded: return RELPER_ERR_MAX_STEPS_EXCEEDED;
    case errc::io: return RELPER_ERR_IO;
  }
  return RELPER_ERR_INTERNAL;
}

template <typename Fn>
relper_status guard(Fn&& fn) {
  try {
    fn();
    return RELPER_OK;
  } catch (const relper::error& e) {
    g_last_error = e.what();
    return status_from(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return RELPER_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RELPER_ERR_INTERNAL;
  }
}

relper_status invalid(const char* what) {
  g_last_error = what;
  return RELPER_ERR_INVALID_ARGUMENT;
}

relper_status make_potential(relper_potential** out, relper::potential p) {
  *out = new relper_potential{std::move(p)};
  return RELPER_OK;
}

double closed_dispatch(const relper::potential& p, double A) {
  if (p.matches_harmonic()) return relper::period_harmonic_closed(A);
  if (p.matches_quadratic()) {
    double s = std::sqrt(2.0 * p.poly().coeff(2));
    return relper::period_harmonic_closed(A * s) / s;
  }
  int m = 0;
  if (p.matches_augmented(&m)) return relper::period_family_a(m, A);
  if (p.matches_sum(&m)) return relper::period_family_b(m, A);
  if (p.matches_pure(&m)) return relper::period_family_c(m, A);
  relper::fail(relper::errc::domain,
               "no closed form for this potential; use the pms method");
}

double elliptic_dispatch(const relper::potential& p, double A) {
  if (!p.matches_quadratic())
    relper::fail(relper::errc::domain, "the elliptic method covers quadratic potentials only");
  double s = std::sqrt(2.0 * p.poly().coeff(2));
  return relper::period_harmonic_exact(A * s) / s;
}

}  // namespace

extern "C" {

const char* relper_version(void) { return "1.0.0"; }

const char* relper_status_name(relper_status status) {
  switch (status) {
    case RELPER_OK: return "RELPER_OK";
    case RELPER_ERR_PARSE: return "RELPER_ERR_PARSE";
    case RELPER_ERR_ODD_EXPONENT: return "RELPER_ERR_ODD_EXPONENT";
    case RELPER_ERR_NON_POSITIVE_LEADING: return "RELPER_ERR_NON_POSITIVE_LEADING";
    case RELPER_ERR_EMPTY_POTENTIAL: return "RELPER_ERR_EMPTY_POTENTIAL";
    case RELPER_ERR_BAD_M: return "RELPER_ERR_BAD_M";
    case RELPER_ERR_NEGATIVE_AMPLITUDE: return "RELPER_ERR_NEGATIVE_AMPLITUDE";
    case RELPER_ERR_ZERO_AMPLITUDE: return "RELPER_ERR_ZERO_AMPLITUDE";
    case RELPER_ERR_OUT_OF_RANGE: return "RELPER_ERR_OUT_OF_RANGE";
    case RELPER_ERR_DOMAIN: return "RELPER_ERR_DOMAIN";
    case RELPER_ERR_NONZERO_REMAINDER: return "RELPER_ERR_NONZERO_REMAINDER";
    case RELPER_ERR_MISSING_LAMBDA: return "RELPER_ERR_MISSING_LAMBDA";
    case RELPER_ERR_MODE_MISMATCH: return "RELPER_ERR_MODE_MISMATCH";
    case RELPER_ERR_OVERFLOW_RISK: return "RELPER_ERR_OVERFLOW_RISK";
    case RELPER_ERR_ZERO_REFERENCE: return "RELPER_ERR_ZERO_REFERENCE";
    case RELPER_ERR_QUADRATURE_NON_CONVERGENCE:
      return "RELPER_ERR_QUADRATURE_NON_CONVERGENCE";
    case RELPER_ERR_SUPERLUMINAL_STATE: return "RELPER_ERR_SUPERLUMINAL_STATE";
    case RELPER_ERR_MAX_STEPS_EXCEEDED: return "RELPER_ERR_MAX_STEPS_EXCEEDED";
    case RELPER_ERR_IO: return "RELPER_ERR_IO";
    case RELPER_ERR_INVALID_ARGUMENT: return "RELPER_ERR_INVALID_ARGUMENT";
    case RELPER_ERR_INTERNAL: return "RELPER_ERR_INTERNAL";
  }
  return "RELPER_ERR_UNKNOWN";
}

const char* relper_last_error(void) { return g_last_error.c_str(); }

relper_status relper_potential_parse(const char* text, relper_potential** out) {
  if (!text || !out) return invalid("parse requires text and an out pointer");
  return guard([&] { make_potential(out, relper::potential::parse(text)); });
}

relper_status relper_potential_harmonic(relper_potential** out) {
  if (!out) return invalid("out pointer is null");
  return guard([&] { make_potential(out, relper::potential::harmonic()); });
}

relper_status relper_potential_augmented(int m, relper_potential** out) {
  if (!out) return invalid("out pointer is null");
  return guard([&] { make_potential(out, relper::potential::augmented(m)); });
}

relper_status relper_potential_sum(int m, relper_potential** out) {
  if (!out) return invalid("out pointer is null");
  return guard([&] { make_potential(out, relper::potential::sum_family(m)); });
}

relper_status relper_potential_pure(int m, relper_potential** out) {
  if (!out) return invalid("out pointer is null");
  return guard([&] { make_potential(out, relper::potential::pure_family(m)); });
}

relper_status relper_potential_from_coeffs(const int* exponents, const double* coeffs,
                                           size_t count, relper_potential** out) {
  if (!out || (count > 0 && (!exponents || !coeffs)))
    return invalid("from_coeffs requires exponent and coefficient arrays");
  return guard([&] {
    std::vector<std::pair<int, double>> terms;
    terms.reserve(count);
    for (size_t i = 0; i < count; ++i) terms.emplace_back(exponents[i], coeffs[i]);
    make_potential(out, relper::potential::from_coeffs(terms));
  });
}

void relper_potential_free(relper_potential* p) { delete p; }

relper_status relper_potential_family(const relper_potential* p, relper_family* out) {
  if (!p || !out) return invalid("potential or out pointer is null");
  switch (p->impl.fam()) {
    case relper::family::harmonic: *out = RELPER_FAMILY_HARMONIC; break;
    case relper::family::augmented: *out = RELPER_FAMILY_AUGMENTED; break;
    case relper::family::sum: *out = RELPER_FAMILY_SUM; break;
    case relper::family::pure: *out = RELPER_FAMILY_PURE; break;
    case relper::family::generic: *out = RELPER_FAMILY_GENERIC; break;
  }
  return RELPER_OK;
}

relper_status relper_potential_m(const relper_potential* p, int* out) {
  if (!p || !out) return invalid("potential or out pointer is null");
  *out = p->impl.m();
  return RELPER_OK;
}

relper_status relper_potential_eval(const relper_potential* p, double x, double* out) {
  if (!p || !out) return invalid("potential or out pointer is null");
  return guard([&] { *out = p->impl.poly().eval(x); });
}

relper_status relper_total_energy(const relper_potential* p, double A, double* out) {
  if (!p || !out) return invalid("potential or out pointer is null");
  return guard([&] { *out = relper::total_energy(p->impl, A); });
}

relper_status relper_velocity_at(const relper_potential* p, double A, double x, double* out) {
  if (!p || !out) return invalid("potential or out pointer is null");
  return guard([&] { *out = relper::velocity_at(p->impl, A, x); });
}

relper_status relper_max_velocity(const relper_potential* p, double A, double* out) {
  if (!p || !out) return invalid("potential or out pointer is null");
  return guard([&] { *out = relper::max_velocity(p->impl, A); });
}

relper_status relper_period_closed(const relper_potential* p, double A, double* out) {
  if (!p || !out) return invalid("potential or out pointer is null");
  return guard([&] { *out = closed_dispatch(p->impl, A); });
}

relper_status relper_period_pms(const relper_potential* p, double A, double* out) {
  if (!p || !out) return invalid("potential or out pointer is null");
  return guard([&] { *out = relper::period_pms(p->impl, A); });
}

relper_status relper_period_elliptic(const relper_potential* p, double A, double* out) {
  if (!p || !out) return invalid("potential or out pointer is null");
  return guard([&] { *out = elliptic_dispatch(p->impl, A); });
}

relper_status relper_period_quadrature(const relper_potential* p, double A, int nodes,
                                       double* out) {
  if (!p || !out) return invalid("potential or out pointer is null");
  if (nodes < 0) return invalid("node count must be >= 0");
  return guard([&] {
    relper::quadrature_config cfg = relper::default_quadrature_config();
    if (nodes > 0) cfg.nodes = nodes;
    *out = relper::period_quadrature(p->impl, A, cfg);
  });
}

relper_status relper_period_ode(const relper_potential* p, double A, double* out) {
  return relper_period_ode_ex(p, A, 0.0, 0, out, nullptr);
}

relper_status relper_period_ode_ex(const relper_potential* p, double A, double tol,
                                   long max_steps, double* period, double* energy_drift) {
  if (!p || !period) return invalid("potential or out pointer is null");
  return guard([&] {
    relper::ode_config cfg;
    if (tol > 0.0) cfg.tol = tol;
    if (max_steps > 0) cfg.max_steps = max_steps;
    *period = relper::period_ode(p->impl, A, cfg);
    if (energy_drift) *energy_drift = relper::ode_energy_drift(p->impl, A, cfg);
  });
}

relper_status relper_omega_first_order(const relper_potential* p, double A, int nodes,
                                       double* out) {
  if (!p || !out) return invalid("potential or out pointer is null");
  if (nodes < 0) return invalid("node count must be >= 0");
  return guard([&] {
    int n = nodes > 0 ? nodes : relper::default_quadrature_config().nodes;
    *out = relper::omega_first_order_pms(p->impl, A, n);
  });
}

relper_status relper_lambda_closed(int n, double* out) {
  if (!out) return invalid("out pointer is null");
  return guard([&] { *out = relper::lambda_closed(n); });
}

relper_status relper_lambda_iterative(int up_to_n, double* out) {
  if (!out) return invalid("out pointer is null");
  return guard([&] {
    std::vector<double> vals = relper::lambda_iterative(up_to_n);
    for (size_t i = 0; i < vals.size(); ++i) out[i] = vals[i];
  });
}

relper_status relper_lambda_partial_sum(int n, double* out) {
  if (!out) return invalid("out pointer is null");
  return guard([&] { *out = relper::lambda_partial_sum(n); });
}

relper_status relper_lambda_harmonic_l4(double* out) {
  if (!out) return invalid("out pointer is null");
  *out = relper::lambda_harmonic_l4();
  return RELPER_OK;
}

relper_status relper_agm_K(double m_param, double* out) {
  if (!out) return invalid("out pointer is null");
  return guard([&] { *out = relper::agm_K(m_param); });
}

relper_status relper_agm_E(double m_param, double* out) {
  if (!out) return invalid("out pointer is null");
  return guard([&] { *out = relper::agm_E(m_param); });
}

relper_status relper_period_harmonic_closed(double A, double* out) {
  if (!out) return invalid("out pointer is null");
  return guard([&] { *out = relper::period_harmonic_closed(A); });
}

relper_status relper_period_harmonic_exact(double A, double* out) {
  if (!out) return invalid("out pointer is null");
  return guard([&] { *out = relper::period_harmonic_exact(A); });
}

relper_status relper_period_family_a(int m, double A, double* out) {
  if (!out) return invalid("out pointer is null");
  return guard([&] { *out = relper::period_family_a(m, A); });
}

relper_status relper_period_family_b(int m, double A, double* out) {
  if (!out) return invalid("out pointer is null");
  return guard([&] { *out = relper::period_family_b(m, A); });
}

relper_status relper_period_family_c(int m, double A, double* out) {
  if (!out) return invalid("out pointer is null");
  return guard([&] { *out = relper::period_family_c(m, A); });
}

relper_status relper_relative_error(double approx, double reference, double* out) {
  if (!out) return invalid("out pointer is null");
  return guard([&] { *out = relper::relative_error(approx, reference); });
}

}  // extern "C"
