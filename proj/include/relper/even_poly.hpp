#pragma once

#include <map>

#include "relper/scaled_real.hpp"

namespace relper {

class lambda_table;

// Even polynomial, stored sparsely as {even exponent -> coefficient}.
// Canonical: no zero coefficients are kept; the zero polynomial stores nothing.
class even_poly {
 public:
  even_poly() = default;

  // Adds c * x^exp into the polynomial. exp must be even and >= 0.
  void add_term(int exp, double c);

  const std::map<int, double>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  double coeff(int exp) const;

  double eval(double x) const;
  double eval_deriv(double x) const;
  // Term-wise evaluation in scaled arithmetic; safe where eval would overflow.
  scaled_real eval_scaled(double x) const;

  friend bool operator==(const even_poly&, const even_poly&) = default;

 private:
  std::map<int, double> terms_;
};

// Quotient S with q = (A^2 - x^2) * S, computed by synthetic division in
// u = x^2. q must vanish at x = +-A: the division remainder is checked
// against 1e-9 of the largest |coefficient| and nonzero_remainder is raised
// beyond that.
even_poly divide_by_a2_minus_x2(const even_poly& q, double A);

// Replaces each x^{2k} by A^{2k} * lambda_{2k} and returns the resulting
// scalar. Raises missing_lambda if the table has no value for some exponent.
double lambda_substitute(const even_poly& p, double A, const lambda_table& table);

}  // namespace relper
