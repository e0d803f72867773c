#pragma once

#include <string>
#include <utility>
#include <vector>

#include "relper/even_poly.hpp"

namespace relper {

enum class family { harmonic, augmented, sum, pure, generic };

// Confining even polynomial potential, phi(0) = 0, positive leading
// coefficient. Units: rest mass = c = 1, so E = 1 + phi(A).
class potential {
 public:
  const even_poly& poly() const { return poly_; }
  family fam() const { return fam_; }
  int m() const { return m_; }  // half the leading exponent

  static potential harmonic();          // x^2/2
  static potential augmented(int m);    // x^2/2 + x^{2m}/2m, m >= 2
  static potential sum_family(int m);   // sum_{n=1..m} x^{2n}/2n, m >= 2
  static potential pure_family(int m);  // x^{2m}/2m, m >= 2

  // Explicit coefficient lists are always tagged generic, even when they
  // coincide with a family; dispatch that needs family semantics keys on
  // structure (see matches_* below).
  static potential from_coeffs(const std::vector<std::pair<int, double>>& coeffs);

  // Grammar: harmonic | aug:m | sum:m | pure:m | exp:coeff[,exp:coeff...]
  static potential parse(const std::string& text);

  // Structural family checks, independent of the constructor tag. Exact
  // coefficient equality on purpose: 1/(2m) written with full precision (or
  // produced by the constructors) matches, anything else is generic.
  bool matches_harmonic() const;          // {2: 1/2}
  bool matches_quadratic() const;         // single term c * x^2, any c > 0
  bool matches_augmented(int* m) const;   // {2: 1/2, 2m: 1/2m}
  bool matches_sum(int* m) const;         // {2n: 1/2n, n = 1..m}
  bool matches_pure(int* m) const;        // {2m: 1/2m}

 private:
  potential(even_poly p, family f, int m) : poly_(std::move(p)), fam_(f), m_(m) {}
  even_poly poly_;
  family fam_;
  int m_;
};

struct qs_pair {
  even_poly q;  // phi(A) - phi(x)
  even_poly s;  // q / (A^2 - x^2), degree 2m - 2
  double A;
};

double total_energy(const potential& phi, double A);

// Speed at position x, from (1 - v^2)^{-1/2} = Q + 1 with Q = phi(A) - phi(x).
// Always in [0, 1).
double velocity_at(const potential& phi, double A, double x);

// Speed at x = 0: sqrt(phi(A)(2 + phi(A))) / (1 + phi(A)); strictly
// increasing in A, maps [0, inf) onto [0, 1).
double max_velocity(const potential& phi, double A);

qs_pair make_qs_pair(const potential& phi, double A);

// Q and S at x = A cos(theta), both in scaled arithmetic and free of the
// phi(A) - phi(x) cancellation: per term, (A^{2k} - x^{2k})/(A^2 - x^2) is the
// geometric sum evaluated through expm1/log1p. Valid for any (m, A) the
// scaled range covers.
struct qs_at_angle {
  scaled_real q;
  scaled_real s;
};
qs_at_angle eval_qs_at_angle(const potential& phi, double A, double theta);

}  // namespace relper
