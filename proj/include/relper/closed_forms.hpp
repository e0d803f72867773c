#pragma once

namespace relper {

// Complete elliptic integrals in the parameter convention (argument m = k^2).
// K by arithmetic-geometric mean iteration, E by the companion sum over the
// AGM residuals; both stop at |a_n - b_n| <= 1e-15 * a_n.
double agm_K(double m_param);  // 0 <= m_param < 1
double agm_E(double m_param);  // 0 <= m_param <= 1

// Quadratic potential x^2/2.
double period_harmonic_closed(double A);  // 4 sqrt(A^4 + (2+A^2) pi^2) / sqrt(8+A^2)
double period_harmonic_exact(double A);   // elliptic route, parameter A^2/(4+A^2)

// Closed family periods, evaluated in scaled arithmetic so that m up to 1000
// and A up to 1e3 stay in range. All require m >= 2.
double period_family_a(int m, double A);  // x^2/2 + x^{2m}/2m
double period_family_b(int m, double A);  // sum_{n=1..m} x^{2n}/2n
double period_family_c(int m, double A);  // x^{2m}/2m; diverges at A = 0

}  // namespace relper
