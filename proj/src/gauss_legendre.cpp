#include "relper/gauss_legendre.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "relper/errors.hpp"

namespace relper {

namespace {

// Legendre P_n and its derivative at x via the three-term recurrence.
void legendre_pair(int n, double x, double* pn, double* dpn) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  *pn = p1;
  *dpn = n * (x * p1 - p0) / (x * x - 1.0);
}

std::unique_ptr<gl_rule> build_rule(int n) {
  auto rule = std::make_unique<gl_rule>();
  rule->x.assign(n, 0.0);
  rule->w.assign(n, 0.0);
  int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi-style initial guess for the i-th root in descending order.
    double x = std::cos(std::numbers::pi * (4.0 * i + 3.0) / (4.0 * n + 2.0));
    double pn = 0.0, dpn = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre_pair(n, x, &pn, &dpn);
      double dx = pn / dpn;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * (1.0 + std::abs(x))) break;
    }
    legendre_pair(n, x, &pn, &dpn);
    double w = 2.0 / ((1.0 - x * x) * dpn * dpn);
    rule->x[i] = x;
    rule->w[i] = w;
    rule->x[n - 1 - i] = -x;
    rule->w[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    rule->x[n / 2] = 0.0;
    double pn, dpn;
    legendre_pair(n, 0.0, &pn, &dpn);
    rule->w[n / 2] = 2.0 / (dpn * dpn);
  }
  return rule;
}

}  // namespace

const gl_rule& gauss_legendre(int n) {
  if (n < 1) fail(errc::domain, "quadrature rule needs at least one node");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<gl_rule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = build_rule(n);
  return *slot;
}

}  // namespace relper
