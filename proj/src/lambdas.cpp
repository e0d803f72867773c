#include "relper/lambdas.hpp"

#include <cmath>
#include <numbers>

#include "relper/errors.hpp"

namespace relper {

namespace {
constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
}

double lambda_closed(int n) {
  if (n < 0) fail(errc::domain, "lambda index must be >= 0");
  if (n == 0) return 1.0;
  if (n == 1) return 0.5;
  // The closed form is valid from n = 2 only; at n = 1 it would give
  // (pi^2-6)/(pi^2-4) ~ 0.659, not the defining 1/2.
  return (kPi2 - 6.0) / (kPi2 - 4.0) * std::pow((kPi2 - 4.0) / kPi2, n - 1);
}

std::vector<double> lambda_iterative(int up_to_n) {
  if (up_to_n < 2) fail(errc::domain, "lambda_iterative needs up_to_n >= 2");
  std::vector<double> vals = {1.0, 0.5};
  vals.reserve(static_cast<size_t>(up_to_n) + 1);
  double run = 1.5;  // sum of all entries so far
  for (int m = 2; m <= up_to_n; ++m) {
    double next = 1.0 - 4.0 / kPi2 * run;
    vals.push_back(next);
    run += next;
  }
  return vals;
}

double lambda_partial_sum(int n) {
  if (n < 1) fail(errc::domain, "lambda_partial_sum needs n >= 1");
  if (n == 1) return 1.0;
  return 1.5 + (kPi2 - 6.0) / 4.0 * (1.0 - std::pow((kPi2 - 4.0) / kPi2, n - 2));
}

double lambda_harmonic_l4() { return 2.0 / kPi2; }

double lambda_table::value(int n) const {
  if (n < 0) fail(errc::missing_lambda, "negative lambda index");
  if (mode_ == mode::general) return lambda_closed(n);
  switch (n) {
    case 0: return 1.0;
    case 1: return 0.5;
    case 2: return lambda_harmonic_l4();
    default:
      fail(errc::missing_lambda,
           "harmonic-special table defines no lambda for exponent " + std::to_string(2 * n));
  }
}

}  // namespace relper
