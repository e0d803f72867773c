#include "relper/even_poly.hpp"

#include <cmath>
#include <vector>

#include "relper/lambdas.hpp"

namespace relper {

void even_poly::add_term(int exp, double c) {
  if (exp < 0 || exp % 2 != 0)
    fail(errc::odd_exponent, "exponent " + std::to_string(exp) + " is not even and >= 0");
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

double even_poly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0.0 : it->second;
}

double even_poly::eval(double x) const {
  if (terms_.empty()) return 0.0;
  // Horner in u = x^2 over the sparse exponent gaps.
  double u = x * x;
  auto it = terms_.rbegin();
  double acc = it->second;
  int prev = it->first / 2;
  for (++it; it != terms_.rend(); ++it) {
    int k = it->first / 2;
    acc = acc * std::pow(u, prev - k) + it->second;
    prev = k;
  }
  return acc * std::pow(u, prev);
}

double even_poly::eval_deriv(double x) const {
  if (terms_.empty()) return 0.0;
  // d/dx sum c_{2k} x^{2k} = x * sum 2k c_{2k} u^{k-1}; exactly 0 at x = 0.
  if (x == 0.0) return 0.0;
  double u = x * x;
  auto it = terms_.rbegin();
  double acc = 2.0 * it->first / 2 * it->second;
  int prev = it->first / 2;
  for (++it; it != terms_.rend(); ++it) {
    int k = it->first / 2;
    acc = acc * std::pow(u, prev - k) + 2.0 * k * it->second;
    prev = k;
  }
  return x * acc * std::pow(u, prev - 1);
}

scaled_real even_poly::eval_scaled(double x) const {
  scaled_real acc;
  scaled_real u(x * x);
  for (const auto& [exp, c] : terms_)
    acc = acc + scaled_real(c) * scaled_real::pow_int(u, exp / 2);
  return acc;
}

even_poly divide_by_a2_minus_x2(const even_poly& q, double A) {
  if (q.empty()) return {};
  int n = q.degree() / 2;
  std::vector<double> t(static_cast<size_t>(n) + 1, 0.0);
  double max_c = 0.0;
  for (const auto& [exp, c] : q.terms()) {
    t[static_cast<size_t>(exp / 2)] = c;
    max_c = std::max(max_c, std::fabs(c));
  }
  // q(u) = (A^2 - u) s(u) + r in u = x^2:
  //   s_{n-1} = -t_n,  s_{j-1} = A^2 s_j - t_j,  r = t_0 - A^2 s_0.
  double a2 = A * A;
  std::vector<double> s(static_cast<size_t>(n), 0.0);
  if (n == 0) {
    if (std::fabs(t[0]) > 1e-9 * max_c)
      fail(errc::nonzero_remainder, "constant does not vanish at the amplitude");
    return {};
  }
  s[static_cast<size_t>(n - 1)] = -t[static_cast<size_t>(n)];
  for (int j = n - 1; j >= 1; --j)
    s[static_cast<size_t>(j - 1)] = a2 * s[static_cast<size_t>(j)] - t[static_cast<size_t>(j)];
  double r = t[0] - a2 * s[0];
  if (std::fabs(r) > 1e-9 * max_c)
    fail(errc::nonzero_remainder,
         "division remainder " + std::to_string(r) + " exceeds tolerance; q(A) != 0");
  even_poly out;
  for (int j = 0; j < n; ++j) out.add_term(2 * j, s[static_cast<size_t>(j)]);
  return out;
}

double lambda_substitute(const even_poly& p, double A, const lambda_table& table) {
  double acc = 0.0;
  for (const auto& [exp, c] : p.terms())
    acc += c * std::pow(A, exp) * table.value(exp / 2);
  return acc;
}

}  // namespace relper
