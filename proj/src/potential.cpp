#include "relper/potential.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>

namespace relper {

namespace {

int require_family_m(int m) {
  if (m < 2) fail(errc::bad_m, "family index m must be >= 2, got " + std::to_string(m));
  return m;
}

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    fail(errc::parse, std::string("cannot parse ") + what + " from '" + s + "'");
  return v;
}

double parse_double(const std::string& s, const char* what) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty())
    fail(errc::parse, std::string("cannot parse ") + what + " from '" + s + "'");
  return v;
}

}  // namespace

potential potential::harmonic() {
  even_poly p;
  p.add_term(2, 0.5);
  return potential(std::move(p), family::harmonic, 1);
}

potential potential::augmented(int m) {
  require_family_m(m);
  even_poly p;
  p.add_term(2, 0.5);
  p.add_term(2 * m, 1.0 / (2.0 * m));
  return potential(std::move(p), family::augmented, m);
}

potential potential::sum_family(int m) {
  require_family_m(m);
  even_poly p;
  for (int n = 1; n <= m; ++n) p.add_term(2 * n, 1.0 / (2.0 * n));
  return potential(std::move(p), family::sum, m);
}

potential potential::pure_family(int m) {
  require_family_m(m);
  even_poly p;
  p.add_term(2 * m, 1.0 / (2.0 * m));
  return potential(std::move(p), family::pure, m);
}

potential potential::from_coeffs(const std::vector<std::pair<int, double>>& coeffs) {
  even_poly p;
  for (const auto& [exp, c] : coeffs) {
    if (exp == 0) fail(errc::domain, "constant term is not allowed; phi(0) must be 0");
    p.add_term(exp, c);  // rejects odd exponents
  }
  if (p.empty()) fail(errc::empty_potential, "potential has no terms");
  if (p.terms().rbegin()->second <= 0.0)
    fail(errc::non_positive_leading, "leading coefficient must be positive");
  return potential(std::move(p), family::generic, p.degree() / 2);
}

potential potential::parse(const std::string& text) {
  std::string s = strip(text);
  if (s.empty()) fail(errc::parse, "empty potential spec");
  if (s == "harmonic") return harmonic();
  if (auto pos = s.find(':'); pos != std::string::npos && s.find(',') == std::string::npos &&
                              s.find(':', pos + 1) == std::string::npos) {
    std::string head = strip(s.substr(0, pos));
    if (head == "aug") return augmented(parse_int(strip(s.substr(pos + 1)), "family index"));
    if (head == "sum") return sum_family(parse_int(strip(s.substr(pos + 1)), "family index"));
    if (head == "pure") return pure_family(parse_int(strip(s.substr(pos + 1)), "family index"));
    // fall through: a single exp:coeff pair
  }
  std::vector<std::pair<int, double>> coeffs;
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    std::string item = strip(s.substr(start, comma == std::string::npos ? comma : comma - start));
    if (item.empty()) fail(errc::parse, "empty term in potential list");
    size_t colon = item.find(':');
    if (colon == std::string::npos)
      fail(errc::parse, "term '" + item + "' is not exponent:coefficient");
    int exp = parse_int(strip(item.substr(0, colon)), "exponent");
    double c = parse_double(strip(item.substr(colon + 1)), "coefficient");
    coeffs.emplace_back(exp, c);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return from_coeffs(coeffs);
}

bool potential::matches_harmonic() const {
  return poly_.terms().size() == 1 && poly_.coeff(2) == 0.5;
}

bool potential::matches_quadratic() const {
  return poly_.terms().size() == 1 && poly_.degree() == 2;
}

bool potential::matches_augmented(int* m_out) const {
  if (poly_.terms().size() != 2 || poly_.coeff(2) != 0.5) return false;
  int m = poly_.degree() / 2;
  if (m < 2 || poly_.coeff(2 * m) != 1.0 / (2.0 * m)) return false;
  if (m_out) *m_out = m;
  return true;
}

bool potential::matches_sum(int* m_out) const {
  int m = poly_.degree() / 2;
  if (m < 2 || poly_.terms().size() != static_cast<size_t>(m)) return false;
  for (int n = 1; n <= m; ++n)
    if (poly_.coeff(2 * n) != 1.0 / (2.0 * n)) return false;
  if (m_out) *m_out = m;
  return true;
}

bool potential::matches_pure(int* m_out) const {
  if (poly_.terms().size() != 1) return false;
  int m = poly_.degree() / 2;
  if (m < 2 || poly_.coeff(2 * m) != 1.0 / (2.0 * m)) return false;
  if (m_out) *m_out = m;
  return true;
}

double total_energy(const potential& phi, double A) {
  if (A < 0.0) fail(errc::negative_amplitude, "amplitude must be >= 0");
  return 1.0 + phi.poly().eval(A);
}

double velocity_at(const potential& phi, double A, double x) {
  if (A < 0.0) fail(errc::negative_amplitude, "amplitude must be >= 0");
  if (std::fabs(x) > A) fail(errc::out_of_range, "|x| exceeds the amplitude");
  double q = phi.poly().eval(A) - phi.poly().eval(x);
  if (q < 0.0) {
    // Rounding in phi(A) - phi(x) can leave a negative sliver near x = +-A;
    // a genuinely negative Q means the potential dips below phi(A) inside
    // the range, which the energy relation cannot represent.
    if (q < -1e-12 * std::max(1.0, std::fabs(phi.poly().eval(A))))
      fail(errc::domain, "potential exceeds phi(A) inside [-A, A]");
    q = 0.0;
  }
  if (q < 1e100) return std::sqrt(q * (q + 2.0)) / (q + 1.0);
  double t = 1.0 / (q + 1.0);
  return std::sqrt(1.0 - t * t);
}

double max_velocity(const potential& phi, double A) {
  if (A < 0.0) fail(errc::negative_amplitude, "amplitude must be >= 0");
  double p = phi.poly().eval(A);
  if (p == 0.0) return 0.0;
  double v;
  if (p < 1e100) {
    v = std::sqrt(p * (2.0 + p)) / (1.0 + p);
  } else {
    double t = std::isinf(p) ? 0.0 : 1.0 / p;
    v = std::sqrt(1.0 + 2.0 * t) / (1.0 + t);
  }
  // The exact value is provably < 1; round down when it lands on 1.0.
  return v < 1.0 ? v : std::nextafter(1.0, 0.0);
}

qs_pair make_qs_pair(const potential& phi, double A) {
  if (!(A > 0.0)) fail(errc::domain, "qs decomposition needs A > 0");
  even_poly q;
  q.add_term(0, phi.poly().eval(A));
  for (const auto& [exp, c] : phi.poly().terms()) q.add_term(exp, -c);
  even_poly s = divide_by_a2_minus_x2(q, A);
  return {std::move(q), std::move(s), A};
}

qs_at_angle eval_qs_at_angle(const potential& phi, double A, double theta) {
  double sin_t = std::sin(theta);
  double s2 = sin_t * sin_t;
  double half = std::sin(0.5 * theta);
  double ln_t = 2.0 * std::log1p(-2.0 * half * half);  // log of cos^2(theta)
  scaled_real sA(A);
  scaled_real s_acc;
  for (const auto& [exp, c] : phi.poly().terms()) {
    int k = exp / 2;
    // (A^{2k} - x^{2k})/(A^2 - x^2) at x = A cos(theta) equals
    // A^{2k-2} (1 - cos^{2k})/sin^2; the fraction is cancellation-free.
    double frac = s2 == 0.0 ? static_cast<double>(k) : -std::expm1(k * ln_t) / s2;
    s_acc = s_acc + scaled_real(c * frac) * scaled_real::pow_int(sA, 2 * k - 2);
  }
  scaled_real q = s_acc * sA * sA * scaled_real(s2);
  return {q, s_acc};
}

}  // namespace relper
