#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "relper/errors.hpp"

namespace relper {

// Floating value held as mantissa * e^exponent with mantissa in +-[1, e) or 0.
// Keeps quantities like A^{2m} (m up to 1000, A up to 1e3) representable; the
// exponent range of int64 is never a practical limit.
class scaled_real {
 public:
  scaled_real() = default;
  scaled_real(double v) : mant_(v) { normalize(); }  // NOLINT: implicit by design
  static scaled_real from_parts(double mantissa, std::int64_t exponent) {
    scaled_real r;
    r.mant_ = mantissa;
    r.exp_ = exponent;
    r.normalize();
    return r;
  }

  double mantissa() const { return mant_; }
  std::int64_t exponent() const { return exp_; }
  bool is_zero() const { return mant_ == 0.0; }
  bool negative() const { return mant_ < 0.0; }

  // Conversion overflows double at |exponent| ~ 709; callers that can tolerate
  // +-inf / 0 pass saturate = true, everyone else gets overflow_risk.
  double to_double(bool saturate = false) const {
    if (mant_ == 0.0) return 0.0;
    if (exp_ > 700 || exp_ < -700) {
      if (!saturate)
        fail(errc::overflow_risk, "scaled_real exponent " + std::to_string(exp_) +
                                      " outside double range");
      if (exp_ > 0) return mant_ > 0 ? std::numeric_limits<double>::infinity()
                                     : -std::numeric_limits<double>::infinity();
      return 0.0;
    }
    return mant_ * std::exp(static_cast<double>(exp_));
  }

  friend scaled_real operator*(scaled_real a, scaled_real b) {
    scaled_real r;
    r.mant_ = a.mant_ * b.mant_;
    r.exp_ = a.exp_ + b.exp_;
    r.normalize();
    return r;
  }

  friend scaled_real operator/(scaled_real a, scaled_real b) {
    scaled_real r;
    r.mant_ = a.mant_ / b.mant_;
    r.exp_ = a.exp_ - b.exp_;
    r.normalize();
    return r;
  }

  friend scaled_real operator+(scaled_real a, scaled_real b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.exp_ < b.exp_) std::swap(a, b);
    std::int64_t diff = a.exp_ - b.exp_;
    // Below e^-60 the addend is invisible next to a mantissa in [1, e).
    if (diff > 60) return a;
    scaled_real r;
    r.mant_ = a.mant_ + b.mant_ * std::exp(static_cast<double>(-diff));
    r.exp_ = a.exp_;
    r.normalize();
    return r;
  }

  friend scaled_real operator-(scaled_real a, scaled_real b) { return a + (-b); }

  scaled_real operator-() const {
    scaled_real r = *this;
    r.mant_ = -r.mant_;
    return r;
  }

  friend bool operator<(const scaled_real& a, const scaled_real& b) {
    scaled_real d = a - b;
    return d.mant_ < 0.0;
  }

  // value^n by binary exponentiation; exponent arithmetic stays exact.
  static scaled_real pow_int(scaled_real base, std::int64_t n) {
    if (n == 0) return scaled_real(1.0);
    bool inv = n < 0;
    std::uint64_t k = inv ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
    scaled_real acc(1.0);
    scaled_real sq = base;
    while (k != 0) {
      if (k & 1u) acc = acc * sq;
      sq = sq * sq;
      k >>= 1;
    }
    return inv ? scaled_real(1.0) / acc : acc;
  }

  static scaled_real sqrt(scaled_real a) {
    if (a.mant_ < 0.0) fail(errc::domain, "scaled_real sqrt of negative value");
    if (a.is_zero()) return a;
    std::int64_t r = ((a.exp_ % 2) + 2) % 2;  // non-negative parity
    scaled_real out;
    out.mant_ = std::sqrt(a.mant_ * std::exp(static_cast<double>(r)));
    out.exp_ = (a.exp_ - r) / 2;
    out.normalize();
    return out;
  }

 private:
  void normalize() {
    if (mant_ == 0.0 || std::isnan(mant_)) {
      if (std::isnan(mant_)) fail(errc::domain, "scaled_real holds NaN");
      exp_ = 0;
      return;
    }
    double am = std::fabs(mant_);
    if (am >= 1.0 && am < kE) return;
    auto shift = static_cast<std::int64_t>(std::floor(std::log(am)));
    mant_ *= std::exp(static_cast<double>(-shift));
    exp_ += shift;
    // One correction step absorbs log/exp rounding at the [1, e) edges.
    am = std::fabs(mant_);
    if (am < 1.0) {
      mant_ *= kE;
      exp_ -= 1;
    } else if (am >= kE) {
      mant_ /= kE;
      exp_ += 1;
    }
  }

  static constexpr double kE = 2.718281828459045235;

  double mant_ = 0.0;
  std::int64_t exp_ = 0;
};

}  // namespace relper
