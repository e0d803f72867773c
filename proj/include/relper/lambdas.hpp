#pragma once

#include <vector>

namespace relper {

// Trigonometric-average stand-ins for cos^{2n}(theta), fixed by the
// ultrarelativistic boundary condition T -> 4A. Two incompatible modes exist:
// the general sequence used by every potential of half-degree m >= 2, and the
// quadratic-potential special case where the x^4 stand-in is 2/pi^2 instead.
class lambda_table {
 public:
  enum class mode { general, harmonic_special };

  explicit lambda_table(mode m) : mode_(m) {}

  mode table_mode() const { return mode_; }

  // lambda_{2n}; raises missing_lambda for indices a mode does not define
  // (harmonic_special stops at n = 2).
  double value(int n) const;

 private:
  mode mode_;
};

// General closed form: 1, 1/2, then ((pi^2-6)/(pi^2-4)) * ((pi^2-4)/pi^2)^{n-1}.
double lambda_closed(int n);

// Bootstrap from lambda_0 = 1, lambda_2 = 1/2 via
// lambda_{2m} = 1 - (4/pi^2) * sum_{n<m} lambda_{2n}. Returns
// [lambda_0 .. lambda_{2*up_to_n}]; agrees with lambda_closed to 1e-13.
std::vector<double> lambda_iterative(int up_to_n);

// sum_{j=0}^{n-1} lambda_{2j}: 1 for n = 1, else
// 3/2 + ((pi^2-6)/4)(1 - ((pi^2-4)/pi^2)^{n-2}); increases to pi^2/4.
double lambda_partial_sum(int n);

// Quadratic-potential special value 2/pi^2 (never valid in the general mode).
double lambda_harmonic_l4();

}  // namespace relper
