#pragma once

#include <vector>

namespace relper {

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct gl_rule {
  std::vector<double> x;
  std::vector<double> w;
};

// Rules are computed once (Newton on the Legendre recurrence) and cached;
// the cache is guarded by a mutex and the returned reference never moves.
const gl_rule& gauss_legendre(int n);

}  // namespace relper
