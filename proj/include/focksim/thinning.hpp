#pragma once

#include <vector>

#include "focksim/types.hpp"

namespace focksim {

// Finite photon-number distribution (nonnegative weights, index = n).
struct ClassicalDist {
  std::vector<double> weights;

  int size() const { return static_cast<int>(weights.size()); }
  double sum() const;
};

// Transition probabilities of the thinning channel,
//   r_{n|k} = binom(k, n) lambda^n (1-lambda)^{k-n},  zero for n > k.
// Columns sum to one. Entries come from a running-product recurrence
// along each column (no factorials), so K up to ~500 stays finite.
struct ThinningKernel {
  double lambda = 1.0;
  RMatrix matrix;  // matrix(n, k) = r_{n|k}, K x K
};

ThinningKernel thinning_kernel(double lambda, int K);

// [T_lambda(p)]_n = sum_k r_{n|k} p_k. Sum-preserving; output length
// equals input length (thinning never raises photon number).
ClassicalDist thin(const ClassicalDist& p, double lambda);

// Builds diag(p) on `dim` levels, pushes it through the quantum
// attenuator, and returns max_n |diagonal_n - [T_lambda(p)]_n| -- the
// two sides of the attenuator/thinning equivalence computed through
// independent code paths.
double attenuator_equivalence_check(const ClassicalDist& p, double lambda,
                                    int dim);

}  // namespace focksim
