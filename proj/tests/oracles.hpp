#pragma once

// Test-only reference implementations, kept independent of the library
// code paths they are used to check.

#include <cmath>
#include <vector>

#include "focksim/fock_core.hpp"
#include "focksim/types.hpp"

namespace oracles {

using focksim::CMatrix;
using focksim::Complex;

// Matrix exponential by scaling-and-squaring with a plain Taylor series.
// Good to ~1e-13 for the anti-Hermitian generators used here.
inline CMatrix expm_taylor(const CMatrix& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  const int dim = int(a.rows());
  CMatrix scaled = scale * a;
  CMatrix term = CMatrix::Identity(dim, dim);
  CMatrix sum = term;
  for (int k = 1; k <= 24; ++k) {
    term = (term * scaled) / double(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

// exp(z a^dag - conj(z) a) computed on a larger space and cut back, i.e.
// the projection of the exact displacement operator.
inline CMatrix displacement_series(Complex z, int dim, int big_dim) {
  CMatrix a = focksim::annihilation(big_dim);
  CMatrix gen = z * a.adjoint() - std::conj(z) * a;
  CMatrix d = expm_taylor(gen);
  return d.topLeftCorner(dim, dim);
}

inline std::vector<double> poisson_weights(double alpha, int K) {
  std::vector<double> p(K);
  double v = std::exp(-alpha);
  for (int n = 0; n < K; ++n) {
    p[n] = v;
    v *= alpha / double(n + 1);
  }
  return p;
}

inline double trace_distance(const CMatrix& a, const CMatrix& b) {
  return 0.5 * focksim::trace_norm(a - b);
}

}  // namespace oracles
