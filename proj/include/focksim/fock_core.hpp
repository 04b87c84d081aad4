#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "focksim/types.hpp"

namespace focksim {

// Ladder operators on span{|0>, ..., |dim-1>}:
//   a |n> = sqrt(n) |n-1>,  a^dag |n> = sqrt(n+1) |n+1>.
// The top level truncates: a^dag |dim-1> = 0.
CMatrix annihilation(int dim);
CMatrix creation(int dim);
CMatrix number_operator(int dim);  // diag(0, 1, ..., dim-1)

struct EighResult {
  Spectrum spectrum;  // decreasing
  CMatrix vectors;    // columns are orthonormal eigenvectors, same order
};

// Hermitian eigendecomposition with eigenvalues sorted decreasing.
// Ties within 1e-12 keep the solver's ordering and set
// spectrum.degenerate. Throws ContractViolation if X is not Hermitian
// within hermitian_tol.
EighResult eigh(const CMatrix& X, double hermitian_tol = tol::hermitian);

double trace_norm(const CMatrix& X);  // sum of singular values
double hs_norm(const CMatrix& X);     // Frobenius norm

// Thermal state with mean photon number nbar: p_n = (1-q) q^n,
// q = nbar/(nbar+1), normalized over the full geometric series.
// trace_deficit records the truncated tail q^dim.
DensityMatrix thermal_state(double mean_photons, int dim);

// rho = U diag(spectrum) U^dag with U Haar-distributed; the spectrum is
// drawn uniformly from the simplex when not supplied. Deterministic for
// fixed seed.
DensityMatrix random_density(int dim, std::uint64_t seed);
DensityMatrix random_density(int dim, std::uint64_t seed,
                             const std::vector<double>& spectrum);

struct DisplacementOp {
  CMatrix op;  // <m|exp(z a^dag - conj(z) a)|n> for m, n < dim
  // Per column n: 1 - sum_m |<m|D(z)|n>|^2, the probability weight the
  // exact (unitary) operator sends above the cutoff. Drives the
  // truncation estimate for characteristic-function evaluation.
  RVector column_deficit;
};

// Matrix elements of the displacement operator via the associated
// Laguerre closed form (exact projection of the infinite-dimensional
// operator onto the truncated space).
DisplacementOp displacement(Complex z, int dim);

// chi_X(z) = Tr[D(z) X]. Exact for X supported on the truncated space;
// the estimate below gauges how sensitive the value is to any tail of
// the intended state that the truncation cannot represent. Throws
// TruncationError when the estimate exceeds max_truncation_error.
Complex char_function(const CMatrix& X, Complex z,
                      double max_truncation_error = 1e-3);

double char_function_truncation_estimate(const CMatrix& X, Complex z);

}  // namespace focksim
