#pragma once

#include <span>

#include "focksim/types.hpp"

namespace focksim {

// Partial-sum comparison of two decreasing sequences. x weakly
// sub-majorizes y when every partial sum of x dominates the matching
// partial sum of y:  slack_n = sum_{i<=n} x_i - sum_{i<=n} y_i >= 0.
// The shorter sequence is zero-padded.
struct MajorizationReport {
  std::vector<double> partial_sums_x;
  std::vector<double> partial_sums_y;
  std::vector<double> slacks;  // partial_sums_x - partial_sums_y
  bool weakly_submajorized = false;
  bool majorized = false;  // weak sub-majorization + equal totals
  double tolerance = 0.0;

  double min_slack() const;
};

Spectrum decreasing_rearrangement(std::span<const double> xs);

MajorizationReport submajorizes_weakly(const Spectrum& x, const Spectrum& y,
                                       double tolerance = tol::majorization_slack);

// X_down = sum_n x_n |n><n| with x_n the decreasing eigenvalues of X.
// Idempotent, trace-preserving, and a contraction in Hilbert-Schmidt
// norm. Throws ContractViolation for non-PSD input (beyond psd_tol).
CMatrix fock_rearrangement(const CMatrix& X, double psd_tol = -tol::positivity);

// Passive == equal to its own Fock rearrangement: diagonal in the Fock
// basis with non-increasing diagonal.
bool is_passive(const CMatrix& X, double tolerance = 1e-10);

// Ky Fan maximum principle: Tr[P X] <= sum of the top rank(P)
// eigenvalues of X, for any projector P. Throws ContractViolation if P
// is not a projector (P^2 = P = P^dag) within projector_tol.
bool ky_fan_check(const CMatrix& X, const CMatrix& P, double tolerance,
                  double projector_tol = 1e-10);

// Projector onto the first `rank` Fock states.
CMatrix passive_projector(int rank, int dim);

int projector_rank(const CMatrix& P);

}  // namespace focksim
