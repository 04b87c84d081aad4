#pragma once

#include <span>

#include "focksim/thinning.hpp"
#include "focksim/types.hpp"

namespace focksim {

// Entropies in nats. Eigenvalues are clipped to [0, 1] before the log to
// absorb -1e-10-level numerical negatives.

// -sum p ln p over the eigenvalues, 0 ln 0 = 0. Requires
// |trace + trace_deficit - 1| <= 1e-6.
double von_neumann(const DensityMatrix& rho);

// (1/(1-alpha)) ln sum p^alpha, alpha > 0, alpha != 1.
double renyi(const DensityMatrix& rho, double alpha);

// Shannon entropy of a normalized distribution (within 1e-10).
double shannon(const ClassicalDist& p);

// -sum p ln p of an arbitrary nonnegative sequence (no normalization
// check); shared by the three entropies above.
double entropy_of_weights(std::span<const double> p);

}  // namespace focksim
