#pragma once

#include <vector>

#include "focksim/types.hpp"

namespace focksim {

// One-mode gauge-covariant Gaussian channel with transmissivity/gain
// lambda >= 0 and added noise N >= 0, realized as a quantum-limited
// amplifier (kappa) composed after a quantum-limited attenuator (eta):
//   kappa * eta == lambda,
//   lambda <= 1:  kappa = 1 + N (1 - lambda)
//   lambda >= 1:  kappa = lambda (N + 1) - N
// The formulas follow from matching the Gaussian factor
// exp(-|lambda-1|(N+1/2)|z|^2) of the characteristic-function action;
// they are cross-checked against that action numerically.
struct GaugeCovariantParams {
  double lambda = 1.0;
  double noise = 0.0;
  double eta = 1.0;    // attenuator transmissivity, in [0, 1]
  double kappa = 1.0;  // amplifier gain, >= 1
};

GaugeCovariantParams make_params(double lambda, double noise);

// Kraus set {B_l} of the quantum-limited attenuator,
//   B_l = sum_m sqrt(binom(m+l, l)) (1-lambda)^{l/2} lambda^{m/2} |m><m+l|,
// complete on the input space: sum_l B_l^dag B_l = I.
struct KrausSet {
  std::vector<CMatrix> ops;
  double lambda = 1.0;
  int dim = 0;
};

KrausSet attenuator_kraus(double lambda, int dim);

// sum_l B_l X B_l^dag
CMatrix apply_kraus(const KrausSet& kraus, const CMatrix& X);

// Quantum-limited attenuator via the explicit representation
//   Phi_lambda(X) = sum_l ((1-lambda)^l / l!)
//                   lambda^{N/2} a^l X (a^dag)^l lambda^{N/2},
// an independent code path from the Kraus set above. Trace-preserving;
// maps Fock-diagonal inputs to Fock-diagonal outputs.
CMatrix apply_attenuator(const CMatrix& X, double lambda);

// ceil(kappa * input_dim) + margin; the amplifier spreads support upward
// and needs headroom above the input block.
int amplifier_output_dim(double kappa, int input_dim, int margin = 20);

struct ChannelOutput {
  CMatrix out;
  double trace_deficit = 0.0;  // Tr X - Tr out, the weight pushed past the cutoff
};

// Quantum-limited amplifier of gain kappa >= 1, realized through the
// Hilbert-Schmidt dual of the attenuator:
//   A_kappa(X) = (1/kappa) sum_l B_l(1/kappa)^dag X B_l(1/kappa).
// Throws TruncationError when the realized trace deficit exceeds
// deficit_bound.
ChannelOutput apply_amplifier(const CMatrix& X, double kappa, int output_dim,
                              double deficit_bound = 1e-3);

// Full gauge-covariant channel: amplifier after attenuator.
// output_dim < 0 picks amplifier_output_dim(kappa, dim); when kappa == 1
// the output keeps the input dimension.
ChannelOutput apply_gauge_covariant(const CMatrix& X,
                                    const GaugeCovariantParams& params,
                                    int output_dim = -1,
                                    double deficit_bound = 1e-3);

// Attenuator generator L(X) = a X a^dag - (1/2){a^dag a, X}; exact on
// the truncated space since a only lowers photon number. Traceless.
CMatrix lindblad_apply(const CMatrix& X);

// Fixed-step RK4 integration of dX/dt = L(X); at time t the result
// matches apply_attenuator(X, e^{-t}) up to O(dt^4) global error.
CMatrix evolve_lindblad(const CMatrix& X, double t, double dt = 1e-3);

// Hilbert-Schmidt dual of the attenuator: Phi^dag(Y) = sum_l B_l^dag Y B_l.
// Unital: Phi^dag(I) = I.
CMatrix dual_apply_attenuator(const CMatrix& Y, double lambda);

}  // namespace focksim
