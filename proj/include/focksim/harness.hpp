#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "focksim/channels.hpp"
#include "focksim/types.hpp"

namespace focksim::harness {

struct CertifyConfig {
  std::vector<int> dims{2, 3, 4, 5, 6, 7, 8};
  std::vector<double> lambdas{0.2, 0.5, 0.8};
  std::vector<double> noises{0.0, 0.5, 1.0};
  int trials_per_cell = 500;
  std::uint64_t master_seed = 1;
  double slack_tol = tol::majorization_slack;  // weak sub-majorization slack
  double passivity_tol = 1e-10;
  double entropy_tol = 1e-9;
};

struct FailureRecord {
  int dim = 0;
  double lambda = 0.0;
  double noise = 0.0;
  int trial = 0;
  std::uint64_t seed = 0;  // replays this single trial in isolation
  double slack = 0.0;
  std::string kind;  // "submajorization" | "passivity" | "entropy_order"
};

struct CertificationReport {
  CertifyConfig config;
  long trials = 0;
  long failures = 0;
  double worst_slack = 0.0;        // min over trials of min partial-sum slack
  double worst_entropy_gap = 0.0;  // max of S(Phi(rho_down)) - S(Phi(rho))
  double worst_renyi2_gap = 0.0;
  double worst_offdiagonal = 0.0;  // passivity of Phi(rho_down)
  std::vector<FailureRecord> failure_records;

  bool passed() const { return failures == 0; }
};

// Row sink for optional per-trial slack streaming (CSV etc.).
using TrialSink = std::function<void(const FailureRecord& trial_result)>;

// Randomized certification that the channel output of the Fock-rearranged
// input weakly sub-majorizes the output of the original input, that the
// rearranged input's output stays passive, and that the entropy orderings
// implied by majorization hold. One trial: draw rho = U diag(p) U^dag,
// push rho and rho_down through the channel, compare output spectra.
CertificationReport certify_main_theorem(const CertifyConfig& config,
                                         const TrialSink& sink = nullptr);

std::string report_to_json(const CertificationReport& report);

struct TrajectoryChecks {
  double worst_feasibility_slack;  // max of d/dt s_n - (n+1)(s_{n+1} - s_n)
  double worst_ode_residual;       // |d/dt s_n^down - (n+1)(s^down_{n+1} - s^down_n)|
  double worst_comparison_slack;   // max of s_n - s_n^down
  double worst_trace_drift;        // max |s_{D-1}(t) - s_{D-1}(0)|
  bool feasibility_ok;
  bool ode_ok;
  bool comparison_ok;
};

struct TrajectoryRecord {
  std::vector<double> times;
  RMatrix partial_sums;          // row i = s(t_i), sorted eigenvalues
  RMatrix passive_partial_sums;  // row i = s^down(t_i), Fock-ordered diagonal
  std::vector<char> degenerate;  // spectrum tie within the gap threshold
  TrajectoryChecks checks;
};

// Evolves rho and rho_down under the attenuator semigroup on a uniform
// time grid and verifies the partial-sum trajectory bounds:
//  (i)  centered-difference d/dt s_n <= (n+1)(s_{n+1} - s_n) + feas_tol
//       at times whose stencil is free of spectrum degeneracies,
//  (ii) s^down satisfies its ODE: centered difference against the
//       Simpson average of the right-hand side over the stencil,
//  (iii) s_n(t) <= s_n^down(t) + comparison_tol everywhere (degenerate
//       times included).
TrajectoryRecord trajectory_check(const DensityMatrix& rho, double t_max,
                                  int steps, double feas_tol = 1e-6,
                                  double ode_tol = 1e-6,
                                  double comparison_tol = tol::majorization_slack,
                                  double degeneracy_gap = tol::degeneracy_gap);

// Max relative deviation between chi of the channel output and
// exp(-|lambda-1|(N+1/2)|z|^2) chi_X(sqrt(lambda) z) over the grid.
double char_function_action_check(const CMatrix& X,
                                  const GaugeCovariantParams& params,
                                  std::span<const Complex> z_grid,
                                  int output_dim = -1);

// Square grid over [-extent, extent]^2 restricted to |z| <= extent.
std::vector<Complex> disk_grid(double extent, int points_per_side);

// Max over random (X, Y) pairs of |Tr[Y Phi(X)] - Tr[Phi^dag(Y) X]|,
// both pairings computed through independent code paths.
double duality_check(int trials, int dim, double lambda, std::uint64_t seed);

}  // namespace focksim::harness
