#include "focksim/harness.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "focksim/entropy.hpp"
#include "focksim/fock_core.hpp"
#include "focksim/majorization.hpp"
#include "focksim/random.hpp"

namespace focksim::harness {

namespace {

double renyi2_of(const std::vector<double>& spectrum) {
  double total = 0.0;
  for (double v : spectrum) {
    const double w = std::clamp(v, 0.0, 1.0);
    total += w * w;
  }
  return -std::log(total);
}

}  // namespace

CertificationReport certify_main_theorem(const CertifyConfig& config,
                                         const TrialSink& sink) {
  if (config.dims.empty() || config.lambdas.empty() || config.noises.empty())
    throw std::invalid_argument("certify_main_theorem: empty grid");
  if (config.trials_per_cell < 1)
    throw std::invalid_argument("certify_main_theorem: trials must be >= 1");

  CertificationReport report;
  report.config = config;
  report.worst_slack = std::numeric_limits<double>::infinity();
  report.worst_entropy_gap = -std::numeric_limits<double>::infinity();
  report.worst_renyi2_gap = -std::numeric_limits<double>::infinity();

  std::uint64_t cell = 0;
  for (int dim : config.dims) {
    for (double lambda : config.lambdas) {
      for (double noise : config.noises) {
        const GaugeCovariantParams params = make_params(lambda, noise);
        const int out_dim = (params.kappa > 1.0)
                                ? amplifier_output_dim(params.kappa, dim)
                                : dim;
        for (int trial = 0; trial < config.trials_per_cell; ++trial) {
          const std::uint64_t seed =
              derive_seed(config.master_seed, cell, std::uint64_t(trial));
          const DensityMatrix rho = random_density(dim, seed);
          const CMatrix rho_down = fock_rearrangement(rho.mat);

          const ChannelOutput out =
              apply_gauge_covariant(rho.mat, params, out_dim);
          const ChannelOutput out_down =
              apply_gauge_covariant(rho_down, params, out_dim);

          const Spectrum spec = eigh(out.out).spectrum;
          const Spectrum spec_down = eigh(out_down.out).spectrum;

          const MajorizationReport cmp =
              submajorizes_weakly(spec_down, spec, config.slack_tol);
          const double slack = cmp.min_slack();

          double offdiag = 0.0;
          for (int m = 0; m < out_down.out.rows(); ++m)
            for (int n = 0; n < out_down.out.cols(); ++n)
              if (m != n)
                offdiag = std::max(offdiag, std::abs(out_down.out(m, n)));
          const bool passive =
              is_passive(out_down.out, config.passivity_tol);

          const double vn_gap = entropy_of_weights(spec_down.values) -
                                entropy_of_weights(spec.values);
          const double r2_gap =
              renyi2_of(spec_down.values) - renyi2_of(spec.values);

          report.trials += 1;
          report.worst_slack = std::min(report.worst_slack, slack);
          report.worst_entropy_gap =
              std::max(report.worst_entropy_gap, vn_gap);
          report.worst_renyi2_gap = std::max(report.worst_renyi2_gap, r2_gap);
          report.worst_offdiagonal =
              std::max(report.worst_offdiagonal, offdiag);

          FailureRecord record{dim, lambda, noise, trial, seed, slack, ""};
          if (!cmp.weakly_submajorized) {
            record.kind = "submajorization";
          } else if (!passive) {
            record.kind = "passivity";
          } else if (vn_gap > config.entropy_tol ||
                     r2_gap > config.entropy_tol) {
            record.kind = "entropy_order";
          }
          if (!record.kind.empty()) {
            report.failures += 1;
            report.failure_records.push_back(record);
          }
          if (sink) sink(record);
        }
        ++cell;
      }
    }
  }
  return report;
}

std::string report_to_json(const CertificationReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = "main_theorem_certification";
  j["config"] = {
      {"dims", report.config.dims},
      {"lambdas", report.config.lambdas},
      {"noises", report.config.noises},
      {"trials_per_cell", report.config.trials_per_cell},
      {"master_seed", report.config.master_seed},
      {"slack_tol", report.config.slack_tol},
      {"passivity_tol", report.config.passivity_tol},
      {"entropy_tol", report.config.entropy_tol},
  };
  j["trials"] = report.trials;
  j["failures"] = report.failures;
  j["worst_slack"] = report.worst_slack;
  j["worst_entropy_gap"] = report.worst_entropy_gap;
  j["worst_renyi2_gap"] = report.worst_renyi2_gap;
  j["worst_offdiagonal"] = report.worst_offdiagonal;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const FailureRecord& r : report.failure_records) {
    records.push_back({{"dim", r.dim},
                       {"lambda", r.lambda},
                       {"noise", r.noise},
                       {"trial", r.trial},
                       {"seed", r.seed},
                       {"slack", r.slack},
                       {"kind", r.kind}});
  }
  j["failure_records"] = records;
  return j.dump(2) + "\n";
}

TrajectoryRecord trajectory_check(const DensityMatrix& rho, double t_max,
                                  int steps, double feas_tol, double ode_tol,
                                  double comparison_tol,
                                  double degeneracy_gap) {
  if (steps < 2) throw std::invalid_argument("trajectory_check: steps < 2");
  if (t_max <= 0.0)
    throw std::invalid_argument("trajectory_check: t_max must be > 0");

  const int dim = rho.dim();
  const double h = t_max / steps;

  TrajectoryRecord record;
  record.times.resize(steps + 1);
  record.partial_sums.resize(steps + 1, dim);
  record.passive_partial_sums.resize(steps + 1, dim);
  record.degenerate.assign(steps + 1, 0);

  CMatrix state = rho.mat;
  CMatrix state_down = fock_rearrangement(rho.mat);

  auto rk4_step = [h](CMatrix& x) {
    CMatrix k1 = lindblad_apply(x);
    CMatrix k2 = lindblad_apply(x + (0.5 * h) * k1);
    CMatrix k3 = lindblad_apply(x + (0.5 * h) * k2);
    CMatrix k4 = lindblad_apply(x + h * k3);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  };

  for (int i = 0; i <= steps; ++i) {
    if (i > 0) {
      rk4_step(state);
      rk4_step(state_down);
    }
    record.times[i] = i * h;

    const Spectrum spec = eigh(state).spectrum;
    double acc = 0.0;
    double min_gap = std::numeric_limits<double>::infinity();
    for (int n = 0; n < dim; ++n) {
      acc += spec.values[n];
      record.partial_sums(i, n) = acc;
      if (n + 1 < dim)
        min_gap = std::min(min_gap, spec.values[n] - spec.values[n + 1]);
    }
    record.degenerate[i] = (dim > 1 && min_gap < degeneracy_gap) ? 1 : 0;

    // e^{tL}(rho_down) stays diagonal; its Fock-ordered diagonal entries
    // are the eigenvalues of the rearranged trajectory
    acc = 0.0;
    for (int n = 0; n < dim; ++n) {
      acc += state_down(n, n).real();
      record.passive_partial_sums(i, n) = acc;
    }
  }

  TrajectoryChecks checks{};
  checks.worst_feasibility_slack = -std::numeric_limits<double>::infinity();
  checks.worst_ode_residual = 0.0;
  checks.worst_comparison_slack = -std::numeric_limits<double>::infinity();
  checks.worst_trace_drift = 0.0;

  const auto& s = record.partial_sums;
  const auto& sd = record.passive_partial_sums;

  for (int i = 0; i <= steps; ++i) {
    // (iii) comparison holds at every time, degenerate or not
    for (int n = 0; n < dim; ++n)
      checks.worst_comparison_slack =
          std::max(checks.worst_comparison_slack, s(i, n) - sd(i, n));
    checks.worst_trace_drift = std::max(
        checks.worst_trace_drift, std::abs(s(i, dim - 1) - s(0, dim - 1)));
  }

  for (int i = 1; i < steps; ++i) {
    // (i) differential inequality, skipped when the centered stencil
    // touches a degenerate spectrum
    const bool clean = !record.degenerate[i - 1] && !record.degenerate[i] &&
                       !record.degenerate[i + 1];
    for (int n = 0; n + 1 < dim; ++n) {
      if (clean) {
        const double fd = (s(i + 1, n) - s(i - 1, n)) / (2.0 * h);
        const double rhs = (n + 1) * (s(i, n + 1) - s(i, n));
        checks.worst_feasibility_slack =
            std::max(checks.worst_feasibility_slack, fd - rhs);
      }
      // (ii) exact ODE for the rearranged trajectory; the Simpson average
      // of the right-hand side over the stencil matches the centered
      // difference to O(dt^4)
      const double fd_down = (sd(i + 1, n) - sd(i - 1, n)) / (2.0 * h);
      const double rhs_simpson =
          (n + 1) *
          ((sd(i - 1, n + 1) - sd(i - 1, n)) +
           4.0 * (sd(i, n + 1) - sd(i, n)) +
           (sd(i + 1, n + 1) - sd(i + 1, n))) /
          6.0;
      checks.worst_ode_residual = std::max(
          checks.worst_ode_residual, std::abs(fd_down - rhs_simpson));
    }
  }

  checks.feasibility_ok = checks.worst_feasibility_slack <= feas_tol;
  checks.ode_ok = checks.worst_ode_residual <= ode_tol;
  checks.comparison_ok = checks.worst_comparison_slack <= comparison_tol;
  record.checks = checks;
  return record;
}

std::vector<Complex> disk_grid(double extent, int points_per_side) {
  std::vector<Complex> grid;
  for (int i = 0; i < points_per_side; ++i) {
    for (int j = 0; j < points_per_side; ++j) {
      const double x =
          -extent + 2.0 * extent * i / double(points_per_side - 1);
      const double y =
          -extent + 2.0 * extent * j / double(points_per_side - 1);
      const Complex z(x, y);
      if (std::abs(z) <= extent + 1e-12) grid.push_back(z);
    }
  }
  return grid;
}

double char_function_action_check(const CMatrix& X,
                                  const GaugeCovariantParams& params,
                                  std::span<const Complex> z_grid,
                                  int output_dim) {
  const ChannelOutput out = apply_gauge_covariant(X, params, output_dim);
  const double gauss_coeff =
      std::abs(params.lambda - 1.0) * (params.noise + 0.5);
  const double sqrt_lambda = std::sqrt(params.lambda);

  double worst = 0.0;
  for (Complex z : z_grid) {
    const Complex lhs = char_function(out.out, z);
    const Complex rhs = std::exp(-gauss_coeff * std::norm(z)) *
                        char_function(X, sqrt_lambda * z);
    const double denom = std::max(std::abs(rhs), 1e-12);
    worst = std::max(worst, std::abs(lhs - rhs) / denom);
  }
  return worst;
}

double duality_check(int trials, int dim, double lambda, std::uint64_t seed) {
  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const DensityMatrix x =
        random_density(dim, derive_seed(seed, 2 * trial, 0));
    Rng rng(derive_seed(seed, 2 * trial + 1, 1));
    CMatrix y = rng.ginibre(dim);
    y = 0.5 * (y + y.adjoint().eval());

    // left pairing through the explicit attenuator representation, right
    // pairing through the Kraus-conjugate dual
    const Complex left = (y * apply_attenuator(x.mat, lambda)).trace();
    const Complex right = (dual_apply_attenuator(y, lambda) * x.mat).trace();
    worst = std::max(worst, std::abs(left - right));
  }
  return worst;
}

}  // namespace focksim::harness
