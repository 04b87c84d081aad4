// focksim: simulate one-mode gauge-covariant Gaussian channels on a
// truncated Fock space and certify their majorization properties.
//
// Subcommands:
//   certify  randomized main-theorem certification, JSON report
//   evolve   attenuator-semigroup partial-sum trajectory, CSV
//   thin     classical thinning of a photon-number distribution, CSV
//   sweep    output entropies over a (lambda, N) grid, long-format CSV
//   params   print the (eta, kappa) decomposition for (lambda, N)

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "focksim/channels.hpp"
#include "focksim/entropy.hpp"
#include "focksim/fock_core.hpp"
#include "focksim/harness.hpp"
#include "focksim/majorization.hpp"
#include "focksim/random.hpp"
#include "focksim/thinning.hpp"

namespace {

using namespace focksim;

// 17 significant digits: doubles survive a CSV round trip bit-exactly
std::string fmt17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  const auto range_pos = text.find("..");
  if (range_pos != std::string::npos) {
    const int lo = std::stoi(text.substr(0, range_pos));
    const int hi = std::stoi(text.substr(range_pos + 2));
    if (hi < lo) throw CLI::ValidationError("range", "empty range " + text);
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw CLI::ValidationError("list", "empty list");
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  if (out.empty()) throw CLI::ValidationError("list", "empty list");
  return out;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path, std::ios::binary);  // '\n' line endings everywhere
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

// Optional JSON config mirroring the flags of the invoked subcommand;
// command-line flags win over file values.
void apply_config_defaults(CLI::App* cmd, const std::string& config_path) {
  if (config_path.empty()) return;
  std::ifstream in(config_path);
  if (!in) throw std::runtime_error("cannot read config file: " + config_path);
  nlohmann::json config = nlohmann::json::parse(in);
  for (auto& [key, value] : config.items()) {
    CLI::Option* opt = cmd->get_option_no_throw("--" + key);
    if (opt == nullptr)
      throw std::runtime_error("config key not recognized: " + key);
    if (opt->count() > 0) continue;  // flag given explicitly, flags win
    const std::string text =
        value.is_string() ? value.get<std::string>() : value.dump();
    opt->add_result(text);
    opt->run_callback();
  }
}

struct CertifyArgs {
  std::string dims = "2..8";
  std::string lambdas = "0.2,0.5,0.8";
  std::string noises = "0,0.5,1";
  int trials = 500;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  double passivity_tol = 1e-10;
  double entropy_tol = 1e-9;
  std::string out = "certify_report.json";
  std::string slacks_csv;
  std::string format = "json";
  std::string config;
};

int run_certify(const CertifyArgs& args) {
  harness::CertifyConfig config;
  config.dims = parse_int_list(args.dims);
  config.lambdas = parse_double_list(args.lambdas);
  config.noises = parse_double_list(args.noises);
  config.trials_per_cell = args.trials;
  config.master_seed = args.seed;
  config.slack_tol = args.tol;
  config.passivity_tol = args.passivity_tol;
  config.entropy_tol = args.entropy_tol;

  std::ofstream slacks;
  harness::TrialSink sink = nullptr;
  if (!args.slacks_csv.empty()) {
    slacks = open_output(args.slacks_csv);
    slacks << "dim,lambda,noise,trial,seed,slack,kind\n";
    sink = [&slacks](const harness::FailureRecord& r) {
      slacks << r.dim << ',' << fmt17(r.lambda) << ',' << fmt17(r.noise) << ','
             << r.trial << ',' << r.seed << ',' << fmt17(r.slack) << ','
             << r.kind << '\n';
    };
  }

  harness::CertificationReport report =
      harness::certify_main_theorem(config, sink);

  std::ofstream out = open_output(args.out);
  if (args.format == "json") {
    out << harness::report_to_json(report);
  } else {
    out << "trials,failures,worst_slack,worst_entropy_gap,worst_renyi2_gap,"
           "worst_offdiagonal\n";
    out << report.trials << ',' << report.failures << ','
        << fmt17(report.worst_slack) << ',' << fmt17(report.worst_entropy_gap)
        << ',' << fmt17(report.worst_renyi2_gap) << ','
        << fmt17(report.worst_offdiagonal) << '\n';
  }

  std::cout << "certify: " << report.trials << " trials, " << report.failures
            << " failures, worst slack " << fmt17(report.worst_slack) << "\n";
  if (!report.passed()) {
    for (const auto& r : report.failure_records)
      std::cout << "  FAIL dim=" << r.dim << " lambda=" << r.lambda
                << " noise=" << r.noise << " trial=" << r.trial
                << " seed=" << r.seed << " kind=" << r.kind << "\n";
    return 1;
  }
  return 0;
}

struct EvolveArgs {
  int dim = 10;
  std::string state = "fock:1";
  double t_max = 2.0;
  int steps = 2000;
  double feas_tol = 1e-6;
  double ode_tol = 1e-6;
  double cmp_tol = 1e-9;
  std::string out = "trajectory.csv";
  std::string config;
};

DensityMatrix parse_state(const std::string& spec, int dim) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg =
      colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "fock") {
    const int n = std::stoi(arg);
    if (n < 0 || n >= dim)
      throw std::runtime_error("fock level out of range for dimension");
    CMatrix m = CMatrix::Zero(dim, dim);
    m(n, n) = 1.0;
    return DensityMatrix{m, 0.0};
  }
  if (kind == "thermal") return thermal_state(std::stod(arg), dim);
  if (kind == "random") return random_density(dim, std::stoull(arg));
  throw std::runtime_error(
      "unknown state spec (use fock:N | thermal:NBAR | random:SEED): " + spec);
}

int run_evolve(const EvolveArgs& args) {
  DensityMatrix rho = parse_state(args.state, args.dim);
  harness::TrajectoryRecord record = harness::trajectory_check(
      rho, args.t_max, args.steps, args.feas_tol, args.ode_tol, args.cmp_tol);

  std::ofstream out = open_output(args.out);
  out << "t";
  for (int n = 0; n < args.dim; ++n) out << ",s_" << n;
  for (int n = 0; n < args.dim; ++n) out << ",sdown_" << n;
  out << ",degenerate\n";
  for (std::size_t i = 0; i < record.times.size(); ++i) {
    out << fmt17(record.times[i]);
    for (int n = 0; n < args.dim; ++n)
      out << ',' << fmt17(record.partial_sums(int(i), n));
    for (int n = 0; n < args.dim; ++n)
      out << ',' << fmt17(record.passive_partial_sums(int(i), n));
    out << ',' << int(record.degenerate[i]) << '\n';
  }

  const auto& checks = record.checks;
  std::cout << "evolve: feasibility "
            << (checks.feasibility_ok ? "ok" : "VIOLATED") << " (worst "
            << fmt17(checks.worst_feasibility_slack) << "), ode residual "
            << fmt17(checks.worst_ode_residual) << ", comparison "
            << (checks.comparison_ok ? "ok" : "VIOLATED") << " (worst "
            << fmt17(checks.worst_comparison_slack) << ")\n";
  return (checks.feasibility_ok && checks.ode_ok && checks.comparison_ok) ? 0
                                                                          : 1;
}

struct ThinArgs {
  std::string builtin;
  std::string input;
  int K = 0;  // 0: keep the builtin default / file length
  double lambda = 0.5;
  std::string out = "thinning.csv";
  std::string config;
};

ClassicalDist parse_builtin(const std::string& spec, int K) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg =
      colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (K <= 0) K = 32;
  ClassicalDist dist;
  dist.weights.assign(K, 0.0);
  if (kind == "delta") {
    const int n = std::stoi(arg);
    if (n < 0 || n >= K) throw std::runtime_error("delta level out of range");
    dist.weights[n] = 1.0;
    return dist;
  }
  if (kind == "poisson") {
    const double alpha = std::stod(arg);
    double v = std::exp(-alpha);
    for (int n = 0; n < K; ++n) {
      dist.weights[n] = v;
      v *= alpha / double(n + 1);
    }
    return dist;
  }
  if (kind == "geometric") {
    const double q = std::stod(arg);
    if (!(q >= 0.0 && q < 1.0))
      throw std::runtime_error("geometric ratio must be in [0, 1)");
    double v = 1.0 - q;
    for (int n = 0; n < K; ++n) {
      dist.weights[n] = v;
      v *= q;
    }
    return dist;
  }
  throw std::runtime_error(
      "unknown builtin (use delta:N | poisson:ALPHA | geometric:Q): " + spec);
}

int run_thin(const ThinArgs& args) {
  ClassicalDist input;
  if (!args.builtin.empty()) {
    input = parse_builtin(args.builtin, args.K);
  } else if (!args.input.empty()) {
    std::ifstream in(args.input);
    if (!in) throw std::runtime_error("cannot read input: " + args.input);
    double w;
    while (in >> w) input.weights.push_back(w);
    if (input.weights.empty())
      throw std::runtime_error("input file holds no weights");
    if (std::abs(input.sum() - 1.0) > 1e-8)
      throw CLI::ValidationError("input",
                                 "distribution is not normalized within 1e-8");
  } else {
    throw CLI::ValidationError("thin", "need --builtin or --input");
  }

  ClassicalDist output = thin(input, args.lambda);

  std::ofstream out = open_output(args.out);
  out << "n,input,output\n";
  for (int n = 0; n < input.size(); ++n)
    out << n << ',' << fmt17(input.weights[n]) << ','
        << fmt17(output.weights[n]) << '\n';

  nlohmann::ordered_json summary;
  summary["lambda"] = args.lambda;
  summary["sum_in"] = input.sum();
  summary["sum_out"] = output.sum();
  summary["shannon_in"] = entropy_of_weights(input.weights);
  summary["shannon_out"] = entropy_of_weights(output.weights);
  if (args.builtin.rfind("poisson:", 0) == 0) {
    // thinned Poisson(alpha) is Poisson(lambda * alpha)
    const double alpha = std::stod(args.builtin.substr(8));
    double v = std::exp(-args.lambda * alpha);
    double l1 = 0.0;
    for (int n = 0; n < output.size(); ++n) {
      l1 += std::abs(output.weights[n] - v);
      v *= args.lambda * alpha / double(n + 1);
    }
    summary["poisson_oracle_l1"] = l1;
  }
  std::cout << summary.dump(2) << "\n";
  return 0;
}

struct SweepArgs {
  int dim = 6;
  std::string lambdas = "0.2,0.5,0.8";
  std::string noises = "0,0.5,1";
  int families = 3;  // non-passive rotations per cell
  std::uint64_t seed = 1;
  double tol = 1e-9;
  std::string out = "sweep.csv";
  std::string config;
};

int run_sweep(const SweepArgs& args) {
  const std::vector<double> lambdas = parse_double_list(args.lambdas);
  const std::vector<double> noises = parse_double_list(args.noises);
  if (args.dim < 2 || args.families < 1)
    throw CLI::ValidationError("sweep", "need dim >= 2 and families >= 1");

  // one spectrum shared by every family so the rows are same-spectrum
  Rng rng(derive_seed(args.seed, 0));
  std::vector<double> spectrum = rng.simplex(args.dim);
  Spectrum sorted = decreasing_rearrangement(spectrum);
  CMatrix passive = CMatrix::Zero(args.dim, args.dim);
  for (int i = 0; i < args.dim; ++i) passive(i, i) = sorted.values[i];

  std::vector<std::pair<std::string, CMatrix>> inputs;
  inputs.emplace_back("passive", passive);
  for (int f = 1; f <= args.families; ++f) {
    CMatrix u =
        Rng(derive_seed(args.seed, std::uint64_t(f))).haar_unitary(args.dim);
    inputs.emplace_back("rotated" + std::to_string(f),
                        CMatrix(u * passive * u.adjoint()));
  }

  std::ofstream out = open_output(args.out);
  out << "lambda,noise,family,von_neumann_out,renyi2_out,ordering_ok\n";

  bool all_ok = true;
  for (double lambda : lambdas) {
    for (double noise : noises) {
      const GaugeCovariantParams params = make_params(lambda, noise);
      const int out_dim = (params.kappa > 1.0)
                              ? amplifier_output_dim(params.kappa, args.dim)
                              : args.dim;
      double passive_vn = 0.0, passive_r2 = 0.0;
      for (const auto& [family, mat] : inputs) {
        ChannelOutput y = apply_gauge_covariant(mat, params, out_dim);
        DensityMatrix rho{y.out, y.trace_deficit};
        const double vn = von_neumann(rho);
        const double r2 = renyi(rho, 2.0);
        bool ok = true;
        if (family == "passive") {
          passive_vn = vn;
          passive_r2 = r2;
        } else {
          ok = passive_vn <= vn + args.tol && passive_r2 <= r2 + args.tol;
          all_ok = all_ok && ok;
        }
        out << fmt17(lambda) << ',' << fmt17(noise) << ',' << family << ','
            << fmt17(vn) << ',' << fmt17(r2) << ',' << (ok ? 1 : 0) << '\n';
      }
    }
  }
  std::cout << "sweep: "
            << (all_ok ? "all orderings satisfied"
                       : "ORDERING VIOLATION flagged")
            << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "focksim: gauge-covariant bosonic Gaussian channels on truncated Fock "
      "spaces, with majorization certification"};
  app.require_subcommand(1);

  CertifyArgs certify;
  CLI::App* certify_cmd = app.add_subcommand(
      "certify",
      "randomized certification: the output of the Fock-rearranged input "
      "weakly sub-majorizes every same-spectrum output");
  certify_cmd->add_option("--dims", certify.dims,
                          "dimensions, e.g. 2..8 or 2,4,6");
  certify_cmd->add_option("--lambdas", certify.lambdas, "transmissivity grid");
  certify_cmd->add_option("--noises", certify.noises, "added-noise grid");
  certify_cmd->add_option("--trials", certify.trials, "trials per grid cell")
      ->check(CLI::PositiveNumber);
  certify_cmd->add_option("--seed", certify.seed, "master seed");
  certify_cmd->add_option("--tol", certify.tol, "majorization slack tolerance");
  certify_cmd->add_option("--passivity-tol", certify.passivity_tol,
                          "passivity tolerance");
  certify_cmd->add_option("--entropy-tol", certify.entropy_tol,
                          "entropy ordering tolerance");
  certify_cmd->add_option("--out", certify.out, "report path");
  certify_cmd->add_option("--slacks-csv", certify.slacks_csv,
                          "stream per-trial slacks to CSV");
  certify_cmd->add_option("--format", certify.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  certify_cmd->add_option("--config", certify.config,
                          "JSON config mirroring these flags (flags win)");

  EvolveArgs evolve;
  CLI::App* evolve_cmd = app.add_subcommand(
      "evolve",
      "partial-sum trajectory s(t), s_down(t) under the attenuator semigroup");
  evolve_cmd->add_option("--dim", evolve.dim, "truncation dimension")
      ->check(CLI::Range(2, 4096));
  evolve_cmd->add_option("--state", evolve.state,
                         "fock:N | thermal:NBAR | random:SEED");
  evolve_cmd->add_option("--tmax", evolve.t_max, "final time")
      ->check(CLI::PositiveNumber);
  evolve_cmd->add_option("--steps", evolve.steps, "RK4 grid steps")
      ->check(CLI::Range(2, 10000000));
  evolve_cmd->add_option("--feas-tol", evolve.feas_tol,
                         "feasibility tolerance for the differential "
                         "inequality");
  evolve_cmd->add_option("--ode-tol", evolve.ode_tol, "ODE residual tolerance");
  evolve_cmd->add_option("--cmp-tol", evolve.cmp_tol,
                         "s <= s_down comparison tolerance");
  evolve_cmd->add_option("--out", evolve.out, "trajectory CSV path");
  evolve_cmd->add_option("--config", evolve.config,
                         "JSON config mirroring these flags (flags win)");

  ThinArgs thin_args;
  CLI::App* thin_cmd = app.add_subcommand(
      "thin", "apply the thinning channel to a photon-number distribution");
  thin_cmd->add_option("--builtin", thin_args.builtin,
                       "delta:N | poisson:ALPHA | geometric:Q");
  thin_cmd->add_option("--input", thin_args.input,
                       "file of whitespace-separated weights");
  thin_cmd->add_option("--K", thin_args.K, "distribution length for builtins");
  thin_cmd->add_option("--lambda", thin_args.lambda, "survival probability")
      ->check(CLI::Range(0.0, 1.0));
  thin_cmd->add_option("--out", thin_args.out, "table CSV path");
  thin_cmd->add_option("--config", thin_args.config,
                       "JSON config mirroring these flags (flags win)");

  SweepArgs sweep;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep",
      "output entropies for passive vs rotated same-spectrum inputs over a "
      "(lambda, N) grid");
  sweep_cmd->add_option("--dim", sweep.dim, "truncation dimension");
  sweep_cmd->add_option("--lambdas", sweep.lambdas, "transmissivity grid");
  sweep_cmd->add_option("--noises", sweep.noises, "added-noise grid");
  sweep_cmd->add_option("--families", sweep.families,
                        "number of rotated families");
  sweep_cmd->add_option("--seed", sweep.seed, "spectrum/rotation seed");
  sweep_cmd->add_option("--tol", sweep.tol, "entropy ordering tolerance");
  sweep_cmd->add_option("--out", sweep.out, "long-format CSV path");
  sweep_cmd->add_option("--config", sweep.config,
                        "JSON config mirroring these flags (flags win)");

  double params_lambda = 1.0, params_noise = 0.0;
  CLI::App* params_cmd = app.add_subcommand(
      "params", "print the amplifier/attenuator decomposition of (lambda, N)");
  params_cmd->add_option("--lambda", params_lambda, "transmissivity/gain")
      ->required();
  params_cmd->add_option("--noise", params_noise, "added noise N");

  try {
    app.parse(argc, argv);
    if (certify_cmd->parsed()) {
      apply_config_defaults(certify_cmd, certify.config);
      return run_certify(certify);
    }
    if (evolve_cmd->parsed()) {
      apply_config_defaults(evolve_cmd, evolve.config);
      return run_evolve(evolve);
    }
    if (thin_cmd->parsed()) {
      apply_config_defaults(thin_cmd, thin_args.config);
      return run_thin(thin_args);
    }
    if (sweep_cmd->parsed()) {
      apply_config_defaults(sweep_cmd, sweep.config);
      return run_sweep(sweep);
    }
    if (params_cmd->parsed()) {
      GaugeCovariantParams p = make_params(params_lambda, params_noise);
      nlohmann::ordered_json j;
      j["lambda"] = p.lambda;
      j["noise"] = p.noise;
      j["eta"] = p.eta;
      j["kappa"] = p.kappa;
      std::cout << j.dump(2) << "\n";
      return 0;
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage error
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
