#include "focksim/channels.hpp"

#include <cmath>

#include "focksim/fock_core.hpp"

namespace focksim {

namespace {

void require_transmissivity(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("attenuator transmissivity must be in [0, 1]");
}

// a X a^dag without forming the ladder matrices:
// (a X a^dag)(m, n) = sqrt(m+1) sqrt(n+1) X(m+1, n+1).
CMatrix lower_conjugate(const CMatrix& X) {
  const int dim = int(X.rows());
  CMatrix out = CMatrix::Zero(dim, dim);
  for (int m = 0; m + 1 < dim; ++m)
    for (int n = 0; n + 1 < dim; ++n)
      out(m, n) =
          std::sqrt(double(m + 1)) * std::sqrt(double(n + 1)) * X(m + 1, n + 1);
  return out;
}

}  // namespace

GaugeCovariantParams make_params(double lambda, double noise) {
  if (lambda < 0.0) throw std::invalid_argument("lambda must be >= 0");
  if (noise < 0.0) throw std::invalid_argument("noise must be >= 0");
  GaugeCovariantParams p;
  p.lambda = lambda;
  p.noise = noise;
  p.kappa = (lambda <= 1.0) ? 1.0 + noise * (1.0 - lambda)
                            : lambda * (noise + 1.0) - noise;
  p.eta = lambda / p.kappa;
  return p;
}

KrausSet attenuator_kraus(double lambda, int dim) {
  require_transmissivity(lambda);
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");

  KrausSet set;
  set.lambda = lambda;
  set.dim = dim;
  set.ops.reserve(dim);
  // 0^0 = 1 (std::pow convention) keeps lambda = 0 and lambda = 1 exact.
  for (int l = 0; l < dim; ++l) {
    CMatrix b = CMatrix::Zero(dim, dim);
    for (int m = 0; m + l < dim; ++m) {
      double binom = 1.0;  // binom(m+l, l) by running product
      for (int i = 1; i <= l; ++i) binom *= double(m + i) / double(i);
      b(m, m + l) = std::sqrt(binom) * std::pow(1.0 - lambda, 0.5 * l) *
                    std::pow(lambda, 0.5 * m);
    }
    set.ops.push_back(std::move(b));
  }
  return set;
}

CMatrix apply_kraus(const KrausSet& kraus, const CMatrix& X) {
  if (X.rows() != kraus.dim || X.cols() != kraus.dim)
    throw std::invalid_argument("apply_kraus: dimension mismatch");
  CMatrix out = CMatrix::Zero(kraus.dim, kraus.dim);
  for (const CMatrix& b : kraus.ops) out += b * X * b.adjoint();
  return out;
}

CMatrix apply_attenuator(const CMatrix& X, double lambda) {
  require_transmissivity(lambda);
  if (X.rows() != X.cols())
    throw std::invalid_argument("apply_attenuator: matrix not square");
  const int dim = int(X.rows());

  // diag scaling lambda^{N/2}
  RVector half_power(dim);
  for (int n = 0; n < dim; ++n) half_power(n) = std::pow(lambda, 0.5 * n);

  CMatrix out = CMatrix::Zero(dim, dim);
  CMatrix lowered = X;  // a^l X (a^dag)^l, built incrementally
  double coeff = 1.0;   // (1-lambda)^l / l!
  for (int l = 0; l < dim; ++l) {
    if (l > 0) {
      lowered = lower_conjugate(lowered);
      coeff *= (1.0 - lambda) / double(l);
    }
    for (int m = 0; m + l < dim; ++m)
      for (int n = 0; n + l < dim; ++n)
        out(m, n) += coeff * half_power(m) * half_power(n) * lowered(m, n);
  }
  return out;
}

int amplifier_output_dim(double kappa, int input_dim, int margin) {
  return int(std::ceil(kappa * input_dim)) + margin;
}

ChannelOutput apply_amplifier(const CMatrix& X, double kappa, int output_dim,
                              double deficit_bound) {
  if (kappa < 1.0) throw std::invalid_argument("amplifier gain must be >= 1");
  if (X.rows() != X.cols())
    throw std::invalid_argument("apply_amplifier: matrix not square");
  const int in_dim = int(X.rows());
  if (output_dim < in_dim)
    throw std::invalid_argument("apply_amplifier: output dim below input dim");

  CMatrix padded = CMatrix::Zero(output_dim, output_dim);
  padded.topLeftCorner(in_dim, in_dim) = X;

  // (1/kappa) sum_l B_l(1/kappa)^dag X B_l(1/kappa): each term raises the
  // photon number by l. B_l(m, m+l) = sqrt(binom(m+l,l)) (1-eta)^{l/2} eta^{m/2}
  // with eta = 1/kappa, so
  //   (B^dag X B)(m+l, n+l) = b_{l,m} b_{l,n} X(m, n).
  const double eta = 1.0 / kappa;
  RVector half_power(output_dim);
  for (int n = 0; n < output_dim; ++n) half_power(n) = std::pow(eta, 0.5 * n);

  ChannelOutput result;
  result.out = CMatrix::Zero(output_dim, output_dim);
  std::vector<double> b(output_dim);
  for (int l = 0; l < output_dim; ++l) {
    double binom = 1.0;
    const double off = std::pow(1.0 - eta, 0.5 * l);
    for (int m = 0; m + l < output_dim; ++m) {
      if (m > 0) binom *= double(m + l) / double(m);
      b[m] = std::sqrt(binom) * off * half_power(m);
    }
    for (int m = 0; m + l < output_dim; ++m)
      for (int n = 0; n + l < output_dim; ++n)
        result.out(m + l, n + l) += b[m] * b[n] * padded(m, n);
  }
  result.out /= kappa;

  // the exact amplifier is trace-preserving; whatever is missing leaked
  // above the cutoff
  result.trace_deficit = X.trace().real() - result.out.trace().real();
  if (result.trace_deficit > deficit_bound)
    throw TruncationError("apply_amplifier: trace deficit " +
                          std::to_string(result.trace_deficit) +
                          " exceeds bound; increase output_dim");
  return result;
}

ChannelOutput apply_gauge_covariant(const CMatrix& X,
                                    const GaugeCovariantParams& params,
                                    int output_dim, double deficit_bound) {
  CMatrix attenuated = apply_attenuator(X, params.eta);
  if (params.kappa == 1.0) {
    if (output_dim >= 0 && output_dim != attenuated.rows())
      throw std::invalid_argument(
          "apply_gauge_covariant: output_dim must match input when kappa=1");
    return ChannelOutput{std::move(attenuated), 0.0};
  }
  if (output_dim < 0)
    output_dim = amplifier_output_dim(params.kappa, int(X.rows()));
  return apply_amplifier(attenuated, params.kappa, output_dim, deficit_bound);
}

CMatrix lindblad_apply(const CMatrix& X) {
  if (X.rows() != X.cols())
    throw std::invalid_argument("lindblad_apply: matrix not square");
  const int dim = int(X.rows());
  CMatrix out = lower_conjugate(X);
  for (int m = 0; m < dim; ++m)
    for (int n = 0; n < dim; ++n) out(m, n) -= 0.5 * double(m + n) * X(m, n);
  return out;
}

CMatrix evolve_lindblad(const CMatrix& X, double t, double dt) {
  if (t < 0.0) throw std::invalid_argument("evolve_lindblad: t must be >= 0");
  if (dt <= 0.0) throw std::invalid_argument("evolve_lindblad: dt must be > 0");

  const int steps = int(std::ceil(t / dt - 1e-12));
  CMatrix state = X;
  double remaining = t;
  for (int i = 0; i < steps; ++i) {
    const double h = (i + 1 == steps) ? remaining : dt;
    CMatrix k1 = lindblad_apply(state);
    CMatrix k2 = lindblad_apply(state + 0.5 * h * k1);
    CMatrix k3 = lindblad_apply(state + 0.5 * h * k2);
    CMatrix k4 = lindblad_apply(state + h * k3);
    state += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    remaining -= h;
  }
  return state;
}

CMatrix dual_apply_attenuator(const CMatrix& Y, double lambda) {
  require_transmissivity(lambda);
  if (Y.rows() != Y.cols())
    throw std::invalid_argument("dual_apply_attenuator: matrix not square");
  const int dim = int(Y.rows());
  KrausSet kraus = attenuator_kraus(lambda, dim);
  CMatrix out = CMatrix::Zero(dim, dim);
  for (const CMatrix& b : kraus.ops) out += b.adjoint() * Y * b;
  return out;
}

}  // namespace focksim
