#include "focksim/thinning.hpp"

#include <cmath>
#include <numeric>

#include "focksim/channels.hpp"

namespace focksim {

double ClassicalDist::sum() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

ThinningKernel thinning_kernel(double lambda, int K) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("thinning parameter must be in [0, 1]");
  if (K < 1) throw std::invalid_argument("kernel size must be >= 1");

  ThinningKernel kernel;
  kernel.lambda = lambda;
  kernel.matrix = RMatrix::Zero(K, K);

  if (lambda == 1.0) {
    kernel.matrix.setIdentity();
    return kernel;
  }
  if (lambda == 0.0) {
    kernel.matrix.row(0).setOnes();
    return kernel;
  }

  // Column k is Binomial(k, lambda). Built upward from r_{0|k} with the
  // ratio recurrence r_{n|k} = r_{n-1|k} (k-n+1)/n * lambda/(1-lambda);
  // extended precision keeps (1-lambda)^k alive for large k, and the
  // column is renormalized so its sum is exactly one.
  const long double ratio = (long double)lambda / (1.0L - (long double)lambda);
  std::vector<long double> column;
  for (int k = 0; k < K; ++k) {
    column.assign(k + 1, 0.0L);
    column[0] = std::pow(1.0L - (long double)lambda, (long double)k);
    for (int n = 1; n <= k; ++n)
      column[n] = column[n - 1] * (long double)(k - n + 1) / (long double)n *
                  ratio;
    long double total = 0.0L;
    for (long double v : column) total += v;
    for (int n = 0; n <= k; ++n)
      kernel.matrix(n, k) = double(column[n] / total);
  }
  return kernel;
}

ClassicalDist thin(const ClassicalDist& p, double lambda) {
  for (double w : p.weights)
    if (!(w >= 0.0) || !std::isfinite(w))
      throw ContractViolation("thin: weights must be finite and nonnegative");
  const int K = p.size();
  if (K == 0) return {};

  ThinningKernel kernel = thinning_kernel(lambda, K);
  ClassicalDist out;
  out.weights.assign(K, 0.0);
  for (int k = 0; k < K; ++k) {
    const double pk = p.weights[k];
    if (pk == 0.0) continue;
    for (int n = 0; n <= k; ++n) out.weights[n] += kernel.matrix(n, k) * pk;
  }
  return out;
}

double attenuator_equivalence_check(const ClassicalDist& p, double lambda,
                                    int dim) {
  const int K = p.size();
  if (dim < K)
    throw std::invalid_argument(
        "attenuator_equivalence_check: dim must cover the distribution");

  CMatrix diag = CMatrix::Zero(dim, dim);
  for (int n = 0; n < K; ++n) diag(n, n) = p.weights[n];
  CMatrix out = apply_attenuator(diag, lambda);

  ClassicalDist thinned = thin(p, lambda);
  double worst = 0.0;
  for (int n = 0; n < dim; ++n) {
    const double classical = (n < K) ? thinned.weights[n] : 0.0;
    worst = std::max(worst, std::abs(out(n, n).real() - classical));
  }
  return worst;
}

}  // namespace focksim
