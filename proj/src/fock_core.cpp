#include "focksim/fock_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "focksim/random.hpp"

namespace focksim {

namespace {
void require_dim(int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
}
}  // namespace

double Spectrum::sum() const {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

bool Spectrum::is_decreasing(double tolerance) const {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[i - 1] + tolerance) return false;
  return true;
}

bool is_finite(const CMatrix& X) {
  return X.allFinite();
}

double hermiticity_defect(const CMatrix& X) {
  return (X - X.adjoint()).cwiseAbs().maxCoeff();
}

void require_hermitian(const CMatrix& X, double tolerance, const char* who) {
  if (X.rows() != X.cols())
    throw ContractViolation(std::string(who) + " is not square");
  if (hermiticity_defect(X) > tolerance)
    throw ContractViolation(std::string(who) +
                            " is not Hermitian within tolerance");
}

CMatrix annihilation(int dim) {
  require_dim(dim);
  CMatrix a = CMatrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

CMatrix creation(int dim) {
  require_dim(dim);
  CMatrix ad = CMatrix::Zero(dim, dim);
  for (int n = 0; n + 1 < dim; ++n) ad(n + 1, n) = std::sqrt(double(n + 1));
  return ad;
}

CMatrix number_operator(int dim) {
  require_dim(dim);
  CMatrix n = CMatrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) n(k, k) = double(k);
  return n;
}

EighResult eigh(const CMatrix& X, double hermitian_tol) {
  require_hermitian(X, hermitian_tol, "eigh input");
  CMatrix sym = 0.5 * (X + X.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed to converge");

  const int dim = int(sym.rows());
  EighResult result;
  result.spectrum.values.resize(dim);
  result.vectors.resize(dim, dim);
  // Eigen sorts increasing; flip to decreasing, keeping eigenvector order.
  for (int i = 0; i < dim; ++i) {
    result.spectrum.values[i] = solver.eigenvalues()(dim - 1 - i);
    result.vectors.col(i) = solver.eigenvectors().col(dim - 1 - i);
  }
  for (int i = 0; i + 1 < dim; ++i) {
    if (result.spectrum.values[i] - result.spectrum.values[i + 1] < 1e-12) {
      result.spectrum.degenerate = true;
      break;
    }
  }
  return result;
}

double trace_norm(const CMatrix& X) {
  if (!is_finite(X)) throw ContractViolation("trace_norm: non-finite entries");
  Eigen::JacobiSVD<CMatrix> svd(X);
  return svd.singularValues().sum();
}

double hs_norm(const CMatrix& X) {
  if (!is_finite(X)) throw ContractViolation("hs_norm: non-finite entries");
  return X.norm();
}

DensityMatrix thermal_state(double mean_photons, int dim) {
  require_dim(dim);
  if (mean_photons < 0.0)
    throw std::invalid_argument("thermal_state: mean photon number < 0");

  DensityMatrix rho;
  rho.mat = CMatrix::Zero(dim, dim);
  if (mean_photons == 0.0) {
    rho.mat(0, 0) = 1.0;
    rho.trace_deficit = 0.0;
    return rho;
  }
  const double q = mean_photons / (mean_photons + 1.0);
  double p = 1.0 - q;  // p_0
  for (int n = 0; n < dim; ++n) {
    rho.mat(n, n) = p;
    p *= q;
  }
  rho.trace_deficit = std::pow(q, dim);
  return rho;
}

DensityMatrix random_density(int dim, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> spectrum = rng.simplex(dim);
  std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
  CMatrix u = rng.haar_unitary(dim);
  DensityMatrix rho;
  CMatrix d = CMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) d(i, i) = spectrum[i];
  rho.mat = u * d * u.adjoint();
  rho.mat = 0.5 * (rho.mat + rho.mat.adjoint().eval());
  return rho;
}

DensityMatrix random_density(int dim, std::uint64_t seed,
                             const std::vector<double>& spectrum) {
  require_dim(dim);
  if (int(spectrum.size()) != dim)
    throw std::invalid_argument("random_density: spectrum length != dim");
  double total = std::accumulate(spectrum.begin(), spectrum.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12)
    throw ContractViolation("random_density: spectrum does not sum to 1");

  Rng rng(seed);
  CMatrix u = rng.haar_unitary(dim);
  CMatrix d = CMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) d(i, i) = spectrum[i];
  DensityMatrix rho;
  rho.mat = u * d * u.adjoint();
  rho.mat = 0.5 * (rho.mat + rho.mat.adjoint().eval());
  return rho;
}

DisplacementOp displacement(Complex z, int dim) {
  require_dim(dim);
  const double x = std::norm(z);  // |z|^2
  const double pref = std::exp(-0.5 * x);

  DisplacementOp result;
  result.op = CMatrix::Zero(dim, dim);
  result.column_deficit = RVector::Zero(dim);

  std::vector<double> lag(dim);  // L_n^{(d)}(x) for the current offset d
  for (int d = 0; d < dim; ++d) {
    lag[0] = 1.0;
    if (dim > 1) lag[1] = 1.0 + d - x;
    for (int n = 1; n + 1 < dim; ++n)
      lag[n + 1] = ((2 * n + 1 + d - x) * lag[n] - (n + d) * lag[n - 1]) /
                   (n + 1);

    // <m|D(z)|n> = sqrt(n!/m!) z^{m-n} e^{-x/2} L_n^{(m-n)}(x), m = n+d.
    // The prefactor is built as a running product of z/sqrt(k) so no
    // factorial is ever formed. The lower triangle follows from
    // D(z)^dag = D(-z).
    for (int n = 0; n + d < dim; ++n) {
      const int m = n + d;
      Complex lower = pref;
      Complex upper = pref;
      for (int k = n + 1; k <= m; ++k) {
        const double rsq = std::sqrt(double(k));
        lower *= z / rsq;
        upper *= -std::conj(z) / rsq;
      }
      result.op(m, n) = lower * lag[n];
      if (d > 0) result.op(n, m) = upper * lag[n];
    }
  }

  for (int n = 0; n < dim; ++n) {
    const double mass = result.op.col(n).squaredNorm();
    result.column_deficit(n) = std::max(0.0, 1.0 - mass);
  }
  return result;
}

namespace {
// Weights each column's leaked amplitude by how much of X touches that
// Fock level; estimates |Tr[D(z) X] - chi of the untruncated state| per
// unit trace norm.
double truncation_estimate(const CMatrix& X, const DisplacementOp& d) {
  double estimate = 0.0;
  for (int n = 0; n < X.rows(); ++n) {
    const double weight =
        std::max(X.row(n).template lpNorm<1>(), X.col(n).template lpNorm<1>());
    estimate += weight * std::sqrt(d.column_deficit(n));
  }
  return estimate;
}
}  // namespace

double char_function_truncation_estimate(const CMatrix& X, Complex z) {
  return truncation_estimate(X, displacement(z, int(X.rows())));
}

Complex char_function(const CMatrix& X, Complex z,
                      double max_truncation_error) {
  if (X.rows() != X.cols())
    throw std::invalid_argument("char_function: matrix not square");
  DisplacementOp d = displacement(z, int(X.rows()));
  const double estimate = truncation_estimate(X, d);
  if (estimate > max_truncation_error)
    throw TruncationError(
        "char_function: displacement amplitude too large for the truncated "
        "space (estimated error " +
        std::to_string(estimate) + ")");
  return (d.op * X).trace();
}

}  // namespace focksim
