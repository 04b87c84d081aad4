#include "focksim/majorization.hpp"

#include <algorithm>
#include <cmath>

#include "focksim/fock_core.hpp"

namespace focksim {

double MajorizationReport::min_slack() const {
  double worst = std::numeric_limits<double>::infinity();
  for (double s : slacks) worst = std::min(worst, s);
  return worst;
}

Spectrum decreasing_rearrangement(std::span<const double> xs) {
  Spectrum s;
  s.values.assign(xs.begin(), xs.end());
  for (double v : s.values)
    if (!std::isfinite(v))
      throw ContractViolation("decreasing_rearrangement: non-finite entry");
  std::stable_sort(s.values.begin(), s.values.end(), std::greater<>());
  for (std::size_t i = 1; i < s.values.size(); ++i)
    if (s.values[i - 1] - s.values[i] < 1e-12) {
      s.degenerate = true;
      break;
    }
  return s;
}

MajorizationReport submajorizes_weakly(const Spectrum& x, const Spectrum& y,
                                       double tolerance) {
  if (!x.is_decreasing(1e-12) || !y.is_decreasing(1e-12))
    throw ContractViolation("submajorizes_weakly: inputs must be decreasing");

  const std::size_t n = std::max(x.values.size(), y.values.size());
  MajorizationReport report;
  report.tolerance = tolerance;
  report.partial_sums_x.resize(n);
  report.partial_sums_y.resize(n);
  report.slacks.resize(n);

  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    // missing eigenvalues of the shorter sequence count as zero
    if (i < x.values.size()) sx += x.values[i];
    if (i < y.values.size()) sy += y.values[i];
    report.partial_sums_x[i] = sx;
    report.partial_sums_y[i] = sy;
    report.slacks[i] = sx - sy;
  }
  report.weakly_submajorized = report.min_slack() >= -tolerance;
  report.majorized =
      report.weakly_submajorized && std::abs(sx - sy) <= tolerance;
  return report;
}

CMatrix fock_rearrangement(const CMatrix& X, double psd_tol) {
  EighResult eig = eigh(X);
  const int dim = eig.spectrum.size();
  CMatrix out = CMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (eig.spectrum.values[i] < -psd_tol)
      throw ContractViolation("fock_rearrangement: operator is not PSD");
    out(i, i) = eig.spectrum.values[i];
  }
  return out;
}

bool is_passive(const CMatrix& X, double tolerance) {
  const int dim = int(X.rows());
  for (int m = 0; m < dim; ++m)
    for (int n = 0; n < dim; ++n)
      if (m != n && std::abs(X(m, n)) > tolerance) return false;
  for (int n = 0; n + 1 < dim; ++n)
    if (X(n + 1, n + 1).real() > X(n, n).real() + tolerance) return false;
  return true;
}

int projector_rank(const CMatrix& P) {
  const double r = P.trace().real();
  const double rounded = std::round(r);
  if (std::abs(r - rounded) > 1e-6)
    throw ContractViolation("projector_rank: trace is not near an integer");
  return int(rounded);
}

bool ky_fan_check(const CMatrix& X, const CMatrix& P, double tolerance,
                  double projector_tol) {
  require_hermitian(P, projector_tol, "projector");
  if ((P * P - P).cwiseAbs().maxCoeff() > projector_tol)
    throw ContractViolation("ky_fan_check: P is not idempotent");

  const int rank = projector_rank(P);
  const double lhs = (P * X).trace().real();
  EighResult eig = eigh(X);
  double top = 0.0;
  for (int k = 0; k < rank && k < eig.spectrum.size(); ++k)
    top += eig.spectrum.values[k];
  return lhs <= top + tolerance;
}

CMatrix passive_projector(int rank, int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  if (rank < 1 || rank > dim)
    throw std::invalid_argument("passive_projector: rank out of range");
  CMatrix p = CMatrix::Zero(dim, dim);
  for (int i = 0; i < rank; ++i) p(i, i) = 1.0;
  return p;
}

}  // namespace focksim
