#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace focksim {

using Complex = std::complex<double>;

// Dense row-major complex matrix over the truncated Fock basis
// {|0>, ..., |D-1>}; entry (m, n) is <m|X|n>.
using CMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RVector = Eigen::VectorXd;
using RMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Thrown when an input violates a documented operation contract
// (non-Hermitian where Hermitian is required, bad spectrum sum, ...).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what)
      : std::logic_error(what) {}
};

// Thrown when a requested computation cannot be represented faithfully
// on the truncated space (amplifier overflow, displacement too large).
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what)
      : std::runtime_error(what) {}
};

// Default numeric tolerances. Double-precision eigensolvers deliver
// ~1e-13 backward error at the dimensions used here (D <= ~128).
namespace tol {
inline constexpr double hermitian = 1e-12;
inline constexpr double positivity = -1e-10;
inline constexpr double majorization_slack = 1e-9;
inline constexpr double degeneracy_gap = 1e-10;
}  // namespace tol

// Eigenvalues in decreasing order. `degenerate` is set when two adjacent
// values coincide within 1e-12; trajectory checks use it to skip isolated
// crossing points instead of perturbing the input.
struct Spectrum {
  std::vector<double> values;
  bool degenerate = false;

  int size() const { return static_cast<int>(values.size()); }
  double sum() const;
  bool is_decreasing(double tolerance = 0.0) const;
};

// A state on the truncated space. `trace_deficit` records probability
// weight known to live above |D-1> (thermal tails, amplifier overflow);
// trace(mat) + trace_deficit == 1 for faithful truncations of a state.
struct DensityMatrix {
  CMatrix mat;
  double trace_deficit = 0.0;

  int dim() const { return static_cast<int>(mat.rows()); }
  double trace() const { return mat.trace().real(); }
};

bool is_finite(const CMatrix& X);
double hermiticity_defect(const CMatrix& X);

// Throws ContractViolation when X deviates from X^dagger beyond tol.
void require_hermitian(const CMatrix& X, double tolerance = tol::hermitian,
                       const char* who = "operator");

}  // namespace focksim
