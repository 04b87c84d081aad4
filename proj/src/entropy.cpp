#include "focksim/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "focksim/fock_core.hpp"

namespace focksim {

double entropy_of_weights(std::span<const double> p) {
  double h = 0.0;
  for (double v : p) {
    const double w = std::clamp(v, 0.0, 1.0);
    if (w > 0.0) h -= w * std::log(w);
  }
  return h;
}

namespace {
std::vector<double> state_spectrum(const DensityMatrix& rho) {
  if (std::abs(rho.trace() + rho.trace_deficit - 1.0) > 1e-6)
    throw ContractViolation("entropy: trace (plus deficit) deviates from 1");
  return eigh(rho.mat).spectrum.values;
}
}  // namespace

double von_neumann(const DensityMatrix& rho) {
  return entropy_of_weights(state_spectrum(rho));
}

double renyi(const DensityMatrix& rho, double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0)
    throw std::invalid_argument("renyi: alpha must be positive and != 1");
  double total = 0.0;
  for (double v : state_spectrum(rho)) {
    const double w = std::clamp(v, 0.0, 1.0);
    if (w > 0.0) total += std::pow(w, alpha);
  }
  return std::log(total) / (1.0 - alpha);
}

double shannon(const ClassicalDist& p) {
  if (std::abs(p.sum() - 1.0) > 1e-10)
    throw ContractViolation("shannon: distribution is not normalized");
  return entropy_of_weights(p.weights);
}

}  // namespace focksim
