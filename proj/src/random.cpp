#include "focksim/random.hpp"

#include <cmath>

namespace focksim {

namespace {
std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                          std::uint64_t b) {
  std::uint64_t state = master;
  std::uint64_t h = splitmix64(state);
  state ^= a * 0xff51afd7ed558ccdULL;
  h ^= splitmix64(state);
  state ^= b * 0xc4ceb9fe1a85ec53ULL;
  h ^= splitmix64(state);
  return h;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller on explicitly constructed uniforms; u1 in (0, 1]
  constexpr double two_pi = 6.283185307179586476925286766559;
  double u1 = 1.0 - uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = two_pi * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

Complex Rng::complex_normal() {
  double re = normal();
  double im = normal();
  return Complex(re, im) / std::sqrt(2.0);
}

std::vector<double> Rng::simplex(int n) {
  std::vector<double> x(n);
  double total = 0.0;
  for (double& v : x) {
    v = -std::log(1.0 - uniform());
    total += v;
  }
  for (double& v : x) v /= total;
  return x;
}

CMatrix Rng::ginibre(int n) {
  CMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = complex_normal();
  return a;
}

CMatrix Rng::haar_unitary(int n) {
  CMatrix a = ginibre(n);
  Eigen::HouseholderQR<CMatrix> qr(a);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the phases of R's diagonal so the distribution is Haar
  for (int j = 0; j < n; ++j) {
    Complex d = r(j, j);
    double mag = std::abs(d);
    q.col(j) *= (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

}  // namespace focksim
