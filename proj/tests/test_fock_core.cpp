#include <doctest.h>

#include <cmath>

#include "focksim/fock_core.hpp"
#include "focksim/random.hpp"
#include "oracles.hpp"

using namespace focksim;

TEST_CASE("ladder operators") {
  CMatrix a = annihilation(3);
  CHECK(a(1, 2).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(a(0, 1).real() == 1.0);
  CHECK(a.cwiseAbs().sum() == doctest::Approx(1.0 + std::sqrt(2.0)));

  CHECK(annihilation(1).cwiseAbs().maxCoeff() == 0.0);  // vacuum annihilated

  // adjoint pair, exact on entries
  CHECK((creation(3) - annihilation(3).adjoint()).cwiseAbs().maxCoeff() == 0.0);

  // a^dag |dim-1> truncates to zero
  CHECK(creation(2).col(1).cwiseAbs().maxCoeff() == 0.0);
  CHECK(creation(3)(2, 1).real() == doctest::Approx(std::sqrt(2.0)));

  CHECK_THROWS_AS(annihilation(0), std::invalid_argument);
  CHECK_THROWS_AS(number_operator(-1), std::invalid_argument);
}

TEST_CASE("number operator and commutator") {
  CMatrix n2 = number_operator(2);
  CHECK(n2(0, 0).real() == 0.0);
  CHECK(n2(1, 1).real() == 1.0);
  CMatrix n4 = number_operator(4);
  for (int k = 0; k < 4; ++k) CHECK(n4(k, k).real() == double(k));

  CMatrix prod = creation(3) * annihilation(3);
  CHECK((prod - number_operator(3)).cwiseAbs().maxCoeff() <= 1e-15);

  // [a, a^dag] = I away from the truncation boundary
  const int dim = 6;
  CMatrix comm =
      annihilation(dim) * creation(dim) - creation(dim) * annihilation(dim);
  for (int m = 0; m + 1 < dim; ++m)
    for (int n = 0; n + 1 < dim; ++n)
      CHECK(std::abs(comm(m, n) - Complex(m == n ? 1.0 : 0.0)) <= 1e-14);
  CHECK(comm(dim - 1, dim - 1).real() ==
        doctest::Approx(-(dim - 1.0)));  // truncation artifact
}

TEST_CASE("eigh basics") {
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 0.2;
  d(1, 1) = 0.8;
  EighResult r = eigh(d);
  CHECK(r.spectrum.values[0] == doctest::Approx(0.8));
  CHECK(r.spectrum.values[1] == doctest::Approx(0.2));
  CHECK(r.spectrum.is_decreasing());

  // rank-1 projector -> (1, 0, ..., 0)
  Rng rng(99);
  CMatrix u = rng.haar_unitary(4);
  CMatrix proj = u.col(0) * u.col(0).adjoint();
  EighResult rp = eigh(proj);
  CHECK(rp.spectrum.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (int i = 1; i < 4; ++i) CHECK(std::abs(rp.spectrum.values[i]) <= 1e-12);
}

TEST_CASE("eigh reconstruction and unitary invariance") {
  Rng rng(7);
  CMatrix g = rng.ginibre(5);
  CMatrix x = 0.5 * (g + g.adjoint().eval());
  EighResult r = eigh(x);
  CMatrix lam = CMatrix::Zero(5, 5);
  for (int i = 0; i < 5; ++i) lam(i, i) = r.spectrum.values[i];
  CMatrix rebuilt = r.vectors * lam * r.vectors.adjoint();
  CHECK((rebuilt - x).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((r.vectors.adjoint() * r.vectors - CMatrix::Identity(5, 5))
            .cwiseAbs()
            .maxCoeff() <= 1e-12);

  for (int rep = 0; rep < 20; ++rep) {
    DensityMatrix rho = random_density(5, derive_seed(3, rep));
    CMatrix v = Rng(derive_seed(4, rep)).haar_unitary(5);
    Spectrum s1 = eigh(rho.mat).spectrum;
    Spectrum s2 = eigh(CMatrix(v * rho.mat * v.adjoint())).spectrum;
    for (int i = 0; i < 5; ++i)
      CHECK(std::abs(s1.values[i] - s2.values[i]) <= 1e-10);
  }

  CMatrix bad = CMatrix::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(eigh(bad), ContractViolation);

  CHECK(eigh(CMatrix::Identity(3, 3)).spectrum.degenerate);
}

TEST_CASE("norms") {
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 0.5;
  d(1, 1) = -0.5;
  CHECK(trace_norm(d) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(hs_norm(d) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));

  CHECK(trace_norm(CMatrix::Zero(3, 3)) == 0.0);
  CHECK(hs_norm(CMatrix::Zero(3, 3)) == 0.0);

  Rng rng(11);
  CMatrix u = rng.haar_unitary(3);
  CMatrix proj = u.col(1) * u.col(1).adjoint();
  CHECK(trace_norm(proj) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(hs_norm(proj) == doctest::Approx(1.0).epsilon(1e-12));

  // ||X||_2 <= ||X||_1 for Hermitian X
  for (int rep = 0; rep < 1000; ++rep) {
    Rng r(derive_seed(21, rep));
    CMatrix g = r.ginibre(4);
    CMatrix x = 0.5 * (g + g.adjoint().eval());
    CHECK(hs_norm(x) <= trace_norm(x) + 1e-12);
  }
}

TEST_CASE("thermal state") {
  DensityMatrix vac = thermal_state(0.0, 5);
  CHECK(vac.mat(0, 0).real() == 1.0);
  CHECK(vac.trace_deficit == 0.0);
  CHECK(vac.trace() == doctest::Approx(1.0));

  DensityMatrix t2 = thermal_state(1.0, 2);
  CHECK(t2.mat(0, 0).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(t2.mat(1, 1).real() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(t2.trace_deficit == doctest::Approx(0.25).epsilon(1e-15));

  CHECK(thermal_state(1.0, 60).trace_deficit < 1e-17);

  for (double nbar : {0.0, 0.3, 1.0, 4.5}) {
    for (int dim : {1, 2, 10, 40}) {
      DensityMatrix rho = thermal_state(nbar, dim);
      CHECK(std::abs(rho.trace() + rho.trace_deficit - 1.0) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(thermal_state(-0.1, 4), std::invalid_argument);
}

TEST_CASE("random density") {
  DensityMatrix pure = random_density(3, 42, {1.0, 0.0, 0.0});
  CHECK((pure.mat * pure.mat - pure.mat).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(pure.trace() == doctest::Approx(1.0).epsilon(1e-12));

  DensityMatrix a = random_density(5, 77);
  DensityMatrix b = random_density(5, 77);
  CHECK((a.mat - b.mat).cwiseAbs().maxCoeff() == 0.0);  // bit-identical

  std::vector<double> spec{0.4, 0.3, 0.2, 0.05, 0.05};
  DensityMatrix rho = random_density(5, 123, spec);
  Spectrum s = eigh(rho.mat).spectrum;
  for (int i = 0; i < 5; ++i) CHECK(std::abs(s.values[i] - spec[i]) <= 1e-12);

  CHECK_THROWS_AS(random_density(3, 1, {0.5, 0.2, 0.2}), ContractViolation);
}

TEST_CASE("displacement matches the series oracle") {
  for (Complex z : {Complex(1.0, 0.0), Complex(0.0, 2.0), Complex(1.2, -0.8),
                    Complex(0.3, 1.9)}) {
    DisplacementOp d = displacement(z, 40);
    CMatrix ref = oracles::displacement_series(z, 40, 120);
    CHECK((d.op - ref).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("characteristic function") {
  CMatrix vac = CMatrix::Zero(40, 40);
  vac(0, 0) = 1.0;
  Complex chi = char_function(vac, Complex(1.0, 0.0));
  CHECK(std::abs(chi - std::exp(-0.5)) <= 1e-12);
  CHECK(chi.real() == doctest::Approx(0.60653065971263342).epsilon(1e-12));

  // chi_X(0) = Tr X
  DensityMatrix rho = random_density(12, 5);
  CHECK(std::abs(char_function(rho.mat, Complex(0, 0)) -
                 Complex(rho.trace(), 0.0)) <= 1e-13);

  // too much displacement for the cutoff
  CMatrix vac20 = CMatrix::Zero(20, 20);
  vac20(0, 0) = 1.0;
  CHECK_THROWS_AS(char_function(vac20, Complex(6.0, 0.0)), TruncationError);
  CHECK(char_function_truncation_estimate(vac20, Complex(6.0, 0.0)) > 1e-3);
  CHECK(char_function_truncation_estimate(vac20, Complex(1.0, 0.0)) < 1e-10);
}

TEST_CASE("displacement block unitarity") {
  // D(z) D(-z) = I away from the cutoff; the 10x10 corner stays clean to
  // 1e-8 for |z| <= 2 at dim 40 (leaked column mass grows with n)
  for (Complex z : {Complex(2.0, 0.0), Complex(0.0, 2.0), Complex(1.4, 1.4),
                    Complex(1.0, 0.0)}) {
    CMatrix prod = displacement(z, 40).op * displacement(-z, 40).op;
    CMatrix block = prod.topLeftCorner(10, 10);
    CHECK((block - CMatrix::Identity(10, 10)).cwiseAbs().maxCoeff() <= 1e-8);
  }
}
