#include <doctest.h>

#include <cmath>

#include "focksim/majorization.hpp"
#include "focksim/random.hpp"
#include "focksim/thinning.hpp"
#include "oracles.hpp"

using namespace focksim;

TEST_CASE("thinning kernel") {
  ThinningKernel k = thinning_kernel(0.5, 4);
  CHECK(k.matrix(0, 2) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(k.matrix(1, 2) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(k.matrix(2, 2) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(k.matrix(3, 2) == 0.0);

  ThinningKernel id = thinning_kernel(1.0, 5);
  CHECK((id.matrix - RMatrix::Identity(5, 5)).cwiseAbs().maxCoeff() == 0.0);

  ThinningKernel absorb = thinning_kernel(0.0, 5);
  CHECK(absorb.matrix.row(0).sum() == 5.0);
  CHECK(absorb.matrix.bottomRows(4).cwiseAbs().maxCoeff() == 0.0);

  // column sums stay one even deep into the tail-heavy regime
  for (double lambda : {0.1, 0.5, 0.9, 0.999}) {
    ThinningKernel big = thinning_kernel(lambda, 500);
    for (int col = 0; col < 500; ++col)
      CHECK(std::abs(big.matrix.col(col).sum() - 1.0) <= 1e-14);
  }

  CHECK_THROWS_AS(thinning_kernel(-0.1, 4), std::invalid_argument);
  CHECK_THROWS_AS(thinning_kernel(1.1, 4), std::invalid_argument);
}

TEST_CASE("thin") {
  ClassicalDist delta1{{0.0, 1.0}};
  ClassicalDist out = thin(delta1, 0.3);
  CHECK(out.weights[0] == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(out.weights[1] == doctest::Approx(0.3).epsilon(1e-14));

  Rng rng(14);
  ClassicalDist p{rng.simplex(9)};
  ClassicalDist same = thin(p, 1.0);
  for (int n = 0; n < 9; ++n)
    CHECK(same.weights[n] == doctest::Approx(p.weights[n]).epsilon(1e-15));

  // Poisson thins to Poisson
  ClassicalDist poisson{oracles::poisson_weights(1.0, 60)};
  ClassicalDist thinned = thin(poisson, 0.5);
  std::vector<double> target = oracles::poisson_weights(0.5, 60);
  double l1 = 0.0;
  for (int n = 0; n < 60; ++n) l1 += std::abs(thinned.weights[n] - target[n]);
  CHECK(l1 <= 1e-12);

  // sum preservation at K = 500
  Rng big_rng(15);
  ClassicalDist big{big_rng.simplex(500)};
  for (double lambda : {0.15, 0.5, 0.9})
    CHECK(std::abs(thin(big, lambda).sum() - big.sum()) <= 1e-14);

  ClassicalDist negative{{0.5, -0.1}};
  CHECK_THROWS_AS(thin(negative, 0.5), ContractViolation);
}

TEST_CASE("thinning semigroup") {
  Rng rng(16);
  ClassicalDist p{rng.simplex(20)};
  ClassicalDist two_step = thin(thin(p, 0.6), 0.7);
  ClassicalDist one_step = thin(p, 0.42);
  for (int n = 0; n < 20; ++n)
    CHECK(std::abs(two_step.weights[n] - one_step.weights[n]) <= 1e-13);
}

TEST_CASE("thinning is passive-preserving and Fock-optimal") {
  for (int rep = 0; rep < 500; ++rep) {
    Rng rng(derive_seed(500, rep));
    ClassicalDist p{rng.simplex(30)};
    for (double lambda : {0.2, 0.5, 0.8}) {
      Spectrum down = decreasing_rearrangement(p.weights);
      ClassicalDist tp = thin(p, lambda);
      ClassicalDist tdown = thin({down.values}, lambda);

      // decreasing inputs stay decreasing
      CHECK(decreasing_rearrangement(tdown.weights).values == tdown.weights);

      // thin(p_down) majorizes thin(p)
      MajorizationReport r =
          submajorizes_weakly(decreasing_rearrangement(tdown.weights),
                              decreasing_rearrangement(tp.weights), 1e-10);
      CHECK(r.weakly_submajorized);
      CHECK(std::abs(tp.sum() - tdown.sum()) <= 1e-13);
    }
  }
}

TEST_CASE("attenuator equals thinning on Fock-diagonal states") {
  ClassicalDist delta0{{1.0}};
  CHECK(attenuator_equivalence_check(delta0, 0.3, 4) == 0.0);

  for (int rep = 0; rep < 20; ++rep) {
    Rng rng(derive_seed(600, rep));
    ClassicalDist p{rng.simplex(20)};
    CHECK(attenuator_equivalence_check(p, 0.7, 20) <= 1e-12);
  }

  // geometric stays geometric: ratio q -> lambda q / (1 - q + lambda q);
  // the check stays away from the tail, where the input truncation bites
  ClassicalDist geo{std::vector<double>(40)};
  double v = 0.5;
  for (int n = 0; n < 40; ++n) {
    geo.weights[n] = v;
    v *= 0.5;
  }
  CHECK(attenuator_equivalence_check(geo, 0.5, 40) <= 1e-12);
  ClassicalDist thinned = thin(geo, 0.5);
  for (int n = 0; n < 10; ++n)
    CHECK(thinned.weights[n + 1] / thinned.weights[n] ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-8));

  CHECK_THROWS_AS(attenuator_equivalence_check(geo, 0.5, 10),
                  std::invalid_argument);
}
