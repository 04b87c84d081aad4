#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "focksim/types.hpp"

namespace focksim {

// Mixes (master, a, b) into an independent stream seed. Trials derive
// their seed from (master_seed, cell_index, trial_index) so serial and
// parallel execution produce identical reports.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                          std::uint64_t b = 0);

// Deterministic RNG with hand-rolled transforms on top of mt19937_64.
// The standard distributions are implementation-defined, which would
// break the bit-identical-report contract across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // uniform on [0, 1)
  double uniform() { return static_cast<double>(gen_() >> 11) * kInv53; }

  double normal();  // Box-Muller
  Complex complex_normal();

  // uniform point on the probability simplex (exponential spacings)
  std::vector<double> simplex(int n);

  CMatrix ginibre(int n);
  CMatrix haar_unitary(int n);  // QR of a Ginibre matrix, phases fixed

 private:
  static constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace focksim
