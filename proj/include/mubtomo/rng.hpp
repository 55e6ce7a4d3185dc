#pragma once

#include <cstdint>
#include <random>

#include "mubtomo/cxla.hpp"

namespace mubtomo::rng {

// Independent stream for (master seed, index); used so batched trials are
// schedule-independent.
uint64_t derive_seed(uint64_t master, uint64_t index);

// mt19937_64 with hand-rolled uniform/normal mapping, so draws depend only
// on the engine (which the standard pins bit-exactly) and not on
// library-specific distribution algorithms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  // [0, 1), 53-bit resolution
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double normal();  // Box-Muller
  cxla::Cx normal_complex() { return {normal(), normal()}; }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// G G^dagger / tr(G G^dagger) with G a d x d matrix of independent standard
// complex normal entries. Full rank with probability one.
cxla::Matrix ginibre_density(int dim, Rng& rng);

}  // namespace mubtomo::rng
