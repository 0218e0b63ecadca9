#pragma once

#include <cstdint>
#include <vector>

#include "tfg/word.hpp"

namespace tfg {

/// Bounds for the tiered equality decision (exhaustive window sweep, periodic
/// point sweep, random configurations). Runs with equal policy and seed are
/// deterministic.
struct EqualityPolicy {
  int period_bound = 12;
  int64_t period_point_cap = 1 << 21;  // exhaustive per-period point budget
  int64_t period_samples = 1 << 17;    // seeded samples per period beyond the cap
  int64_t random_samples = 100000;
  uint64_t seed = 0x9d2c5680ca876596ull;
  std::vector<Word> probe_words;  // planted into the random-tier sampler

  /// Largest window radius compared exhaustively: 6 for binary alphabets,
  /// otherwise the largest r with sigma^(2r+1) <= 262144 (4 for quaternary).
  int exhaustive_radius(int sigma) const {
    if (sigma <= 2) return 6;
    int r = 0;
    int64_t space = sigma;
    while (space * sigma * sigma <= 262144) {
      space *= sigma * sigma;
      ++r;
    }
    return r;
  }
};

struct VerifyPolicy {
  int64_t exhaustive_budget = 500'000'000;  // max admissible-word sweeps
  int period_bound = 10;
  int64_t period_point_cap = 1 << 21;
  int64_t samples = 20000;
  uint64_t seed = 0x853c49e6748fea9bull;
  std::vector<Word> probe_words;  // planted into sampled probes
};

struct SearchPolicy {
  int period_bound = 10;
  int64_t period_point_cap = 1 << 18;
  int64_t samples = 5000;
  uint64_t seed = 0xda3e39cb94b95bdbull;
  int max_gamma_values = 6;  // distinct cocycle values an endomorphism map may use
};

}  // namespace tfg
