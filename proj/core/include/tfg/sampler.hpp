#pragma once

#include <random>
#include <vector>

#include "tfg/config.hpp"
#include "tfg/shift_space.hpp"

namespace tfg {

/// Seeded generator of eventually periodic configurations. When plant words
/// are supplied (codebook entries, block runs), half of the draws carry a
/// planted run in the center so that sweeps actually exercise parsed
/// structure; plain random windows of desk-scale length almost never contain
/// a full codeword.
class RandomConfigSampler {
 public:
  RandomConfigSampler(ShiftSpace space, uint64_t seed,
                      std::vector<Word> plant_words = {});

  Config next();

 private:
  Word random_admissible(int64_t len);

  ShiftSpace space_;
  std::mt19937_64 rng_;
  std::vector<Word> plants_;
};

}  // namespace tfg
