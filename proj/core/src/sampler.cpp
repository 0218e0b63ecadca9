#include "tfg/sampler.hpp"

#include "tfg/errors.hpp"

namespace tfg {

RandomConfigSampler::RandomConfigSampler(ShiftSpace space, uint64_t seed,
                                         std::vector<Word> plant_words)
    : space_(std::move(space)), rng_(seed) {
  // keep only plants the domain can express; callers hand over mixed pools
  for (Word& w : plant_words) {
    if (w.empty()) throw Error(ErrorCode::BadInput, "empty plant word");
    bool fits = true;
    for (Symbol s : w) fits = fits && space_.alphabet().contains(s);
    if (fits) plants_.push_back(std::move(w));
  }
}

Word RandomConfigSampler::random_admissible(int64_t len) {
  Word w;
  w.reserve(static_cast<size_t>(len));
  auto live = space_.live_symbols();
  std::uniform_int_distribution<size_t> pick(0, live.size() - 1);
  for (int64_t i = 0; i < len; ++i) {
    if (w.empty() || space_.is_full()) {
      w.push_back(live[pick(rng_)]);
    } else {
      auto succ = space_.successors(w.back());
      std::uniform_int_distribution<size_t> ps(0, succ.size() - 1);
      w.push_back(succ[ps(rng_)]);
    }
  }
  return w;
}

Config RandomConfigSampler::next() {
  std::uniform_int_distribution<int64_t> tail_len(1, 6);
  std::uniform_int_distribution<int64_t> center_len(0, 24);
  std::uniform_int_distribution<int> coin(0, 1);

  bool plant = !plants_.empty() && space_.is_full() && coin(rng_) == 1;
  Word center;
  if (plant) {
    std::uniform_int_distribution<int64_t> margin(0, 3);
    std::uniform_int_distribution<int64_t> runs(1, 4);
    std::uniform_int_distribution<size_t> which(0, plants_.size() - 1);
    center = random_admissible(margin(rng_));
    int64_t n = runs(rng_);
    for (int64_t i = 0; i < n; ++i) {
      const Word& w = plants_[which(rng_)];
      center.insert(center.end(), w.begin(), w.end());
    }
    Word tail = random_admissible(margin(rng_));
    center.insert(center.end(), tail.begin(), tail.end());
  } else {
    center = random_admissible(center_len(rng_));
  }

  if (space_.is_full()) {
    Word left = random_admissible(tail_len(rng_));
    Word right = random_admissible(tail_len(rng_));
    std::uniform_int_distribution<int64_t> offset(-4, 4);
    return Config(left, center, right, offset(rng_));
  }

  // vertex shifts: stitch tails admissibly around the center
  Word seed_word = center.empty() ? random_admissible(1) : center;
  return space_.embed_word(seed_word, 0);
}

}  // namespace tfg
