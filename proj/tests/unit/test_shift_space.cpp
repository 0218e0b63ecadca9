#include <doctest.h>

#include "tfg/shift_space.hpp"

using namespace tfg;

TEST_CASE("golden mean admissibility") {
  ShiftSpace gm = ShiftSpace::golden_mean();
  CHECK(gm.admissible(word_from_digits("0101")));
  CHECK_FALSE(gm.admissible(word_from_digits("011")));
  CHECK(gm.admissible({}));
  CHECK(gm.transitive());
}

TEST_CASE("periodic counts match the adjacency trace") {
  ShiftSpace gm = ShiftSpace::golden_mean();
  // golden mean: trace(M^p) is the Lucas sequence 1, 3, 4, 7, 11, 18
  CHECK(gm.periodic_count(1) == 1);
  CHECK(gm.periodic_count(2) == 3);
  CHECK(gm.periodic_count(3) == 4);
  CHECK(gm.periodic_count(4) == 7);
  CHECK(gm.periodic_count(5) == 11);
  CHECK(gm.periodic_count(6) == 18);
  for (int64_t p = 1; p <= 6; ++p)
    CHECK(static_cast<int64_t>(gm.periodic_words(p).size()) == gm.periodic_count(p));

  ShiftSpace full = ShiftSpace::full(Alphabet(2));
  for (int64_t p = 1; p <= 6; ++p) {
    CHECK(full.periodic_count(p) == (1 << p));
    CHECK(static_cast<int64_t>(full.periodic_words(p).size()) == (1 << p));
  }
}

TEST_CASE("non-essential symbols are pruned, not rejected") {
  // symbol 2 has no predecessor: 0->0, 0->1, 1->0, 1->2 minus way in
  std::vector<std::vector<bool>> adj = {
      {true, true, false}, {true, false, true}, {false, false, false}};
  ShiftSpace s = ShiftSpace::vertex(Alphabet(3), adj);
  CHECK_FALSE(s.symbol_live(2));
  CHECK(s.live_count() == 2);
  CHECK(s.admissible(word_from_digits("0101")));
  CHECK_FALSE(s.admissible(word_from_digits("012")));
}

TEST_CASE("joining radius of the golden mean shift is 1") {
  ShiftSpace gm = ShiftSpace::golden_mean();
  CHECK(gm.joining_radius() == 1);
  auto u = gm.join_word(1, 1, 4);
  REQUIRE(u.has_value());
  CHECK(*u == word_from_digits("0"));
  auto e = gm.join_word(0, 1, 4);
  REQUIRE(e.has_value());
  CHECK(e->empty());
}

TEST_CASE("embed_word produces an admissible configuration containing the word") {
  ShiftSpace gm = ShiftSpace::golden_mean();
  Word w = word_from_digits("10010");
  Config x = gm.embed_word(w, -2);
  for (size_t i = 0; i < w.size(); ++i)
    CHECK(x.symbol_at(-2 + static_cast<int64_t>(i)) == w[i]);
  CHECK(gm.admissible_config(x));

  ShiftSpace full = ShiftSpace::full(Alphabet(2));
  Config y = full.embed_word(w, 3);
  for (size_t i = 0; i < w.size(); ++i)
    CHECK(y.symbol_at(3 + static_cast<int64_t>(i)) == w[i]);
}

TEST_CASE("non-transitive vertex shift is detected") {
  // two disjoint loops 0->0, 1->1
  ShiftSpace s = ShiftSpace::vertex(Alphabet(2), {{true, false}, {false, true}});
  CHECK_FALSE(s.transitive());
}
