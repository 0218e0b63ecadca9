#include <doctest.h>

#include "tfg/errors.hpp"
#include "tfg/moves.hpp"

using namespace tfg;

namespace {

const ShiftSpace& bin() {
  static ShiftSpace s = ShiftSpace::full(Alphabet(2));
  return s;
}

SearchPolicy quick_search() {
  SearchPolicy s;
  s.period_bound = 6;
  return s;
}

}  // namespace

TEST_CASE("abelian group arithmetic") {
  FiniteAbelianGroup g({2, 4});
  CHECK(g.order() == 8);
  auto a = g.element(3);  // (0, 3)
  auto b = g.element(5);  // (1, 1)
  CHECK(g.index_of(g.add(a, b)) == g.index_of(g.element(4)));  // (1, 0)
  CHECK(g.is_zero(g.add(a, g.negate(a))));
}

TEST_CASE("endomorphism enumeration: Z2 has exactly zero and identity") {
  FiniteAbelianGroup g({2});
  auto endos = all_endomorphisms(g);
  CHECK(endos.size() == 2);
}

TEST_CASE("endomorphisms of Z2 x Z2 form the 2x2 matrix ring over F2") {
  FiniteAbelianGroup g({2, 2});
  CHECK(all_endomorphisms(g).size() == 16);
}

TEST_CASE("shift powers have unique moves, the largest move wins") {
  std::vector<TfgElement> family;
  for (int64_t k : {-2, -1, 0, 1, 2}) family.push_back(TfgElement::shift(bin(), k));
  auto cert = unique_moves_check(family, quick_search());
  REQUIRE(cert.has_value());
  CHECK(cert->element_index == 4);  // sigma^2: descending-value order
  CHECK(cert->value == 2);
  CHECK(cert->other_values == std::vector<int64_t>{-2, -1, 0, 1});
}

TEST_CASE("the pair {id, pi01} certificates on a moving point") {
  std::vector<TfgElement> family = {TfgElement::identity(bin()), TfgElement::dial(2)};
  auto cert = unique_moves_check(family, quick_search());
  REQUIRE(cert.has_value());
  CHECK(cert->element_index == 1);
  CHECK(cert->value == 1);
  CHECK(cert->other_values == std::vector<int64_t>{0});
}

TEST_CASE("a singleton family certificates vacuously") {
  std::vector<TfgElement> family = {TfgElement::identity(bin())};
  auto cert = unique_moves_check(family, quick_search());
  REQUIRE(cert.has_value());
  CHECK(cert->element_index == 0);
  CHECK(cert->other_values.empty());
}

TEST_CASE("beta for a single nontrivial element") {
  FiniteAbelianGroup g({2});
  auto h = g.element(1);
  BetaMap beta = build_beta_cancel(g, {TfgElement::shift(bin())}, h);
  REQUIRE(beta.entries.size() == 2);
  CHECK(beta.exact_grouping);
  CHECK(beta.nonzero);
  // beta(id) = h, beta(sigma) = -h = h over Z2
  CHECK(beta.entries[0].value == h);
  CHECK(beta.entries[1].value == g.negate(h));
}

TEST_CASE("beta over the identity family vanishes") {
  FiniteAbelianGroup g({2});
  BetaMap beta = build_beta_cancel(g, {TfgElement::identity(bin())}, g.element(1));
  REQUIRE(beta.entries.size() == 1);
  CHECK_FALSE(beta.nonzero);
  CHECK(g.is_zero(beta.entries[0].value));
}

TEST_CASE("beta groups equal elements with inclusion-exclusion") {
  FiniteAbelianGroup g({3});
  auto h = g.element(1);
  TfgElement s = TfgElement::shift(bin());
  BetaMap beta = build_beta_cancel(g, {s, s}, h);
  // subsets: id (+h), {1} (-h), {2} (-h), {1,2} (+h): id -> h, s -> -2h, s^2 -> h
  REQUIRE(beta.entries.size() == 3);
  CHECK(beta.entries[0].value == h);
  CHECK(beta.entries[1].value == g.add(g.negate(h), g.negate(h)));
  CHECK(beta.entries[2].value == h);
}

TEST_CASE("non-commuting families are refused") {
  FiniteAbelianGroup g({2});
  // sigma and pi01 do not commute
  CHECK_THROWS_AS(
      (void)build_beta_cancel(g, {TfgElement::shift(bin()), TfgElement::dial(2)}, g.element(1)),
      Error);
}

TEST_CASE("move-aithful search finds a certificate for the pi01 singleton") {
  FiniteAbelianGroup g({2});
  std::vector<BetaEntry> beta = {{TfgElement::dial(2), g.element(1)}};
  auto cert = move_aithful_check(g, beta, quick_search());
  REQUIRE(cert.has_value());
  CHECK_FALSE(g.is_zero(cert->sum));
}

TEST_CASE("empty support is an error") {
  FiniteAbelianGroup g({2});
  std::vector<BetaEntry> beta = {{TfgElement::dial(2), g.zero()}};
  CHECK_THROWS_AS((void)move_aithful_check(g, beta, quick_search()), Error);
}

TEST_CASE("a stabilized commuting pair cancels for every gamma") {
  // sigma^2 and the identity commute; the identity stabilizes everything,
  // so the telescoping sum vanishes for every point and assignment
  FiniteAbelianGroup g({2});
  auto h = g.element(1);
  std::vector<TfgElement> family = {TfgElement::shift(bin(), 2), TfgElement::identity(bin())};
  BetaMap beta = build_beta_cancel(g, family, h);
  std::vector<BetaEntry> entries = beta.entries;
  bool any_nonzero = false;
  for (const BetaEntry& e : entries) any_nonzero = any_nonzero || !g.is_zero(e.value);
  CHECK_FALSE(any_nonzero);  // pairing I <-> I + {identity} kills beta itself
}
