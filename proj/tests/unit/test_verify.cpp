#include <doctest.h>

#include "tfg/verify.hpp"

using namespace tfg;

namespace {

const ShiftSpace& bin() {
  static ShiftSpace s = ShiftSpace::full(Alphabet(2));
  return s;
}

NodePtr table_rule(const ShiftSpace& space, int64_t radius, std::vector<int32_t> vals) {
  return std::make_shared<TableNode>(space, radius, std::move(vals));
}

}  // namespace

TEST_CASE("the shift verifies exhaustively") {
  VerifyOutcome out = verify_bijective(table_rule(bin(), 0, {1, 1}));
  CHECK(out.ok);
  CHECK(out.record.mode == VerifyMode::Exhaustive);
}

TEST_CASE("pi01 verifies exhaustively") {
  VerifyOutcome out = verify_bijective(TfgElement::dial(2).rule());
  CHECK(out.ok);
  CHECK(out.record.mode == VerifyMode::Exhaustive);
}

TEST_CASE("the classic non-injective rule is caught with the right witness") {
  // c(x) = 1 if x0 = 0 else 0: x and sigma(x) collide on the word 01
  VerifyOutcome out = verify_bijective(table_rule(bin(), 0, {1, 0}));
  CHECK_FALSE(out.ok);
  CHECK(out.failure == VerifyFailure::NotInjective);
  CHECK(out.collision_shift == 1);
  CHECK(out.witness == word_from_digits("01"));
}

TEST_CASE("c(x) = 2*x0 collides across a 2-shift") {
  // a point with x0=1, x2=0 and its 2-shift land on the same image
  VerifyOutcome out = verify_bijective(table_rule(bin(), 0, {0, 2}));
  CHECK_FALSE(out.ok);
  CHECK(out.failure == VerifyFailure::NotInjective);
  CHECK(out.collision_shift == 2);
  CHECK(out.witness == word_from_digits("100"));
}

TEST_CASE("dial rules verify exhaustively for q up to 4") {
  for (int q : {2, 3, 4}) {
    VerifyOutcome out = verify_bijective(TfgElement::dial(q).rule());
    CHECK(out.ok);
    CHECK(out.record.mode == VerifyMode::Exhaustive);
  }
}

TEST_CASE("verifier verdict agrees with the periodic-point oracle") {
  std::vector<NodePtr> corpus = {
      table_rule(bin(), 0, {1, 1}),   // sigma
      table_rule(bin(), 0, {-1, -1}), // sigma^-1
      TfgElement::dial(2).rule(),     // pi01
      table_rule(bin(), 0, {1, 0}),   // broken
      table_rule(bin(), 0, {0, 2}),   // broken
  };
  for (const NodePtr& rule : corpus) {
    bool verdict = verify_bijective(rule).ok;
    bool oracle = true;
    for (int64_t p = 1; p <= 8; ++p) oracle = oracle && periodic_action(*rule, p).is_permutation;
    CHECK(verdict == oracle);
  }
}

TEST_CASE("golden mean shift rule verifies over the vertex domain") {
  ShiftSpace gm = ShiftSpace::golden_mean();
  VerifyOutcome out = verify_bijective(TfgElement::shift(gm).rule());
  CHECK(out.ok);
  CHECK(out.record.mode == VerifyMode::Exhaustive);
}

TEST_CASE("golden mean cycler verifies and the oracle agrees") {
  ShiftSpace gm = ShiftSpace::golden_mean();
  TfgElement cyc = TfgElement::pattern_cycler(gm, word_from_digits("01"));
  VerifyOutcome out = verify_bijective(cyc.rule());
  CHECK(out.ok);
  for (int64_t p = 1; p <= 8; ++p) CHECK(periodic_action(*cyc.rule(), p).is_permutation);
}
