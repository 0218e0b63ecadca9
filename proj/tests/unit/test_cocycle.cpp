#include <doctest.h>

#include "tfg/element.hpp"
#include "tfg/errors.hpp"

using namespace tfg;

namespace {

const ShiftSpace& bin() {
  static ShiftSpace s = ShiftSpace::full(Alphabet(2));
  return s;
}

TfgElement pi01() { return TfgElement::dial(2); }

}  // namespace

TEST_CASE("the shift has constant cocycle 1") {
  TfgElement s = TfgElement::shift(bin());
  CHECK(s.evaluate(Config::constant(0)) == 1);
  CHECK(s.evaluate(Config::periodic({0, 1})) == 1);
  CHECK(s.bounds().max_disp == 1);
}

TEST_CASE("pi01 table values") {
  TfgElement g = pi01();
  // +1 when x0 x1 = 01, -1 when x_-1 x_0 = 01, else 0
  Config x({0}, {0, 1}, {0}, 0);  // "01" at the origin
  CHECK(g.evaluate(x) == 1);
  CHECK(g.eval_at(x, 1) == -1);
  CHECK(g.evaluate(Config::constant(0)) == 0);
}

TEST_CASE("composition follows the chain rule") {
  TfgElement s = TfgElement::shift(bin());
  TfgElement g = pi01();
  Config x({0}, {0, 1}, {0}, 0);
  // sigma after pi01: 1 + 1 = 2
  CHECK(compose(s, g).evaluate(x) == 2);
  CHECK(compose(s, s).evaluate(x) == 2);
  // chain rule identity on a batch of points
  for (const Config& p :
       {Config::constant(0), Config::periodic({0, 1}), Config({1}, {0, 0, 1}, {0}, -1)}) {
    int64_t ch = g.evaluate(p);
    CHECK(compose(s, g).evaluate(p) == ch + s.evaluate(p.shifted(ch)));
  }
}

TEST_CASE("pi01 squared canonicalizes to the identity") {
  TfgElement g2 = compose(pi01(), pi01());
  REQUIRE(g2.canonical() != nullptr);
  CHECK(g2.canonical()->bounds().radius == 0);
  CHECK(g2.canonical()->bounds().max_disp == 0);
  CHECK(is_identity(g2));
}

TEST_CASE("inverse of the shift is the constant -1") {
  TfgElement s = TfgElement::shift(bin());
  TfgElement si = invert(s);
  CHECK(si.evaluate(Config::constant(0)) == -1);
  REQUIRE(si.canonical() != nullptr);
  CHECK(si.canonical()->bounds().radius == 0);
}

TEST_CASE("pi01 is an involution") {
  TfgElement g = pi01();
  EqualityVerdict v = equal(invert(g), g);
  CHECK(v.equal);
  CHECK(v.exact);
  CHECK(v.tier == EqualityTier::Exhaustive);
}

TEST_CASE("inverse law holds exactly for small elements") {
  for (const TfgElement& g : {TfgElement::shift(bin()), pi01(), TfgElement::dial(3)}) {
    CHECK(is_identity(compose(g, invert(g))));
    CHECK(is_identity(compose(invert(g), g)));
  }
}

TEST_CASE("equality separates the shift from pi01 with a constant witness") {
  EqualityVerdict v = equal(TfgElement::shift(bin()), pi01());
  CHECK_FALSE(v.equal);
  CHECK(v.exact);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == Config::constant(0));
}

TEST_CASE("even doubling of the shift is the constant 2") {
  TfgElement d = even_double(TfgElement::shift(bin()));
  CHECK(d.evaluate(Config::constant(0)) == 2);
  CHECK(d.evaluate(Config::periodic({0, 1, 1})) == 2);
  REQUIRE(d.canonical() != nullptr);
  CHECK(d.canonical()->bounds().radius == 0);
}

TEST_CASE("even doubling of the identity is the identity") {
  CHECK(is_identity(even_double(TfgElement::identity(bin()))));
}

TEST_CASE("even doubling reads even coordinates only") {
  TfgElement d = even_double(pi01());
  // x0 = 0, x2 = 1: e(x)_0 e(x)_1 = 01, so the value is 2, whatever x1 is
  for (Symbol odd : {0, 1}) {
    Config x({0}, {0, odd, 1}, {0}, 0);
    CHECK(d.evaluate(x) == 2);
  }
}

TEST_CASE("even doubling is a homomorphism on samples") {
  TfgElement g = pi01();
  TfgElement s = TfgElement::shift(bin());
  EqualityVerdict v = equal(even_double(compose(g, s)), compose(even_double(g), even_double(s)));
  CHECK(v.equal);
}

TEST_CASE("dial_q has order q") {
  for (int q : {2, 3, 4}) {
    TfgElement d = TfgElement::dial(q);
    auto ord = order_of(d, 8);
    REQUIRE(ord.has_value());
    CHECK(*ord == q);
  }
}

TEST_CASE("dial move values wrap at the last offset") {
  TfgElement d = TfgElement::dial(3);
  Config x({0}, {0, 1, 2}, {0}, 0);  // pattern at [0,3)
  CHECK(d.evaluate(x) == 1);
  CHECK(d.eval_at(x, 1) == 1);
  CHECK(d.eval_at(x, 2) == -2);
  CHECK(d.eval_at(x, 3) == 0);
}

TEST_CASE("composing across domains is a domain mismatch") {
  CHECK_THROWS_AS((void)compose(TfgElement::shift(bin()), TfgElement::dial(3)), Error);
}

TEST_CASE("off-language evaluation raises") {
  ShiftSpace gm = ShiftSpace::golden_mean();
  TfgElement s = TfgElement::shift(gm);
  Config bad = Config::periodic({1, 1});
  CHECK_THROWS_AS((void)s.evaluate(bad), Error);
}

TEST_CASE("periodic permutations: the shift rotates, pi01 swaps the 01 pair") {
  TfgElement s = TfgElement::shift(bin());
  PeriodicAction rot = periodic_permutation(s, 2);
  // points in lex order: 00, 01, 10, 11; sigma maps 01 <-> 10
  REQUIRE(rot.points.size() == 4);
  CHECK(rot.image[0] == 0);
  CHECK(rot.image[1] == 2);
  CHECK(rot.image[2] == 1);
  CHECK(rot.image[3] == 3);

  PeriodicAction swap = periodic_permutation(pi01(), 2);
  CHECK(swap.image[1] == 2);
  CHECK(swap.image[2] == 1);

  PeriodicAction idp = periodic_permutation(TfgElement::identity(bin()), 1);
  CHECK(idp.image[0] == 0);
  CHECK(idp.image[1] == 1);
}

TEST_CASE("associativity on a desk corpus") {
  TfgElement a = TfgElement::shift(bin());
  TfgElement b = pi01();
  TfgElement c = invert(a);
  EqualityVerdict v = equal(compose(compose(a, b), c), compose(a, compose(b, c)));
  CHECK(v.equal);
  CHECK(v.exact);
}
