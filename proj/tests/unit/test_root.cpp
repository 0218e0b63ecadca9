#include <doctest.h>

#include "tfg/root.hpp"

using namespace tfg;

namespace {

const ShiftSpace& bin() {
  static ShiftSpace s = ShiftSpace::full(Alphabet(2));
  return s;
}

EqualityPolicy quick_eq() {
  EqualityPolicy eq;
  eq.period_bound = 6;
  eq.random_samples = 200;
  return eq;
}

}  // namespace

TEST_CASE("the root ambient alphabet gains the padding symbol") {
  RootSubshift root = sqrt_shift(bin(), 2);
  CHECK(root.ambient.alphabet().size() == 3);
  CHECK(root.pad == 2);
}

TEST_CASE("swap of identity copies has order two") {
  RootSubshift root = sqrt_shift(bin(), 2);
  WreathElement swap = WreathElement::identity(root);
  swap.perm = {1, 0};
  WreathElement square = wreath_multiply(swap, swap, quick_eq());
  CHECK(wreath_same(square, WreathElement::identity(root), quick_eq()));
  TfgElement embedded = embed_wreath_Sk(root, swap, quick_eq());
  CHECK(equal_on_root(root, compose(embedded, embedded), TfgElement::identity(root.ambient), 8));
}

TEST_CASE("k-scaled steps: (sigma, id) with the trivial permutation") {
  RootSubshift root = sqrt_shift(bin(), 2);
  WreathElement el = WreathElement::identity(root);
  el.tuple[0] = TfgElement::shift(bin());
  TfgElement embedded = embed_wreath_Sk(root, el, quick_eq());
  // grid 0101... with base symbols at even positions
  Word w = {0, root.pad, 1, root.pad};
  Config x = Config::periodic(w);
  CHECK(embedded.evaluate(x) == 2);       // offset 0: two ambient steps per grid step
  CHECK(embedded.eval_at(x, 1) == 0);     // offset 1: the identity leg
  CHECK(embedded.eval_at(x, 2) == 2);
}

TEST_CASE("the all-pad point is fixed by convention") {
  RootSubshift root = sqrt_shift(bin(), 2);
  WreathElement el = WreathElement::identity(root);
  el.perm = {1, 0};
  el.tuple[0] = TfgElement::shift(bin());
  TfgElement embedded = embed_wreath_Sk(root, el, quick_eq());
  CHECK(embedded.evaluate(Config::constant(root.pad)) == 0);
}

TEST_CASE("embedding respects the wreath product law on generator pairs") {
  RootSubshift root = sqrt_shift(bin(), 2);
  WreathElement a = WreathElement::identity(root);
  a.tuple[0] = TfgElement::shift(bin());
  WreathElement b = WreathElement::identity(root);
  b.perm = {1, 0};
  WreathElement c = WreathElement::identity(root);
  c.tuple[1] = TfgElement::dial(2);

  for (const WreathElement& x : {a, b, c})
    for (const WreathElement& y : {a, b, c}) {
      TfgElement lhs = embed_wreath_Sk(root, wreath_multiply(x, y, quick_eq()), quick_eq());
      TfgElement rhs =
          compose(embed_wreath_Sk(root, x, quick_eq()), embed_wreath_Sk(root, y, quick_eq()));
      CHECK(equal_on_root(root, lhs, rhs, 8));
    }
}

TEST_CASE("embedded inverses really invert") {
  RootSubshift root = sqrt_shift(bin(), 3);
  WreathElement a = WreathElement::identity(root);
  a.perm = {1, 2, 0};
  a.tuple[0] = TfgElement::shift(bin());
  TfgElement e = embed_wreath_Sk(root, a, quick_eq());
  TfgElement ei = embed_wreath_Sk(root, wreath_inverse(a, quick_eq()), quick_eq());
  CHECK(equal_on_root(root, compose(e, ei), TfgElement::identity(root.ambient), 9));
  CHECK(equal_on_root(root, compose(ei, e), TfgElement::identity(root.ambient), 9));
  // and the structural inverse agrees with the wreath inverse
  CHECK(equal_on_root(root, invert(e), ei, 9));
}

TEST_CASE("distinct wreath elements embed to distinct actions") {
  RootSubshift root = sqrt_shift(bin(), 2);
  WreathElement a = WreathElement::identity(root);
  a.perm = {1, 0};
  WreathElement b = WreathElement::identity(root);
  b.tuple[1] = TfgElement::shift(bin());
  TfgElement ea = embed_wreath_Sk(root, a, quick_eq());
  TfgElement eb = embed_wreath_Sk(root, b, quick_eq());
  CHECK_FALSE(equal_on_root(root, ea, eb, 8));
}
