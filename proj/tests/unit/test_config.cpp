#include <doctest.h>

#include <random>

#include "tfg/config.hpp"

using namespace tfg;

TEST_CASE("symbol_at on the constant configuration") {
  Config x = Config::constant(0);
  CHECK(x.symbol_at(7) == 0);
  CHECK(x.symbol_at(-123) == 0);
}

TEST_CASE("symbol_at reads the center") {
  // left (0)*, center "01" at [0,2), right (0)*
  Config x({0}, {0, 1}, {0}, 0);
  CHECK(x.symbol_at(0) == 0);
  CHECK(x.symbol_at(1) == 1);
  CHECK(x.symbol_at(2) == 0);
  CHECK(x.symbol_at(-1) == 0);
}

TEST_CASE("periodic tails unfold on both sides") {
  Config x = Config::periodic({0, 1});
  CHECK(x.symbol_at(0) == 0);
  CHECK(x.symbol_at(1) == 1);
  CHECK(x.symbol_at(2) == 0);
  // x_{-3}: ...010101|01...; position -1 is 1, -2 is 0, -3 is 1
  CHECK(x.symbol_at(-3) == 1);
}

TEST_CASE("shift is the inverse of unshift") {
  Config x({0}, {1, 1, 0, 1}, {0, 1}, -2);
  for (int64_t k : {-5, -1, 0, 1, 3, 8}) {
    Config y = x.shifted(k).shifted(-k);
    CHECK(y == x);
  }
}

TEST_CASE("shift moves symbols the right way") {
  Config x({0}, {1}, {0}, 0);  // single 1 at position 0
  Config y = x.shifted(1);     // y_i = x_{i+1}: the 1 sits at -1 now
  CHECK(y.symbol_at(-1) == 1);
  CHECK(y.symbol_at(0) == 0);
}

TEST_CASE("shifting a period-2 point by its period is the identity") {
  Config x = Config::periodic({0, 1});
  CHECK(x.shifted(2) == x);
  CHECK(x.shifted(0) == x);
  CHECK_FALSE(x.shifted(1) == x);
}

TEST_CASE("normalization is representation independent") {
  // same point written three ways: ...000 1 000...
  Config a({0}, {1}, {0}, 0);
  Config b({0, 0}, {0, 1, 0}, {0, 0, 0}, -1);
  Config c({0}, {0, 0, 1, 0, 0, 0}, {0}, -2);
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("normalization preserves symbol_at on random representations") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> len(1, 5);
  std::uniform_int_distribution<int> clen(0, 8);
  std::uniform_int_distribution<int64_t> at(-6, 6);
  for (int trial = 0; trial < 500; ++trial) {
    Word l(static_cast<size_t>(len(rng))), c(static_cast<size_t>(clen(rng))),
        r(static_cast<size_t>(len(rng)));
    for (auto& s : l) s = bit(rng);
    for (auto& s : c) s = bit(rng);
    for (auto& s : r) s = bit(rng);
    int64_t cs = at(rng);
    Config x(l, c, r, cs);
    // reread the raw fields by hand
    auto raw_at = [&](int64_t i) -> Symbol {
      int64_t j = i - cs;
      if (j >= 0 && j < static_cast<int64_t>(c.size())) return c[static_cast<size_t>(j)];
      if (j >= static_cast<int64_t>(c.size())) {
        j -= static_cast<int64_t>(c.size());
        return r[static_cast<size_t>(j % static_cast<int64_t>(r.size()))];
      }
      int64_t m = (-j - 1) % static_cast<int64_t>(l.size());
      return l[l.size() - 1 - static_cast<size_t>(m)];
    };
    for (int64_t i = -40; i <= 40; ++i) CHECK(x.symbol_at(i) == raw_at(i));
  }
}

TEST_CASE("global period detection") {
  CHECK(Config::periodic({0, 1}).global_period() == 2);
  CHECK(Config::periodic({0, 1, 0, 1}).global_period() == 2);
  CHECK(Config({0}, {1}, {0}, 0).global_period() == 0);
}

TEST_CASE("literal parsing matches the x.y convention") {
  Config x = Config::parse_literal("(0)* 01 . (0)*");
  // "01" written before the dot occupies positions -2,-1
  CHECK(x.symbol_at(-2) == 0);
  CHECK(x.symbol_at(-1) == 1);
  CHECK(x.symbol_at(0) == 0);

  Config y = Config::parse_literal("(0)^inf . 10 (1)^inf");
  CHECK(y.symbol_at(0) == 1);
  CHECK(y.symbol_at(1) == 0);
  CHECK(y.symbol_at(2) == 1);
  CHECK(y.symbol_at(-1) == 0);

  Config z = Config::parse_literal("(01)* . (01)*");
  CHECK(z == Config::periodic({0, 1}));
}

TEST_CASE("literal round-trip through to_string") {
  for (const char* lit : {"(0)* 01 . (0)*", "(10)* . 111 (0)*", "(01)* . (01)*"}) {
    Config x = Config::parse_literal(lit);
    Config y = Config::parse_literal(x.to_string());
    CHECK(x == y);
  }
}
