#include "tfg/config.hpp"

#include <algorithm>
#include <cctype>

#include "tfg/errors.hpp"

namespace tfg {

Config::Config(Word left, Word center, Word right, int64_t center_start)
    : left_(std::move(left)), center_(std::move(center)), right_(std::move(right)),
      center_start_(center_start) {
  if (left_.empty() || right_.empty())
    throw Error(ErrorCode::BadInput, "periodic tails must be nonempty");
  normalize();
}

Config Config::periodic(const Word& w) {
  if (w.empty()) throw Error(ErrorCode::BadInput, "periodic word must be nonempty");
  return Config(w, {}, w, 0);
}

Config Config::constant(Symbol s) { return Config({s}, {}, {s}, 0); }

Word Config::window(int64_t from, int64_t len) const {
  Word w;
  w.reserve(static_cast<size_t>(len));
  for (int64_t i = 0; i < len; ++i) w.push_back(symbol_at(from + i));
  return w;
}

Config Config::shifted(int64_t k) const {
  return Config(left_, center_, right_, center_start_ - k);
}

// Tail periods of a bi-infinite sequence are gcd-closed, so the minimal
// eventual right period equals the primitive period of the right word, and a
// configuration is globally periodic iff it is periodic with that value.
static bool globally_periodic_with(const Config& like, int64_t q, int64_t lo, int64_t hi) {
  for (int64_t i = lo; i <= hi; ++i)
    if (like.symbol_at(i) != like.symbol_at(i + q)) return false;
  return true;
}

void Config::normalize() {
  // Work on a copy that still answers symbol_at queries with the raw fields.
  Config raw = *this;  // fields already set; normalize() not re-entered (copy via default)

  int64_t r0 = primitive_period(right_);
  int64_t l0 = primitive_period(left_);
  int64_t cs = center_start_;
  int64_t clen = static_cast<int64_t>(center_.size());

  // Global periodicity check at period r0 over a window wide enough to cover
  // one full left period below the center plus the bridge region.
  int64_t lo = cs - static_cast<int64_t>(left_.size()) - r0 - 1;
  int64_t hi = cs + clen + r0;
  if (globally_periodic_with(raw, r0, lo, hi)) {
    center_.clear();
    center_start_ = 0;
    right_ = raw.window(0, r0);
    left_ = raw.window(-r0, r0);
    return;
  }

  // Right boundary: minimal b such that the tail is exactly r0-periodic on
  // [b, inf). Terminates because the point is not globally periodic.
  int64_t b = cs + clen;
  while (raw.symbol_at(b - 1) == raw.symbol_at(b - 1 + r0)) --b;

  // Left boundary: maximal a such that the tail is exactly l0-periodic on
  // (-inf, a).
  int64_t a = cs;
  while (raw.symbol_at(a) == raw.symbol_at(a - l0)) ++a;

  if (a >= b) {
    center_.clear();
    center_start_ = b;
    right_ = raw.window(b, r0);
    left_ = raw.window(b - l0, l0);
  } else {
    center_ = raw.window(a, b - a);
    center_start_ = a;
    right_ = raw.window(b, r0);
    left_ = raw.window(a - l0, l0);
  }
}

int64_t Config::global_period(int64_t cap) const {
  int64_t r0 = static_cast<int64_t>(right_.size());
  if (!center_.empty()) return 0;  // normalized: nonempty center means aperiodic
  if (r0 > cap) return 0;
  int64_t lo = center_start_ - static_cast<int64_t>(left_.size()) - r0 - 1;
  int64_t hi = center_start_ + r0;
  return globally_periodic_with(*this, r0, lo, hi) ? r0 : 0;
}

size_t Config::hash() const {
  size_t h = 0x9e3779b97f4a7c15ull;
  auto mix = [&h](size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(static_cast<size_t>(center_start_));
  for (Symbol s : left_) mix(static_cast<size_t>(s) + 1);
  mix(0xabcdefull);
  for (Symbol s : center_) mix(static_cast<size_t>(s) + 1);
  mix(0x123456ull);
  for (Symbol s : right_) mix(static_cast<size_t>(s) + 1);
  return h;
}

std::string Config::to_string() const {
  int64_t a0 = std::min<int64_t>(center_start_, 0);
  int64_t b1 = std::max<int64_t>(center_start_ + static_cast<int64_t>(center_.size()), 0);
  int64_t l0 = static_cast<int64_t>(left_.size());
  int64_t r0 = static_cast<int64_t>(right_.size());
  Word lrot = window(a0 - l0, l0);
  Word rrot = window(b1, r0);
  std::string s = "(" + word_to_string(lrot) + ")* ";
  Word before = window(a0, -a0);
  Word after = window(0, b1);
  if (!before.empty()) s += word_to_string(before) + " ";
  s += ".";
  if (!after.empty()) s += " " + word_to_string(after);
  s += " (" + word_to_string(rrot) + ")*";
  return s;
}

namespace {

struct Scanner {
  const std::string& text;
  size_t pos = 0;

  explicit Scanner(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool eat_star() {
    skip_ws();
    if (eat('*')) return true;
    if (text.compare(pos, 4, "^inf") == 0) {
      pos += 4;
      return true;
    }
    return false;
  }

  Word word() {
    skip_ws();
    Word w;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      w.push_back(text[pos] - '0');
      ++pos;
    }
    return w;
  }
};

}  // namespace

Config Config::parse_literal(const std::string& text) {
  Scanner sc(text);
  if (!sc.eat('(')) throw Error(ErrorCode::BadInput, "configuration literal must start with (L)*");
  Word left = sc.word();
  if (left.empty() || !sc.eat(')') || !sc.eat_star())
    throw Error(ErrorCode::BadInput, "malformed left tail in configuration literal");
  Word before = sc.word();
  if (!sc.eat('.')) throw Error(ErrorCode::BadInput, "configuration literal needs an origin dot");
  Word after = sc.word();
  if (!sc.eat('(')) throw Error(ErrorCode::BadInput, "configuration literal must end with (R)*");
  Word right = sc.word();
  if (right.empty() || !sc.eat(')') || !sc.eat_star())
    throw Error(ErrorCode::BadInput, "malformed right tail in configuration literal");
  sc.skip_ws();
  if (sc.pos != text.size()) throw Error(ErrorCode::BadInput, "trailing characters in literal");
  int64_t cs = -static_cast<int64_t>(before.size());
  Word center = concat(before, after);
  return Config(std::move(left), std::move(center), std::move(right), cs);
}

}  // namespace tfg
