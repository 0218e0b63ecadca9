#pragma once

#include <cstdint>
#include <string>

#include "tfg/word.hpp"

namespace tfg {

/// A bi-infinite, eventually periodic configuration
///
///     ... L L L | C | R R R ...
///
/// where the center word C occupies positions [center_start, center_start+|C|),
/// the right period R repeats from center_start+|C| on, and the left period L
/// repeats leftward from center_start-1. Positions are absolute integers; the
/// origin (head) is always position 0.
///
/// Constructors normalize, so structural equality of fields is equality of
/// configurations (same symbol at every position).
class Config {
 public:
  /// left and right must be nonempty.
  Config(Word left, Word center, Word right, int64_t center_start = 0);

  /// The purely periodic point w w w . w w w with w starting at position 0.
  static Config periodic(const Word& w);

  /// All-constant configuration.
  static Config constant(Symbol s);

  Symbol symbol_at(int64_t i) const {
    int64_t j = i - center_start_;
    if (j >= 0) {
      if (j < static_cast<int64_t>(center_.size())) return center_[static_cast<size_t>(j)];
      j -= static_cast<int64_t>(center_.size());
      return right_[static_cast<size_t>(j % static_cast<int64_t>(right_.size()))];
    }
    int64_t r = (-j - 1) % static_cast<int64_t>(left_.size());
    return left_[left_.size() - 1 - static_cast<size_t>(r)];
  }

  Word window(int64_t from, int64_t len) const;

  /// The configuration y with y_i = x_{i+k}.
  Config shifted(int64_t k) const;

  /// Least q <= cap with symbol_at(i) == symbol_at(i+q) everywhere, or 0.
  int64_t global_period(int64_t cap = 1 << 12) const;

  bool operator==(const Config& o) const {
    return center_start_ == o.center_start_ && left_ == o.left_ && center_ == o.center_ &&
           right_ == o.right_;
  }

  const Word& left() const { return left_; }
  const Word& center() const { return center_; }
  const Word& right() const { return right_; }
  int64_t center_start() const { return center_start_; }

  size_t hash() const;
  std::string to_string() const;

  /// Parses the CLI literal `(L)* A . B (R)*`, origin at the first symbol
  /// after the dot. `(L)^inf` is accepted as a synonym for `(L)*`.
  static Config parse_literal(const std::string& text);

 private:
  void normalize();

  Word left_;
  Word center_;
  Word right_;
  int64_t center_start_ = 0;
};

}  // namespace tfg
