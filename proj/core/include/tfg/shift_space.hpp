#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "tfg/alphabet.hpp"
#include "tfg/config.hpp"
#include "tfg/word.hpp"

namespace tfg {

/// Domain of a topological full group element: either a full shift or a
/// vertex shift (adjacency constraints on consecutive symbols). Vertex shifts
/// are repaired to essential form at construction: symbols without an allowed
/// successor or predecessor are removed until every remaining symbol is
/// bi-extendable.
class ShiftSpace {
 public:
  static ShiftSpace full(Alphabet alphabet);
  static ShiftSpace vertex(Alphabet alphabet, std::vector<std::vector<bool>> adjacency);

  /// Binary shift forbidding the word 11.
  static ShiftSpace golden_mean();

  const Alphabet& alphabet() const { return alphabet_; }
  bool is_full() const { return !adjacency_.has_value(); }

  bool symbol_live(Symbol s) const { return live_[static_cast<size_t>(s)]; }
  int live_count() const { return live_count_; }

  bool allows(Symbol a, Symbol b) const {
    if (!adjacency_) return true;
    return (*adjacency_)[static_cast<size_t>(a)][static_cast<size_t>(b)];
  }

  bool admissible(const Word& w) const;
  bool admissible_config(const Config& x) const;

  /// Admissible and the wrap pair (last, first) is allowed as well.
  bool cyclically_admissible(const Word& w) const;

  bool transitive() const;

  std::vector<Symbol> live_symbols() const;
  std::vector<Symbol> successors(Symbol a) const;
  std::vector<Symbol> predecessors(Symbol a) const;

  /// All words w of length p that wrap to a p-periodic point of the shift,
  /// in lexicographic order. For a full shift this is every word.
  std::vector<Word> periodic_words(int64_t p) const;

  /// Number of p-periodic points; trace of the p-th adjacency power for a
  /// vertex shift, |alphabet|^p for a full shift.
  int64_t periodic_count(int64_t p) const;

  /// Shortest word u (lexicographically least among shortest) with a.u.b
  /// admissible, searched up to max_len. Empty optional if none.
  std::optional<Word> join_word(Symbol a, Symbol b, int max_len) const;

  /// Max over live symbol pairs of |join_word|; the transition radius.
  int joining_radius(int max_len = 64) const;

  /// Extends w by one admissible symbol on the right (smallest), or on the
  /// left. Used to pad vertex-shift windows.
  Symbol any_successor(Symbol a) const;
  Symbol any_predecessor(Symbol a) const;

  /// A canonical admissible bi-infinite padding configuration built from the
  /// word w placed at [pos, pos+|w|), extended admissibly both ways.
  Config embed_word(const Word& w, int64_t pos) const;

  bool operator==(const ShiftSpace& o) const;
  bool operator!=(const ShiftSpace& o) const { return !(*this == o); }

  const std::optional<std::vector<std::vector<bool>>>& adjacency() const { return adjacency_; }

 private:
  ShiftSpace(Alphabet alphabet, std::optional<std::vector<std::vector<bool>>> adjacency);

  void repair_essential();

  Alphabet alphabet_;
  std::optional<std::vector<std::vector<bool>>> adjacency_;
  std::vector<bool> live_;
  int live_count_ = 0;
};

/// Sweeps all admissible words of a given length in lexicographic order,
/// calling fn(word). Aborts early if fn returns false.
template <typename Fn>
void for_each_admissible_word(const ShiftSpace& space, int64_t length, Fn&& fn) {
  if (length == 0) {
    Word w;
    fn(w);
    return;
  }
  Word w;
  w.reserve(static_cast<size_t>(length));
  int n = space.alphabet().size();
  // iterative DFS with explicit symbol cursor per depth
  std::vector<Symbol> cursor(static_cast<size_t>(length), 0);
  int64_t depth = 0;
  while (true) {
    if (cursor[static_cast<size_t>(depth)] >= n) {
      if (depth == 0) return;
      --depth;
      w.pop_back();
      ++cursor[static_cast<size_t>(depth)];
      continue;
    }
    Symbol s = cursor[static_cast<size_t>(depth)];
    bool ok = space.symbol_live(s) && (w.empty() || space.allows(w.back(), s));
    if (!ok) {
      ++cursor[static_cast<size_t>(depth)];
      continue;
    }
    w.push_back(s);
    if (depth + 1 == length) {
      if (!fn(const_cast<const Word&>(w))) return;
      w.pop_back();
      ++cursor[static_cast<size_t>(depth)];
    } else {
      ++depth;
      cursor[static_cast<size_t>(depth)] = 0;
    }
  }
}

}  // namespace tfg
