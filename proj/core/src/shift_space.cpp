#include "tfg/shift_space.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace tfg {

ShiftSpace::ShiftSpace(Alphabet alphabet, std::optional<std::vector<std::vector<bool>>> adjacency)
    : alphabet_(std::move(alphabet)), adjacency_(std::move(adjacency)) {
  size_t n = static_cast<size_t>(alphabet_.size());
  if (adjacency_) {
    if (adjacency_->size() != n)
      throw Error(ErrorCode::BadInput, "adjacency matrix size does not match alphabet");
    for (const auto& row : *adjacency_)
      if (row.size() != n) throw Error(ErrorCode::BadInput, "adjacency matrix is not square");
  }
  live_.assign(n, true);
  live_count_ = static_cast<int>(n);
  if (adjacency_) repair_essential();
}

ShiftSpace ShiftSpace::full(Alphabet alphabet) { return ShiftSpace(std::move(alphabet), std::nullopt); }

ShiftSpace ShiftSpace::vertex(Alphabet alphabet, std::vector<std::vector<bool>> adjacency) {
  return ShiftSpace(std::move(alphabet), std::move(adjacency));
}

ShiftSpace ShiftSpace::golden_mean() {
  return vertex(Alphabet(2), {{true, true}, {true, false}});
}

void ShiftSpace::repair_essential() {
  size_t n = static_cast<size_t>(alphabet_.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t a = 0; a < n; ++a) {
      if (!live_[a]) continue;
      bool has_succ = false, has_pred = false;
      for (size_t b = 0; b < n; ++b) {
        if (live_[b] && (*adjacency_)[a][b]) has_succ = true;
        if (live_[b] && (*adjacency_)[b][a]) has_pred = true;
      }
      if (!has_succ || !has_pred) {
        live_[a] = false;
        changed = true;
      }
    }
  }
  live_count_ = static_cast<int>(std::count(live_.begin(), live_.end(), true));
  if (live_count_ == 0) throw Error(ErrorCode::BadInput, "vertex shift is empty after pruning");
}

bool ShiftSpace::admissible(const Word& w) const {
  for (size_t i = 0; i < w.size(); ++i) {
    if (!alphabet_.contains(w[i]) || !symbol_live(w[i])) return false;
    if (i > 0 && !allows(w[i - 1], w[i])) return false;
  }
  return true;
}

bool ShiftSpace::admissible_config(const Config& x) const {
  if (is_full()) return true;
  // the representation is finite: checking one full period of each tail plus
  // the center and junctions suffices
  int64_t lo = x.center_start() - static_cast<int64_t>(x.left().size()) - 1;
  int64_t hi = x.center_start() + static_cast<int64_t>(x.center().size()) +
               static_cast<int64_t>(x.right().size()) + 1;
  for (int64_t i = lo; i < hi; ++i) {
    Symbol a = x.symbol_at(i);
    if (!alphabet_.contains(a) || !symbol_live(a)) return false;
    if (!allows(a, x.symbol_at(i + 1))) return false;
  }
  return true;
}

bool ShiftSpace::cyclically_admissible(const Word& w) const {
  if (w.empty()) return true;
  return admissible(w) && allows(w.back(), w.front());
}

bool ShiftSpace::transitive() const {
  if (is_full()) return true;
  // strong connectivity of the live subgraph: forward and backward BFS from
  // the first live symbol must reach every live symbol
  size_t n = static_cast<size_t>(alphabet_.size());
  Symbol start = -1;
  for (size_t a = 0; a < n; ++a)
    if (live_[a]) {
      start = static_cast<Symbol>(a);
      break;
    }
  auto bfs = [&](bool forward) {
    std::vector<bool> seen(n, false);
    std::deque<Symbol> q{start};
    seen[static_cast<size_t>(start)] = true;
    while (!q.empty()) {
      Symbol a = q.front();
      q.pop_front();
      for (size_t b = 0; b < n; ++b) {
        if (!live_[b] || seen[b]) continue;
        bool edge = forward ? allows(a, static_cast<Symbol>(b)) : allows(static_cast<Symbol>(b), a);
        if (edge) {
          seen[b] = true;
          q.push_back(static_cast<Symbol>(b));
        }
      }
    }
    for (size_t a = 0; a < n; ++a)
      if (live_[a] && !seen[a]) return false;
    return true;
  };
  return bfs(true) && bfs(false);
}

std::vector<Symbol> ShiftSpace::live_symbols() const {
  std::vector<Symbol> out;
  for (int a = 0; a < alphabet_.size(); ++a)
    if (live_[static_cast<size_t>(a)]) out.push_back(a);
  return out;
}

std::vector<Symbol> ShiftSpace::successors(Symbol a) const {
  std::vector<Symbol> out;
  for (int b = 0; b < alphabet_.size(); ++b)
    if (symbol_live(b) && allows(a, b)) out.push_back(b);
  return out;
}

std::vector<Symbol> ShiftSpace::predecessors(Symbol a) const {
  std::vector<Symbol> out;
  for (int b = 0; b < alphabet_.size(); ++b)
    if (symbol_live(b) && allows(b, a)) out.push_back(b);
  return out;
}

std::vector<Word> ShiftSpace::periodic_words(int64_t p) const {
  std::vector<Word> out;
  for_each_admissible_word(*this, p, [&](const Word& w) {
    if (w.empty() || allows(w.back(), w.front())) out.push_back(w);
    return true;
  });
  return out;
}

int64_t ShiftSpace::periodic_count(int64_t p) const {
  if (is_full()) {
    int64_t c = 1;
    for (int64_t i = 0; i < p; ++i) c *= alphabet_.size();
    return c;
  }
  // trace of the p-th power of the live adjacency matrix
  size_t n = static_cast<size_t>(alphabet_.size());
  std::vector<std::vector<int64_t>> m(n, std::vector<int64_t>(n, 0)), acc;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      m[a][b] = (live_[a] && live_[b] && (*adjacency_)[a][b]) ? 1 : 0;
  acc = m;
  for (int64_t step = 1; step < p; ++step) {
    std::vector<std::vector<int64_t>> next(n, std::vector<int64_t>(n, 0));
    for (size_t a = 0; a < n; ++a)
      for (size_t k = 0; k < n; ++k) {
        if (acc[a][k] == 0) continue;
        for (size_t b = 0; b < n; ++b) next[a][b] += acc[a][k] * m[k][b];
      }
    acc = std::move(next);
  }
  int64_t tr = 0;
  for (size_t a = 0; a < n; ++a) tr += acc[a][a];
  return tr;
}

std::optional<Word> ShiftSpace::join_word(Symbol a, Symbol b, int max_len) const {
  if (is_full()) return Word{};
  // BFS over (suffix symbol, depth); reconstruct the lexicographically least
  // shortest word by exploring symbols in ascending order at each level
  for (int len = 0; len <= max_len; ++len) {
    // depth-first in lexicographic order with exact length len
    Word w;
    std::vector<Symbol> cursor(static_cast<size_t>(len) + 1, 0);
    int depth = 0;
    while (true) {
      if (depth == len) {
        Symbol last = len == 0 ? a : w.back();
        if (allows(last, b)) return w;
        if (len == 0) break;
        --depth;
        ++cursor[static_cast<size_t>(depth)];
        w.pop_back();
        continue;
      }
      if (cursor[static_cast<size_t>(depth)] >= alphabet_.size()) {
        if (depth == 0) break;
        --depth;
        ++cursor[static_cast<size_t>(depth)];
        w.pop_back();
        continue;
      }
      Symbol s = cursor[static_cast<size_t>(depth)];
      Symbol prev = depth == 0 ? a : w.back();
      if (!symbol_live(s) || !allows(prev, s)) {
        ++cursor[static_cast<size_t>(depth)];
        continue;
      }
      w.push_back(s);
      ++depth;
      cursor[static_cast<size_t>(depth)] = 0;
    }
  }
  return std::nullopt;
}

int ShiftSpace::joining_radius(int max_len) const {
  if (is_full()) return 0;
  int r = 0;
  for (Symbol a : live_symbols())
    for (Symbol b : live_symbols()) {
      auto u = join_word(a, b, max_len);
      if (!u) throw Error(ErrorCode::NotTransitive, "symbols cannot be joined");
      r = std::max(r, static_cast<int>(u->size()));
    }
  return r;
}

Symbol ShiftSpace::any_successor(Symbol a) const {
  for (int b = 0; b < alphabet_.size(); ++b)
    if (symbol_live(b) && allows(a, b)) return b;
  throw Error(ErrorCode::InternalInconsistency, "essential shift lost a successor");
}

Symbol ShiftSpace::any_predecessor(Symbol a) const {
  for (int b = 0; b < alphabet_.size(); ++b)
    if (symbol_live(b) && allows(b, a)) return b;
  throw Error(ErrorCode::InternalInconsistency, "essential shift lost a predecessor");
}

Config ShiftSpace::embed_word(const Word& w, int64_t pos) const {
  if (w.empty()) throw Error(ErrorCode::BadInput, "cannot embed an empty word");
  if (!admissible(w)) throw Error(ErrorCode::OffLanguage, "word not admissible in the shift");
  if (is_full()) {
    return Config({0}, w, {0}, pos);
  }
  // Right stem: walk successors from w.back() until a symbol repeats; the
  // repeated segment becomes the right period.
  Word rpath{w.back()};
  size_t rcut = 0;
  while (true) {
    Symbol nxt = any_successor(rpath.back());
    bool closed = false;
    for (size_t i = 0; i < rpath.size(); ++i)
      if (rpath[i] == nxt) {
        rcut = i;
        closed = true;
        break;
      }
    rpath.push_back(nxt);
    if (closed) break;
  }
  // rpath = [w.back(), s1, .., s_k] with s_k == rpath[rcut]
  Word rcycle(rpath.begin() + static_cast<std::ptrdiff_t>(rcut), rpath.end() - 1);

  // Left stem, symmetric: predecessors from w.front() until the front repeats.
  Word lpath{w.front()};
  while (true) {
    Symbol prv = any_predecessor(lpath.front());
    bool closed = false;
    for (size_t i = 0; i < lpath.size(); ++i)
      if (lpath[i] == prv) {
        closed = true;
        break;
      }
    lpath.insert(lpath.begin(), prv);
    if (closed) break;
  }
  // lpath = [c, y1, .., w.front()] with c reappearing at some index lcut >= 1
  size_t lcut = 1;
  for (size_t i = 1; i < lpath.size(); ++i)
    if (lpath[i] == lpath.front()) {
      lcut = i;
      break;
    }
  Word lcycle(lpath.begin(), lpath.begin() + static_cast<std::ptrdiff_t>(lcut));

  size_t m = lpath.size() - 1;  // index of w.front() in lpath
  Word center(lpath.begin() + static_cast<std::ptrdiff_t>(lcut),
              lpath.begin() + static_cast<std::ptrdiff_t>(m));
  center.insert(center.end(), w.begin(), w.end());
  center.insert(center.end(), rpath.begin() + 1, rpath.end() - 1);
  int64_t start = pos - static_cast<int64_t>(m - lcut);
  return Config(lcycle, center, rcycle, start);
}

bool ShiftSpace::operator==(const ShiftSpace& o) const {
  if (alphabet_.size() != o.alphabet_.size()) return false;
  if (adjacency_.has_value() != o.adjacency_.has_value()) return false;
  if (adjacency_ && *adjacency_ != *o.adjacency_) return false;
  return true;
}

}  // namespace tfg
