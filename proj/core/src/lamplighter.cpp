#include "tfg/lamplighter.hpp"

#include "tfg/errors.hpp"

namespace tfg {

namespace {

struct BlockScan {
  Word unmarked;
  Word marked;
  int64_t len;

  // start of the block occurrence covering pos and whether it is marked
  struct Hit {
    int64_t start = 0;
    bool marked = false;
  };

  std::optional<Hit> covering(const Config& x, int64_t pos) const {
    for (int64_t j = pos - len + 1; j <= pos; ++j) {
      bool um = true, mk = true;
      for (int64_t i = 0; i < len && (um || mk); ++i) {
        Symbol s = x.symbol_at(j + i);
        if (s != unmarked[static_cast<size_t>(i)]) um = false;
        if (s != marked[static_cast<size_t>(i)]) mk = false;
      }
      if (um) return Hit{j, false};
      if (mk) return Hit{j, true};
    }
    return std::nullopt;
  }

  bool block_at(const Config& x, int64_t j) const {
    bool um = true, mk = true;
    for (int64_t i = 0; i < len && (um || mk); ++i) {
      Symbol s = x.symbol_at(j + i);
      if (s != unmarked[static_cast<size_t>(i)]) um = false;
      if (s != marked[static_cast<size_t>(i)]) mk = false;
    }
    return um || mk;
  }
};

}  // namespace

WreathOverZ build_wreath_AZ(const FiniteAbelianGroup& group, const EqualityPolicy& eq) {
  int64_t half = group.order();
  if (half < 2) throw Error(ErrorCode::BadInput, "the lamp group needs at least two elements");
  int64_t L = 2 * half;

  // descending run; the marked variant bumps the symbol 1 to 2, which keeps
  // the pair mutually unbordered (every suffix starts below the first symbol)
  Word unmarked, marked;
  for (int64_t i = L - 1; i >= 0; --i) unmarked.push_back(static_cast<Symbol>(i));
  marked = unmarked;
  marked[static_cast<size_t>(L - 2)] = 2;

  Alphabet alphabet(static_cast<int>(L));
  std::vector<std::pair<CodeKey, Word>> entries = {
      {CodeKey{0, half, half, Word(static_cast<size_t>(L), 0)}, unmarked},
      {CodeKey{1, half, half, Word(static_cast<size_t>(L), 0)}, marked}};
  Codebook book = Codebook::from_entries(alphabet, entries);

  BlockScan scan{unmarked, marked, L};
  ShiftSpace domain = ShiftSpace::full(alphabet);

  // the walk: top tuple rides +L along block runs, bottom tuple rides -L,
  // ends wrap top i <-> bottom i
  auto walk_fwd = [scan, L, half](const Config& x, int64_t pos) -> int64_t {
    auto hit = scan.covering(x, pos);
    if (!hit) return 0;
    int64_t o = pos - hit->start;
    if (o < half) return scan.block_at(x, hit->start + L) ? L : half;
    return scan.block_at(x, hit->start - L) ? -L : -half;
  };
  auto walk_bwd = [scan, L, half](const Config& x, int64_t pos) -> int64_t {
    auto hit = scan.covering(x, pos);
    if (!hit) return 0;
    int64_t o = pos - hit->start;
    if (o < half) return scan.block_at(x, hit->start - L) ? -L : half;
    return scan.block_at(x, hit->start + L) ? L : -half;
  };
  auto walk_node = std::make_shared<NamedNode>(domain, Bounds{2 * L - 1, L}, "lamp_walk",
                                               walk_fwd, walk_bwd);

  WreathOverZ out{group, TfgElement::trusted(walk_node, "pair-preserving block walk", eq),
                  {},   book,
                  unmarked, marked};

  // toggles: the regular action on the A-state (the offset within the top
  // tuple) inside marked blocks
  for (int64_t h = 0; h < group.order(); ++h) {
    auto elem = group.element(h);
    auto toggle = [scan, half, group, elem](const Config& x, int64_t pos) -> int64_t {
      auto hit = scan.covering(x, pos);
      if (!hit || !hit->marked) return 0;
      int64_t o = pos - hit->start;
      if (o >= half) return 0;  // bottom tuple holds no lamp state
      auto state = group.element(o);
      return group.index_of(group.add(state, elem)) - o;
    };
    auto inv = group.negate(elem);
    auto toggle_back = [scan, half, group, inv](const Config& x, int64_t pos) -> int64_t {
      auto hit = scan.covering(x, pos);
      if (!hit || !hit->marked) return 0;
      int64_t o = pos - hit->start;
      if (o >= half) return 0;
      auto state = group.element(o);
      return group.index_of(group.add(state, inv)) - o;
    };
    auto node = std::make_shared<NamedNode>(domain, Bounds{L - 1, half - 1},
                                            "lamp_toggle_" + std::to_string(h), toggle,
                                            toggle_back);
    out.toggles.push_back(TfgElement::trusted(node, "regular action on the lamp state", eq));
  }
  return out;
}

LamplighterPair build_lamplighter(const EqualityPolicy& eq) {
  WreathOverZ wreath = build_wreath_AZ(FiniteAbelianGroup({2}), eq);
  return LamplighterPair{wreath.walk, wreath.toggles[1], wreath.book};
}

}  // namespace tfg
