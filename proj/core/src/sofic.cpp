#include "tfg/sofic.hpp"

#include <algorithm>

#include "tfg/errors.hpp"
#include "tfg/verify.hpp"

namespace tfg {

namespace {

// lexicographically least among the shortest admissible cycles
Word default_period_word(const ShiftSpace& base) {
  for (int64_t q = 1; q <= base.alphabet().size() + 1; ++q) {
    auto words = base.periodic_words(q);
    if (!words.empty()) return words.front();
  }
  throw Error(ErrorCode::InternalInconsistency, "essential shift has no short cycle");
}

}  // namespace

EmbeddingScheme make_scheme(const ShiftSpace& base, Alphabet target, const SchemeOptions& options) {
  if (base.is_full())
    throw Error(ErrorCode::BadInput, "the source must be a vertex shift; full shifts embed as-is");
  if (!base.transitive()) throw Error(ErrorCode::NotTransitive, "the source must be transitive");

  EmbeddingScheme scheme{base, std::move(target), {}, {}, 0, {}, {}, 0};
  scheme.transition_radius = base.joining_radius();
  scheme.period_word = options.period_word ? *options.period_word : default_period_word(base);
  if (!base.cyclically_admissible(scheme.period_word))
    throw Error(ErrorCode::BadInput, "period word does not wrap admissibly");

  int64_t p = scheme.period();
  int64_t r = scheme.transition_radius;

  if (options.codebook) {
    scheme.codebook = *options.codebook;
  } else {
    for (Symbol a : base.live_symbols()) {
      scheme.codebook[a] =
          Codebook::canonical_word(CodeKey{a, 0, 0, {}}, 1 + p + r);
    }
  }
  std::vector<Word> words;
  for (auto& [a, w] : scheme.codebook) {
    if (!base.symbol_live(a)) throw Error(ErrorCode::InvalidCodebook, "code word for a dead symbol");
    if (static_cast<int64_t>(w.size()) < 1 + p + r)
      throw Error(ErrorCode::InvalidCodebook, "code words need length >= 1+p+r");
    scheme.target.check_word(w);
    words.push_back(w);
    scheme.max_word_length = std::max(scheme.max_word_length, static_cast<int64_t>(w.size()));
  }
  for (Symbol a : base.live_symbols())
    if (!scheme.codebook.count(a))
      throw Error(ErrorCode::InvalidCodebook, "missing code word for a live symbol");
  BorderReport rep = check_mutually_unbordered(words);
  if (!rep.ok)
    throw Error(ErrorCode::InvalidCodebook, "code words share the border " +
                                                word_to_string(rep.border));

  for (Symbol a : base.live_symbols()) {
    auto left = base.join_word(scheme.period_word.back(), a, static_cast<int>(r));
    auto right = base.join_word(a, scheme.period_word.front(), static_cast<int>(r));
    if (!left || !right)
      throw Error(ErrorCode::InternalInconsistency, "bridge words exceed the joining radius");
    scheme.left_bridge[a] = *left;
    scheme.right_bridge[a] = *right;
  }
  return scheme;
}

namespace {

struct SoficOcc {
  int64_t start = 0;
  int64_t len = 0;
  Symbol symbol = 0;
  bool removed = false;
  bool erased = false;
};

struct SoficContext {
  std::vector<SoficOcc> occs;

  int covering(int64_t pos) const {
    for (size_t i = 0; i < occs.size(); ++i)
      if (occs[i].start <= pos && pos < occs[i].start + occs[i].len) return static_cast<int>(i);
    return -1;
  }
  int left_adjacent(int i) const {
    if (i > 0 &&
        occs[static_cast<size_t>(i - 1)].start + occs[static_cast<size_t>(i - 1)].len ==
            occs[static_cast<size_t>(i)].start)
      return i - 1;
    return -1;
  }
  int right_adjacent(int i) const {
    if (i + 1 < static_cast<int>(occs.size()) &&
        occs[static_cast<size_t>(i)].start + occs[static_cast<size_t>(i)].len ==
            occs[static_cast<size_t>(i + 1)].start)
      return i + 1;
    return -1;
  }
  int left_alive(int i) const {
    int h = left_adjacent(i);
    return (h >= 0 && !occs[static_cast<size_t>(h)].removed) ? h : -1;
  }
  int right_alive(int i) const {
    int j = right_adjacent(i);
    return (j >= 0 && !occs[static_cast<size_t>(j)].removed) ? j : -1;
  }
};

// removal: a preblock dies when a forbidden subscript pair touches it;
// erasure: a survivor with no surviving neighbor on either side
void mark_blocks(const ShiftSpace& base, SoficContext& ctx) {
  for (size_t i = 0; i + 1 < ctx.occs.size(); ++i) {
    SoficOcc& a = ctx.occs[i];
    SoficOcc& b = ctx.occs[i + 1];
    if (a.start + a.len == b.start && !base.allows(a.symbol, b.symbol)) {
      a.removed = true;
      b.removed = true;
    }
  }
  for (size_t i = 0; i < ctx.occs.size(); ++i) {
    SoficOcc& o = ctx.occs[i];
    if (o.removed) continue;
    bool lonely = ctx.left_alive(static_cast<int>(i)) < 0 &&
                  ctx.right_alive(static_cast<int>(i)) < 0;
    if (lonely) o.erased = true;
  }
}

template <typename ReadFn>
std::vector<SoficOcc> scan_occurrences(const EmbeddingScheme& scheme, ReadFn read, int64_t from,
                                       int64_t to) {
  std::vector<SoficOcc> out;
  for (int64_t at = from; at < to; ++at) {
    for (const auto& [a, w] : scheme.codebook) {
      int64_t len = static_cast<int64_t>(w.size());
      if (at + len > to) continue;
      bool match = true;
      for (int64_t i = 0; i < len; ++i)
        if (read(at + i) != w[static_cast<size_t>(i)]) {
          match = false;
          break;
        }
      if (match) {
        out.push_back({at, len, a, false, false});
        at += len - 1;
        break;
      }
    }
  }
  return out;
}

SoficContext context_around(const EmbeddingScheme& scheme, const Config& x, int64_t pos) {
  int64_t L = scheme.max_word_length;
  SoficContext ctx;
  ctx.occs = scan_occurrences(
      scheme, [&](int64_t i) { return x.symbol_at(i); }, pos - 5 * L - 2, pos + 5 * L + 2);
  mark_blocks(scheme.base, ctx);
  return ctx;
}

// cell roles relative to one live block
struct SoficCell {
  int occ = -1;
  int64_t offset = 0;  // 0 sim; 1..p periodic; p+1..p+j transition (used)
};

bool block_alive(const SoficOcc& o) { return !o.removed && !o.erased; }

std::optional<SoficCell> sofic_cell_at(const EmbeddingScheme& scheme, const SoficContext& ctx,
                                       int64_t pos) {
  int ci = ctx.covering(pos);
  if (ci < 0) return std::nullopt;
  const SoficOcc& o = ctx.occs[static_cast<size_t>(ci)];
  if (!block_alive(o)) return std::nullopt;
  int64_t off = pos - o.start;
  int64_t p = scheme.period();
  if (off <= p) return SoficCell{ci, off};
  // transition cells are live only in boundary blocks, along their bridge
  bool leftmost = ctx.left_alive(ci) < 0;
  bool rightmost = ctx.right_alive(ci) < 0;
  int64_t j = off - p;  // 1-based bridge position
  if (leftmost) {
    int64_t used = static_cast<int64_t>(scheme.left_bridge.at(o.symbol).size());
    if (j <= used) return SoficCell{ci, off};
  }
  if (rightmost) {
    int64_t used = static_cast<int64_t>(scheme.right_bridge.at(o.symbol).size());
    if (j <= used) return SoficCell{ci, off};
  }
  return std::nullopt;
}

int64_t sofic_step(const EmbeddingScheme& scheme, const SoficContext& ctx, const SoficCell& cell,
                   bool forward) {
  const SoficOcc& o = ctx.occs[static_cast<size_t>(cell.occ)];
  int64_t p = scheme.period();
  int64_t s = o.start;
  bool leftmost = ctx.left_alive(cell.occ) < 0;
  bool rightmost = ctx.right_alive(cell.occ) < 0;
  const Word& uL = scheme.left_bridge.at(o.symbol);
  const Word& uR = scheme.right_bridge.at(o.symbol);

  if (forward) {
    if (cell.offset == 0) {
      int j = ctx.right_alive(cell.occ);
      if (j >= 0) return ctx.occs[static_cast<size_t>(j)].start;  // next simulating cell
      return uR.empty() ? s + p : s + p + 1;                      // right bridge
    }
    if (cell.offset <= p) {
      if (cell.offset > 1) return s + cell.offset - 1;  // periodic cells run right to left
      int h = ctx.left_alive(cell.occ);
      if (h >= 0) return ctx.occs[static_cast<size_t>(h)].start + p;
      return uL.empty() ? s : s + p + 1;  // left bridge into the simulating cell
    }
    int64_t j = cell.offset - p;
    if (rightmost && j <= static_cast<int64_t>(uR.size())) {
      return j < static_cast<int64_t>(uR.size()) ? s + p + j + 1 : s + p;
    }
    // leftmost bridge
    return j < static_cast<int64_t>(uL.size()) ? s + p + j + 1 : s;
  }

  if (cell.offset == 0) {
    int h = ctx.left_alive(cell.occ);
    if (h >= 0) return ctx.occs[static_cast<size_t>(h)].start;
    return uL.empty() ? s + 1 : s + p + static_cast<int64_t>(uL.size());
  }
  if (cell.offset <= p) {
    if (cell.offset < p) return s + cell.offset + 1;
    int j = ctx.right_alive(cell.occ);
    if (j >= 0) return ctx.occs[static_cast<size_t>(j)].start + 1;
    return uR.empty() ? s : s + p + static_cast<int64_t>(uR.size());
  }
  int64_t j = cell.offset - p;
  if (rightmost && j <= static_cast<int64_t>(uR.size())) {
    return j > 1 ? s + p + j - 1 : s;
  }
  (void)leftmost;
  return j > 1 ? s + p + j - 1 : s + 1;
}

}  // namespace

SoficParse parse_sofic_belts(const EmbeddingScheme& scheme, const Word& window) {
  SoficContext ctx;
  ctx.occs = scan_occurrences(
      scheme, [&](int64_t i) { return window[static_cast<size_t>(i)]; }, 0,
      static_cast<int64_t>(window.size()));
  mark_blocks(scheme.base, ctx);

  SoficParse parse;
  for (const SoficOcc& o : ctx.occs)
    parse.blocks.push_back({o.start, o.symbol, o.removed, o.erased});

  int64_t p = scheme.period();
  for (size_t i = 0; i < ctx.occs.size();) {
    if (!block_alive(ctx.occs[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (ctx.right_alive(static_cast<int>(j)) == static_cast<int>(j) + 1) ++j;
    SoficBelt belt;
    for (size_t k = i; k <= j; ++k) belt.block_indices.push_back(static_cast<int64_t>(k));
    // cycle word: subscripts, right bridge, t per block, left bridge
    for (size_t k = i; k <= j; ++k) belt.cycle_word.push_back(ctx.occs[k].symbol);
    const Word& uR = scheme.right_bridge.at(ctx.occs[j].symbol);
    belt.cycle_word.insert(belt.cycle_word.end(), uR.begin(), uR.end());
    for (size_t k = i; k <= j; ++k)
      belt.cycle_word.insert(belt.cycle_word.end(), scheme.period_word.begin(),
                             scheme.period_word.end());
    const Word& uL = scheme.left_bridge.at(ctx.occs[i].symbol);
    belt.cycle_word.insert(belt.cycle_word.end(), uL.begin(), uL.end());
    parse.belts.push_back(std::move(belt));
    i = j + 1;
  }
  return parse;
}

TfgElement sofic_follow_element(const EmbeddingScheme& scheme, const VerifyPolicy& vp,
                                const EqualityPolicy& eq) {
  int64_t L = scheme.max_word_length;
  Bounds bounds{6 * L + 4, 2 * L};
  auto stepper = [scheme](bool forward) {
    return [scheme, forward](const Config& x, int64_t pos) -> int64_t {
      SoficContext ctx = context_around(scheme, x, pos);
      auto cell = sofic_cell_at(scheme, ctx, pos);
      if (!cell) return 0;
      return sofic_step(scheme, ctx, *cell, forward) - pos;
    };
  };
  auto node = std::make_shared<NamedNode>(ShiftSpace::full(scheme.target), bounds, "sofic_follow",
                                          stepper(true), stepper(false));
  VerifyPolicy policy = vp;
  if (policy.probe_words.empty())
    for (const auto& [a, w] : scheme.codebook) policy.probe_words.push_back(w);
  VerifyOutcome out = verify_bijective(node, policy, eq);
  if (!out.ok)
    throw Error(ErrorCode::InternalInconsistency, "sofic follow element failed verification");
  return *out.element;
}

ReaderPtr sofic_symbol_reader(const EmbeddingScheme& scheme) {
  int target_size = scheme.base.alphabet().size();
  int64_t L = scheme.max_word_length;
  Symbol fallback = scheme.period_word.front();
  auto fn = [scheme, fallback](const Config& x, int64_t pos) -> Symbol {
    SoficContext ctx = context_around(scheme, x, pos);
    auto cell = sofic_cell_at(scheme, ctx, pos);
    if (!cell) return fallback;
    const SoficOcc& o = ctx.occs[static_cast<size_t>(cell->occ)];
    int64_t p = scheme.period();
    if (cell->offset == 0) return o.symbol;
    if (cell->offset <= p)
      return scheme.period_word[static_cast<size_t>(p - cell->offset)];  // reversed layout
    int64_t j = cell->offset - p;
    bool leftmost = ctx.left_alive(cell->occ) < 0;
    const Word& bridge =
        leftmost ? scheme.left_bridge.at(o.symbol) : scheme.right_bridge.at(o.symbol);
    return bridge[static_cast<size_t>(j - 1)];
  };
  return std::make_shared<FnReader>(target_size, 6 * L + 4, "sofic_symbols", fn);
}

TfgElement embed_element(const EmbeddingScheme& scheme, const TfgElement& g,
                         const TfgElement& follow, const ReaderPtr& reader,
                         const EqualityPolicy& eq) {
  if (g.domain() != scheme.base)
    throw Error(ErrorCode::DomainMismatch, "element does not live on the scheme's source shift");
  return simulate(g, follow, reader, eq);
}

Config encode_configuration(const EmbeddingScheme& scheme, const Config& x) {
  auto encode = [&](const Word& w) {
    Word out;
    for (Symbol a : w) {
      const Word& code = scheme.codebook.at(a);
      out.insert(out.end(), code.begin(), code.end());
    }
    return out;
  };
  Word left = encode(x.left());
  // align the code block of the symbol at center_start with position 0
  int64_t consumed = std::max<int64_t>(1, static_cast<int64_t>(x.center().size()));
  Word center = encode(x.window(x.center_start(), consumed));
  // the right tail resumes after the consumed symbols, possibly mid-period
  int64_t rot = (consumed - static_cast<int64_t>(x.center().size())) %
                static_cast<int64_t>(x.right().size());
  Word right = encode(rotate_left(x.right(), rot));
  return Config(left, center, right, 0);
}

}  // namespace tfg
