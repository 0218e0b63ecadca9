#include "tfg/belt.hpp"

#include <algorithm>

#include "tfg/errors.hpp"
#include "tfg/verify.hpp"

namespace tfg {

GraphProductSpec GraphProductSpec::raag(int64_t n,
                                        const std::vector<std::pair<int64_t, int64_t>>& edges) {
  GraphProductSpec spec;
  for (int64_t i = 0; i < n; ++i) spec.add_vertex(i, NodeGroup::free_cyclic());
  for (auto [u, v] : edges) spec.add_edge(u, v);
  return spec;
}

void GraphProductSpec::add_vertex(int64_t id, NodeGroup group, int64_t slack) {
  if (!vertices.empty() && vertices.back().id >= id)
    throw Error(ErrorCode::BadInput, "vertex ids must be added in ascending order");
  if (slack < 1) throw Error(ErrorCode::BadInput, "slack constant must be >= 1");
  Vertex v;
  v.id = id;
  v.group = group;
  v.slack = slack;
  if (group.kind == NodeGroupKind::Cyclic) {
    if (group.order < 2) throw Error(ErrorCode::BadInput, "cyclic node order must be >= 2");
    v.node_alphabet = group.order;
  } else {
    v.node_alphabet = 2;
  }
  vertices.push_back(v);
}

void GraphProductSpec::add_edge(int64_t u, int64_t v) {
  if (u == v) throw Error(ErrorCode::BadInput, "edges are irreflexive");
  (void)vertex(u);
  (void)vertex(v);
  edges.insert({std::min(u, v), std::max(u, v)});
}

bool GraphProductSpec::has_edge(int64_t u, int64_t v) const {
  return edges.count({std::min(u, v), std::max(u, v)}) > 0;
}

const GraphProductSpec::Vertex& GraphProductSpec::vertex(int64_t id) const {
  for (const Vertex& v : vertices)
    if (v.id == id) return v;
  throw Error(ErrorCode::BadInput, "unknown vertex " + std::to_string(id));
}

int64_t GraphProductSpec::cell_cap(int64_t u) const { return slack_multiplier * vertex(u).slack; }

void GraphProductSpec::validate() const {
  for (const Vertex& v : vertices) {
    if (v.slack < 1) throw Error(ErrorCode::BadInput, "slack constant must be >= 1");
    if (v.group.kind == NodeGroupKind::Cyclic && v.group.order < 2)
      throw Error(ErrorCode::BadInput, "cyclic node order must be >= 2");
  }
  for (auto [u, v] : edges)
    if (u == v) throw Error(ErrorCode::BadInput, "edges are irreflexive");
}

namespace {

struct Occ {
  int64_t start = 0;
  int64_t len = 0;
  CodeKey key;

  int64_t end() const { return start + len; }
};

// Occurrences around a position, complete for every occurrence that can touch
// [pos - maxlen, pos + maxlen] or its immediate neighbors.
struct LocalContext {
  std::vector<Occ> occs;

  int covering(int64_t p) const {
    for (size_t i = 0; i < occs.size(); ++i)
      if (occs[i].start <= p && p < occs[i].end()) return static_cast<int>(i);
    return -1;
  }

  // neighbor adjacent by position, any color
  int left_adjacent(int i) const {
    if (i > 0 && occs[static_cast<size_t>(i - 1)].end() == occs[static_cast<size_t>(i)].start)
      return i - 1;
    return -1;
  }
  int right_adjacent(int i) const {
    if (i + 1 < static_cast<int>(occs.size()) &&
        occs[static_cast<size_t>(i)].end() == occs[static_cast<size_t>(i + 1)].start)
      return i + 1;
    return -1;
  }
};

LocalContext context_around(const Codebook& book, const Config& x, int64_t pos) {
  int64_t L = book.max_word_length();
  LocalContext ctx;
  auto found = book.occurrences_in(x, pos - 3 * L - 2, pos + 3 * L + 2);
  ctx.occs.reserve(found.size());
  for (auto& [at, key] : found) {
    Occ o;
    o.start = at;
    o.key = key;
    o.len = static_cast<int64_t>(book.word_for(key).size());
    ctx.occs.push_back(o);
  }
  return ctx;
}

bool blocks_clash(const GraphProductSpec& spec, const Occ& left, const Occ& right) {
  // junction perturbation applies between adjacent blocks of distinct,
  // non-commuting colors
  return left.key.is_block() && right.key.is_block() && left.key.u != right.key.u &&
         !spec.has_edge(left.key.u, right.key.u);
}

// true when block i's leftmost top cell is hosted by the left neighbor
bool top_first_relocated(const GraphProductSpec& spec, const LocalContext& ctx, int i) {
  int h = ctx.left_adjacent(i);
  if (h < 0) return false;
  const Occ& self = ctx.occs[static_cast<size_t>(i)];
  const Occ& left = ctx.occs[static_cast<size_t>(h)];
  return blocks_clash(spec, left, self) && self.key.u > left.key.u;
}

// true when block i's rightmost bottom cell is hosted by the right neighbor
bool bottom_last_relocated(const GraphProductSpec& spec, const LocalContext& ctx, int i) {
  int j = ctx.right_adjacent(i);
  if (j < 0) return false;
  const Occ& self = ctx.occs[static_cast<size_t>(i)];
  const Occ& right = ctx.occs[static_cast<size_t>(j)];
  return blocks_clash(spec, self, right) && self.key.u > right.key.u;
}

struct CellRef {
  int occ = -1;
  CellRow row = CellRow::Top;
  int64_t index = 0;
};

int64_t cell_position(const GraphProductSpec& spec, const LocalContext& ctx, const CellRef& ref) {
  const Occ& o = ctx.occs[static_cast<size_t>(ref.occ)];
  if (ref.row == CellRow::Top) {
    if (ref.index == 0 && top_first_relocated(spec, ctx, ref.occ)) {
      const Occ& host = ctx.occs[static_cast<size_t>(ctx.left_adjacent(ref.occ))];
      return host.start + host.key.a + host.key.b - 1;
    }
    return o.start + ref.index;
  }
  if (ref.index == o.key.b - 1 && bottom_last_relocated(spec, ctx, ref.occ)) {
    const Occ& host = ctx.occs[static_cast<size_t>(ctx.right_adjacent(ref.occ))];
    return host.start;
  }
  return o.start + o.key.a + ref.index;
}

Symbol cell_symbol(const LocalContext& ctx, const CellRef& ref) {
  const CodeKey& key = ctx.occs[static_cast<size_t>(ref.occ)].key;
  size_t at = ref.row == CellRow::Top ? static_cast<size_t>(ref.index)
                                      : static_cast<size_t>(key.a + ref.index);
  return key.v[at];
}

// neighbor adjacent with the same color (same belt)
int same_color_left(const LocalContext& ctx, int i) {
  int h = ctx.left_adjacent(i);
  if (h < 0) return -1;
  const Occ& a = ctx.occs[static_cast<size_t>(h)];
  const Occ& b = ctx.occs[static_cast<size_t>(i)];
  return (a.key.is_block() && b.key.is_block() && a.key.u == b.key.u) ? h : -1;
}

int same_color_right(const LocalContext& ctx, int i) {
  int j = ctx.right_adjacent(i);
  if (j < 0) return -1;
  const Occ& a = ctx.occs[static_cast<size_t>(i)];
  const Occ& b = ctx.occs[static_cast<size_t>(j)];
  return (a.key.is_block() && b.key.is_block() && a.key.u == b.key.u) ? j : -1;
}

// the u-colored cell at position p, if any
std::optional<CellRef> cell_at(const GraphProductSpec& spec, const LocalContext& ctx, int64_t u,
                               int64_t p) {
  int ci = ctx.covering(p);
  if (ci < 0) return std::nullopt;
  const Occ& cover = ctx.occs[static_cast<size_t>(ci)];
  if (cover.key.is_block() && cover.key.u == u) {
    int64_t c = p - cover.start;
    if (c < cover.key.a) {
      if (c == 0 && top_first_relocated(spec, ctx, ci)) return std::nullopt;  // moved away
      return CellRef{ci, CellRow::Top, c};
    }
    if (c < cover.key.a + cover.key.b) {
      int64_t idx = c - cover.key.a;
      if (idx == cover.key.b - 1 && bottom_last_relocated(spec, ctx, ci)) return std::nullopt;
      return CellRef{ci, CellRow::Bottom, idx};
    }
    return std::nullopt;  // filler tail of the block word
  }
  if (!cover.key.is_block()) return std::nullopt;
  // guests relocated into this (lower-color) block
  if (p == cover.start) {
    int h = ctx.left_adjacent(ci);
    if (h >= 0) {
      const Occ& left = ctx.occs[static_cast<size_t>(h)];
      if (left.key.is_block() && left.key.u == u && blocks_clash(spec, left, cover) &&
          left.key.u > cover.key.u)
        return CellRef{h, CellRow::Bottom, left.key.b - 1};
    }
  }
  if (p == cover.start + cover.key.a + cover.key.b - 1) {
    int j = ctx.right_adjacent(ci);
    if (j >= 0) {
      const Occ& right = ctx.occs[static_cast<size_t>(j)];
      if (right.key.is_block() && right.key.u == u && blocks_clash(spec, cover, right) &&
          right.key.u > cover.key.u)
        return CellRef{j, CellRow::Top, 0};
    }
  }
  return std::nullopt;
}

// successor (forward = true) or predecessor of a cell along its belt cycle
CellRef step_cell(const LocalContext& ctx, const CellRef& ref, bool forward) {
  const Occ& o = ctx.occs[static_cast<size_t>(ref.occ)];
  int64_t a = o.key.a, b = o.key.b;
  if (forward) {
    if (ref.row == CellRow::Top) {
      if (ref.index + 1 < a) return {ref.occ, CellRow::Top, ref.index + 1};
      int j = same_color_right(ctx, ref.occ);
      if (j >= 0) return {j, CellRow::Top, 0};
      return {ref.occ, CellRow::Bottom, b - 1};  // right end wrap
    }
    if (ref.index > 0) return {ref.occ, CellRow::Bottom, ref.index - 1};
    int h = same_color_left(ctx, ref.occ);
    if (h >= 0) return {h, CellRow::Bottom, ctx.occs[static_cast<size_t>(h)].key.b - 1};
    return {ref.occ, CellRow::Top, 0};  // left end wrap
  }
  if (ref.row == CellRow::Top) {
    if (ref.index > 0) return {ref.occ, CellRow::Top, ref.index - 1};
    int h = same_color_left(ctx, ref.occ);
    if (h >= 0) return {h, CellRow::Top, ctx.occs[static_cast<size_t>(h)].key.a - 1};
    return {ref.occ, CellRow::Bottom, 0};  // undo the left end wrap
  }
  if (ref.index + 1 < b) return {ref.occ, CellRow::Bottom, ref.index + 1};
  int j = same_color_right(ctx, ref.occ);
  if (j >= 0) return {j, CellRow::Bottom, 0};
  return {ref.occ, CellRow::Top, a - 1};  // undo the right end wrap
}

}  // namespace

BeltParse parse_belts(const GraphProductSpec& spec, const Codebook& book, const Word& window) {
  spec.validate();
  BeltParse parse;
  parse.margin = book.max_word_length() + 2;

  LocalContext ctx;
  for (auto& [at, key] : book.occurrences(window)) {
    Occ o;
    o.start = at;
    o.key = key;
    o.len = static_cast<int64_t>(book.word_for(key).size());
    ctx.occs.push_back(o);
  }

  // belts: maximal runs of adjacent same-color blocks
  for (size_t i = 0; i < ctx.occs.size();) {
    if (!ctx.occs[i].key.is_block()) {
      ++i;
      continue;
    }
    size_t j = i;
    while (same_color_right(ctx, static_cast<int>(j)) == static_cast<int>(j) + 1) ++j;
    Belt belt;
    belt.color = ctx.occs[i].key.u;
    for (size_t k = i; k <= j; ++k) {
      const Occ& o = ctx.occs[k];
      BeltBlock block;
      block.start = o.start;
      block.key = o.key;
      for (int64_t t = 0; t < o.key.a; ++t) {
        CellRef ref{static_cast<int>(k), CellRow::Top, t};
        BeltCell cell;
        cell.position = cell_position(spec, ctx, ref);
        cell.row = CellRow::Top;
        cell.index = t;
        cell.symbol = cell_symbol(ctx, ref);
        cell.relocated = cell.position < o.start;
        block.top.push_back(cell);
      }
      for (int64_t t = 0; t < o.key.b; ++t) {
        CellRef ref{static_cast<int>(k), CellRow::Bottom, t};
        BeltCell cell;
        cell.position = cell_position(spec, ctx, ref);
        cell.row = CellRow::Bottom;
        cell.index = t;
        cell.symbol = cell_symbol(ctx, ref);
        cell.relocated = cell.position >= o.end();
        block.bottom.push_back(cell);
      }
      belt.blocks.push_back(std::move(block));
    }
    parse.belts.push_back(std::move(belt));
    i = j + 1;
  }

  // shared cells at clashing junctions
  for (size_t i = 0; i + 1 < ctx.occs.size(); ++i) {
    const Occ& l = ctx.occs[i];
    const Occ& r = ctx.occs[i + 1];
    if (l.end() != r.start || !blocks_clash(spec, l, r)) continue;
    SharedCellInfo info;
    info.left_color = l.key.u;
    info.right_color = r.key.u;
    info.left_symbol = l.key.v[static_cast<size_t>(l.key.a + l.key.b - 1)];
    info.right_symbol = r.key.v[0];
    info.position = (l.key.u > r.key.u) ? r.start : l.start + l.key.a + l.key.b - 1;
    parse.shared.push_back(info);
  }
  return parse;
}

TfgElement belt_step_element(const GraphProductSpec& spec, const Codebook& book, int64_t u,
                             const VerifyPolicy& vp, const EqualityPolicy& eq) {
  spec.validate();
  (void)spec.vertex(u);
  int64_t L = book.max_word_length();
  Bounds bounds{4 * L + 4, 2 * L};
  auto stepper = [spec, book, u](bool forward) {
    return [spec, book, u, forward](const Config& x, int64_t pos) -> int64_t {
      LocalContext ctx = context_around(book, x, pos);
      auto cell = cell_at(spec, ctx, u, pos);
      if (!cell) return 0;
      CellRef next = step_cell(ctx, *cell, forward);
      return cell_position(spec, ctx, next) - pos;
    };
  };
  auto node = std::make_shared<NamedNode>(
      ShiftSpace::full(book.alphabet()), bounds, "belt_step_u" + std::to_string(u),
      stepper(true), stepper(false));
  VerifyPolicy policy = vp;
  if (policy.probe_words.empty())
    for (const auto& [key, w] : book.entries()) policy.probe_words.push_back(w);
  VerifyOutcome out = verify_bijective(node, policy, eq);
  if (!out.ok)
    throw Error(ErrorCode::InternalInconsistency,
                "belt step for color " + std::to_string(u) + " failed verification");
  return *out.element;
}

ReaderPtr belt_symbol_reader(const GraphProductSpec& spec, const Codebook& book, int64_t u) {
  int target = spec.vertex(u).node_alphabet;
  int64_t L = book.max_word_length();
  auto fn = [spec, book, u](const Config& x, int64_t pos) -> Symbol {
    LocalContext ctx = context_around(book, x, pos);
    auto cell = cell_at(spec, ctx, u, pos);
    if (!cell) return 0;
    return cell_symbol(ctx, *cell);
  };
  return std::make_shared<FnReader>(target, 4 * L + 4, "belt_symbols_u" + std::to_string(u), fn);
}

TfgElement node_base_action(const GraphProductSpec& spec, int64_t u, int64_t exponent,
                            const EqualityPolicy& eq) {
  const auto& vx = spec.vertex(u);
  if (vx.group.kind == NodeGroupKind::FreeCyclic) {
    if (exponent == 0) throw Error(ErrorCode::NotReduced, "zero exponent at a free node");
    TfgElement sigma = TfgElement::shift(ShiftSpace::full(Alphabet(vx.node_alphabet)));
    return power(even_double(sigma, eq), exponent, eq);
  }
  int q = vx.group.order;
  int64_t k = ((exponent % q) + q) % q;
  if (k == 0) throw Error(ErrorCode::NotReduced, "exponent divisible by the node order");
  return power(even_double(TfgElement::dial(q), eq), k, eq);
}

TfgElement node_element(const GraphProductSpec& spec, const Codebook& book, int64_t u,
                        int64_t exponent, const TfgElement& f_u, const ReaderPtr& s_u,
                        const EqualityPolicy& eq) {
  (void)book;
  return simulate(node_base_action(spec, u, exponent, eq), f_u, s_u, eq);
}

TfgElement node_generator(const GraphProductSpec& spec, const Codebook& book, int64_t u,
                          const VerifyPolicy& vp, const EqualityPolicy& eq) {
  TfgElement f = belt_step_element(spec, book, u, vp, eq);
  ReaderPtr s = belt_symbol_reader(spec, book, u);
  return node_element(spec, book, u, 1, f, s, eq);
}

VerifyPolicy builder_verify_policy() {
  VerifyPolicy vp;
  vp.period_bound = 6;
  vp.samples = 400;
  return vp;
}

BeltMachines BeltMachines::build(const GraphProductSpec& spec, std::shared_ptr<Codebook> book,
                                 const VerifyPolicy& vp, const EqualityPolicy& eq) {
  BeltMachines m;
  m.book = std::move(book);
  for (const auto& vx : spec.vertices) {
    TfgElement f = belt_step_element(spec, *m.book, vx.id, vp, eq);
    ReaderPtr s = belt_symbol_reader(spec, *m.book, vx.id);
    m.by_vertex.emplace(vx.id, std::make_pair(std::move(f), std::move(s)));
  }
  return m;
}

const TfgElement& BeltMachines::step(int64_t u) const {
  auto it = by_vertex.find(u);
  if (it == by_vertex.end()) throw Error(ErrorCode::BadInput, "no step element for this vertex");
  return it->second.first;
}

const ReaderPtr& BeltMachines::reader(int64_t u) const {
  auto it = by_vertex.find(u);
  if (it == by_vertex.end()) throw Error(ErrorCode::BadInput, "no reader for this vertex");
  return it->second.second;
}

}  // namespace tfg
