#include "tfg/cocycle.hpp"

#include <algorithm>
#include <cmath>

#include "tfg/errors.hpp"

namespace tfg {

int64_t ipow(int64_t base, int64_t exp) {
  int64_t r = 1;
  for (int64_t i = 0; i < exp; ++i) {
    if (r > (INT64_MAX / base)) throw Error(ErrorCode::SearchBudgetExceeded, "word space overflow");
    r *= base;
  }
  return r;
}

static Bounds table_bounds(int64_t radius, const std::vector<int32_t>& values) {
  int64_t m = 0;
  for (int32_t v : values)
    if (v != TableNode::kOffLanguage) m = std::max<int64_t>(m, std::abs(static_cast<int64_t>(v)));
  return Bounds{radius, m};
}

TableNode::TableNode(ShiftSpace domain, int64_t radius, std::vector<int32_t> values)
    : CocycleNode(std::move(domain), table_bounds(radius, values)) {
  int64_t expect = ipow(domain_.alphabet().size(), 2 * radius + 1);
  if (static_cast<int64_t>(values.size()) != expect)
    throw Error(ErrorCode::BadInput, "table size does not match radius");
  values_ = std::move(values);
}

int64_t TableNode::rank_of(const Word& w) const {
  int64_t r = 0;
  int sigma = domain_.alphabet().size();
  for (Symbol s : w) r = r * sigma + s;
  return r;
}

Word TableNode::word_of(int64_t rank) const {
  int64_t len = 2 * bounds_.radius + 1;
  int sigma = domain_.alphabet().size();
  Word w(static_cast<size_t>(len));
  for (int64_t i = len - 1; i >= 0; --i) {
    w[static_cast<size_t>(i)] = static_cast<Symbol>(rank % sigma);
    rank /= sigma;
  }
  return w;
}

int64_t TableNode::window_rank(const Config& x, int64_t pos) const {
  int64_t r = 0;
  int sigma = domain_.alphabet().size();
  int64_t n = bounds_.radius;
  for (int64_t i = pos - n; i <= pos + n; ++i) r = r * sigma + x.symbol_at(i);
  return r;
}

int64_t TableNode::eval_at(const Config& x, int64_t pos) const {
  int32_t v = values_[static_cast<size_t>(window_rank(x, pos))];
  if (v == kOffLanguage)
    throw Error(ErrorCode::OffLanguage, "window not admissible for this domain");
  return v;
}

std::shared_ptr<const TableNode> TableNode::constant(ShiftSpace domain, int32_t value) {
  int sigma = domain.alphabet().size();
  std::vector<int32_t> vals(static_cast<size_t>(sigma), value);
  for (int s = 0; s < sigma; ++s)
    if (!domain.symbol_live(s)) vals[static_cast<size_t>(s)] = kOffLanguage;
  return std::make_shared<TableNode>(std::move(domain), 0, std::move(vals));
}

ComposeNode::ComposeNode(NodePtr outer, NodePtr inner)
    : CocycleNode(inner->domain(),
                  Bounds{std::max(inner->bounds().radius,
                                  inner->bounds().max_disp + outer->bounds().radius),
                         outer->bounds().max_disp + inner->bounds().max_disp}),
      outer_(std::move(outer)), inner_(std::move(inner)) {
  if (outer_->domain() != inner_->domain())
    throw Error(ErrorCode::DomainMismatch, "composed rules live on different shifts");
}

int64_t ComposeNode::eval_at(const Config& x, int64_t pos) const {
  int64_t v = inner_->eval_at(x, pos);
  return v + outer_->eval_at(x, pos + v);
}

InverseNode::InverseNode(NodePtr inner)
    : CocycleNode(inner->domain(), Bounds{inner->bounds().radius + inner->bounds().max_disp,
                                          inner->bounds().max_disp}),
      inner_(std::move(inner)) {}

int64_t InverseNode::eval_at(const Config& x, int64_t pos) const {
  int64_t m = inner_->bounds().max_disp;
  for (int64_t k = -m; k <= m; ++k) {
    if (inner_->eval_at(x, pos + k) == -k) return k;
  }
  throw Error(ErrorCode::InternalInconsistency,
              "no preimage offset in range; rule is not a verified bijection");
}

EvenDoubleNode::EvenDoubleNode(NodePtr inner)
    : CocycleNode(inner->domain(), Bounds{2 * inner->bounds().radius, 2 * inner->bounds().max_disp}),
      inner_(std::move(inner)) {
  if (!inner_->domain().is_full())
    throw Error(ErrorCode::DomainMismatch, "even-doubling is defined over full shifts");
}

int64_t EvenDoubleNode::eval_at(const Config& x, int64_t pos) const {
  int64_t n = inner_->bounds().radius;
  Word w(static_cast<size_t>(2 * n + 1));
  for (int64_t i = -n; i <= n; ++i)
    w[static_cast<size_t>(i + n)] = x.symbol_at(pos + 2 * i);
  return 2 * eval_on_window(*inner_, w, n);
}

TableReader::TableReader(ShiftSpace domain, int target_size, int64_t radius,
                         std::vector<Symbol> values)
    : SymbolReader(target_size), domain_(std::move(domain)), radius_(radius),
      values_(std::move(values)) {
  int64_t expect = ipow(domain_.alphabet().size(), 2 * radius + 1);
  if (static_cast<int64_t>(values_.size()) != expect)
    throw Error(ErrorCode::BadInput, "reader table size does not match radius");
}

ReaderPtr TableReader::identity(const ShiftSpace& domain) {
  int sigma = domain.alphabet().size();
  std::vector<Symbol> vals(static_cast<size_t>(sigma));
  for (int s = 0; s < sigma; ++s) vals[static_cast<size_t>(s)] = s;
  return std::make_shared<TableReader>(domain, sigma, 0, std::move(vals));
}

Symbol TableReader::read(const Config& x, int64_t pos) const {
  int64_t r = 0;
  int sigma = domain_.alphabet().size();
  for (int64_t i = pos - radius_; i <= pos + radius_; ++i) r = r * sigma + x.symbol_at(i);
  return values_[static_cast<size_t>(r)];
}

SimulateNode::SimulateNode(NodePtr g, NodePtr f, NodePtr f_inv, ReaderPtr reader)
    : CocycleNode(f->domain(),
                  Bounds{g->bounds().radius * f->bounds().max_disp +
                             std::max(f->bounds().radius, reader->radius()) +
                             g->bounds().max_disp * f->bounds().max_disp,
                         g->bounds().max_disp * f->bounds().max_disp}),
      g_(std::move(g)), f_(std::move(f)), f_inv_(std::move(f_inv)), reader_(std::move(reader)) {
  if (g_->domain().alphabet().size() != reader_->target_alphabet_size())
    throw Error(ErrorCode::DomainMismatch,
                "simulated rule must read the reader's target alphabet");
  if (f_->domain() != f_inv_->domain())
    throw Error(ErrorCode::DomainMismatch, "forward and inverse steps live on different shifts");
}

int64_t SimulateNode::eval_at(const Config& x, int64_t pos) const {
  int64_t ng = g_->bounds().radius;
  Word win(static_cast<size_t>(2 * ng + 1));
  win[static_cast<size_t>(ng)] = reader_->read(x, pos);
  int64_t p = pos;
  for (int64_t i = 1; i <= ng; ++i) {
    p += f_->eval_at(x, p);
    win[static_cast<size_t>(ng + i)] = reader_->read(x, p);
  }
  p = pos;
  for (int64_t i = 1; i <= ng; ++i) {
    p += f_inv_->eval_at(x, p);
    win[static_cast<size_t>(ng - i)] = reader_->read(x, p);
  }
  // an inadmissible window only arises with the head off every simulated
  // structure, where f self-loops and the step count cannot matter
  int64_t m = 0;
  try {
    m = eval_on_window(*g_, win, ng);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OffLanguage) throw;
  }
  int64_t d = 0;
  for (int64_t i = 0; i < m; ++i) d += f_->eval_at(x, pos + d);
  for (int64_t i = 0; i > m; --i) d += f_inv_->eval_at(x, pos + d);
  return d;
}

NamedNode::NamedNode(ShiftSpace domain, Bounds bounds, std::string name, Fn forward, Fn backward)
    : CocycleNode(std::move(domain), bounds), name_(std::move(name)),
      forward_(std::move(forward)), backward_(std::move(backward)) {}

int64_t eval_on_window(const CocycleNode& prog, const Word& window, int64_t center) {
  if (prog.domain().is_full()) {
    Config tmp({0}, window, {0}, -center);
    return prog.eval_at(tmp, 0);
  }
  if (!prog.domain().admissible(window))
    throw Error(ErrorCode::OffLanguage, "window not admissible for this domain");
  Config tmp = prog.domain().embed_word(window, -center);
  return prog.eval_at(tmp, 0);
}

NodePtr invert_node(const NodePtr& node) {
  if (auto c = std::dynamic_pointer_cast<const ComposeNode>(node)) {
    return std::make_shared<ComposeNode>(invert_node(c->inner()), invert_node(c->outer()));
  }
  if (auto i = std::dynamic_pointer_cast<const InverseNode>(node)) {
    return i->inner();
  }
  if (auto e = std::dynamic_pointer_cast<const EvenDoubleNode>(node)) {
    return std::make_shared<EvenDoubleNode>(invert_node(e->inner()));
  }
  if (auto s = std::dynamic_pointer_cast<const SimulateNode>(node)) {
    return std::make_shared<SimulateNode>(invert_node(s->g()), s->f(), s->f_inv(), s->reader());
  }
  if (auto nm = std::dynamic_pointer_cast<const NamedNode>(node)) {
    if (nm->has_backward()) {
      return std::make_shared<NamedNode>(nm->domain(), nm->bounds(), nm->name() + "_inv",
                                         nm->backward(),
                                         [nm](const Config& x, int64_t pos) {
                                           return nm->eval_at(x, pos);
                                         });
    }
  }
  return std::make_shared<InverseNode>(node);
}

std::shared_ptr<const TableNode> tabulate(const NodePtr& prog, int64_t radius) {
  const ShiftSpace& dom = prog->domain();
  int sigma = dom.alphabet().size();
  int64_t total = ipow(sigma, 2 * radius + 1);
  std::vector<int32_t> vals(static_cast<size_t>(total), TableNode::kOffLanguage);
  for_each_admissible_word(dom, 2 * radius + 1, [&](const Word& w) {
    int64_t rank = 0;
    for (Symbol s : w) rank = rank * sigma + s;
    int64_t v;
    if (dom.is_full()) {
      v = eval_on_window(*prog, w, radius);
    } else {
      Config cfg = dom.embed_word(w, -radius);
      v = prog->eval_at(cfg, 0);
    }
    vals[static_cast<size_t>(rank)] = static_cast<int32_t>(v);
    return true;
  });
  return std::make_shared<TableNode>(dom, radius, std::move(vals));
}

std::shared_ptr<const TableNode> minimize_table(std::shared_ptr<const TableNode> table) {
  while (table->bounds().radius > 0) {
    const ShiftSpace& dom = table->domain();
    int sigma = dom.alphabet().size();
    int64_t r = table->bounds().radius;
    int64_t inner_len = 2 * r - 1;
    int64_t inner_total = ipow(sigma, inner_len);
    std::vector<int32_t> reduced(static_cast<size_t>(inner_total), TableNode::kOffLanguage);
    bool reducible = true;
    for (int64_t rank = 0; rank < inner_total && reducible; ++rank) {
      // value of a.w.b must agree over all admissible one-symbol extensions
      bool have = false;
      int32_t common = 0;
      for (int a = 0; a < sigma && reducible; ++a) {
        for (int b = 0; b < sigma; ++b) {
          int64_t full_rank = (a * inner_total + rank) * sigma + b;
          int32_t v = table->value_at_rank(full_rank);
          if (v == TableNode::kOffLanguage) continue;
          if (!have) {
            have = true;
            common = v;
          } else if (v != common) {
            reducible = false;
            break;
          }
        }
      }
      if (have) reduced[static_cast<size_t>(rank)] = common;
    }
    if (!reducible) break;
    table = std::make_shared<TableNode>(dom, r - 1, std::move(reduced));
  }
  return table;
}

}  // namespace tfg
