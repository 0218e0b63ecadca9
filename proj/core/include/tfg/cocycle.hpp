#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "tfg/config.hpp"
#include "tfg/shift_space.hpp"

namespace tfg {

/// Certified upper bounds on a cocycle: the value at x depends only on
/// x restricted to [-radius, radius], and |value| <= max_disp everywhere.
struct Bounds {
  int64_t radius = 0;
  int64_t max_disp = 0;
};

class CocycleNode;
using NodePtr = std::shared_ptr<const CocycleNode>;

/// A locally constant rule x -> shift amount. Table nodes are eager; the
/// composite variants evaluate lazily, which keeps deeply composed
/// constructions (whose certified radii are far beyond exhaustive reach)
/// usable.
class CocycleNode : public std::enable_shared_from_this<CocycleNode> {
 public:
  virtual ~CocycleNode() = default;

  /// Cocycle of the rule at sigma^pos(x), i.e. with the head imagined at
  /// absolute position pos. Reads only x[[pos-radius, pos+radius]].
  virtual int64_t eval_at(const Config& x, int64_t pos) const = 0;

  virtual const char* kind() const = 0;

  const Bounds& bounds() const { return bounds_; }
  const ShiftSpace& domain() const { return domain_; }

 protected:
  CocycleNode(ShiftSpace domain, Bounds bounds) : domain_(std::move(domain)), bounds_(bounds) {}

  ShiftSpace domain_;
  Bounds bounds_;
};

/// Eager rule: values over all admissible windows of length 2*radius+1,
/// stored flat in lexicographic rank order. Inadmissible windows hold a
/// sentinel and evaluating one raises OffLanguage.
class TableNode : public CocycleNode {
 public:
  static constexpr int32_t kOffLanguage = INT32_MIN;

  TableNode(ShiftSpace domain, int64_t radius, std::vector<int32_t> values);

  int64_t eval_at(const Config& x, int64_t pos) const override;
  const char* kind() const override { return "table"; }

  int64_t value_count() const { return static_cast<int64_t>(values_.size()); }
  int32_t value_at_rank(int64_t rank) const { return values_[static_cast<size_t>(rank)]; }
  const std::vector<int32_t>& values() const { return values_; }

  int64_t rank_of(const Word& w) const;
  Word word_of(int64_t rank) const;

  /// Constant rule of the given value (radius 0 over a full shift needs every
  /// symbol mapped to it).
  static std::shared_ptr<const TableNode> constant(ShiftSpace domain, int32_t value);

 private:
  int64_t window_rank(const Config& x, int64_t pos) const;

  std::vector<int32_t> values_;
};

class ComposeNode : public CocycleNode {
 public:
  /// Cocycle of outer∘inner: c(x) = c_in(x) + c_out(sigma^{c_in(x)} x).
  ComposeNode(NodePtr outer, NodePtr inner);

  int64_t eval_at(const Config& x, int64_t pos) const override;
  const char* kind() const override { return "compose"; }

  const NodePtr& outer() const { return outer_; }
  const NodePtr& inner() const { return inner_; }

 private:
  NodePtr outer_;
  NodePtr inner_;
};

class InverseNode : public CocycleNode {
 public:
  explicit InverseNode(NodePtr inner);

  /// The unique k in [-M, M] with c_in(sigma^k x) = -k.
  int64_t eval_at(const Config& x, int64_t pos) const override;
  const char* kind() const override { return "inverse"; }

  const NodePtr& inner() const { return inner_; }

 private:
  NodePtr inner_;
};

class EvenDoubleNode : public CocycleNode {
 public:
  /// c(x) = 2 * c_in(e(x)) with e(x)_i = x_{2i}; full-shift domains only.
  explicit EvenDoubleNode(NodePtr inner);

  int64_t eval_at(const Config& x, int64_t pos) const override;
  const char* kind() const override { return "even_double"; }

  const NodePtr& inner() const { return inner_; }

 private:
  NodePtr inner_;
};

/// Continuous map into a target alphabet, applied at arbitrary head offsets.
class SymbolReader {
 public:
  virtual ~SymbolReader() = default;
  virtual Symbol read(const Config& x, int64_t pos) const = 0;
  virtual int64_t radius() const = 0;
  int target_alphabet_size() const { return target_size_; }

 protected:
  explicit SymbolReader(int target_size) : target_size_(target_size) {}
  int target_size_;
};

using ReaderPtr = std::shared_ptr<const SymbolReader>;

class TableReader : public SymbolReader {
 public:
  TableReader(ShiftSpace domain, int target_size, int64_t radius, std::vector<Symbol> values);

  /// Reader returning the symbol under the head.
  static ReaderPtr identity(const ShiftSpace& domain);

  Symbol read(const Config& x, int64_t pos) const override;
  int64_t radius() const override { return radius_; }

 private:
  ShiftSpace domain_;
  int64_t radius_;
  std::vector<Symbol> values_;
};

class FnReader : public SymbolReader {
 public:
  using Fn = std::function<Symbol(const Config&, int64_t)>;

  FnReader(int target_size, int64_t radius, std::string name, Fn fn)
      : SymbolReader(target_size), radius_(radius), name_(std::move(name)), fn_(std::move(fn)) {}

  Symbol read(const Config& x, int64_t pos) const override { return fn_(x, pos); }
  int64_t radius() const override { return radius_; }
  const std::string& name() const { return name_; }

 private:
  int64_t radius_;
  std::string name_;
  Fn fn_;
};

class SimulateNode : public CocycleNode {
 public:
  /// g over the reader's target full shift, f (with its structural inverse)
  /// over the base domain. Evaluates g on the lazily read f-orbit window and
  /// sums the f-cocycle over that many f-steps.
  SimulateNode(NodePtr g, NodePtr f, NodePtr f_inv, ReaderPtr reader);

  int64_t eval_at(const Config& x, int64_t pos) const override;
  const char* kind() const override { return "simulate"; }

  const NodePtr& g() const { return g_; }
  const NodePtr& f() const { return f_; }
  const NodePtr& f_inv() const { return f_inv_; }
  const ReaderPtr& reader() const { return reader_; }

 private:
  NodePtr g_;
  NodePtr f_;
  NodePtr f_inv_;
  ReaderPtr reader_;
};

/// Builder-produced rule with an explicit evaluator and hand-certified
/// bounds; backward is the evaluator of the inverse rule when the builder
/// can supply one.
class NamedNode : public CocycleNode {
 public:
  using Fn = std::function<int64_t(const Config&, int64_t)>;

  NamedNode(ShiftSpace domain, Bounds bounds, std::string name, Fn forward, Fn backward = nullptr);

  int64_t eval_at(const Config& x, int64_t pos) const override { return forward_(x, pos); }
  const char* kind() const override { return "named"; }

  const std::string& name() const { return name_; }
  bool has_backward() const { return static_cast<bool>(backward_); }
  const Fn& backward() const { return backward_; }

 private:
  std::string name_;
  Fn forward_;
  Fn backward_;
};

/// Evaluates prog on any configuration extending `window` placed at
/// [pos-center, pos+(|window|-1-center)]; sound when prog's radius fits
/// inside the window. Full-shift domains only (padding is arbitrary).
int64_t eval_on_window(const CocycleNode& prog, const Word& window, int64_t center);

/// Structural inverse: distributes over compose/simulate/even-double, swaps
/// named evaluators, wraps tables in a search node.
NodePtr invert_node(const NodePtr& node);

/// Eager tabulation of prog at the given radius; requires radius >= certified
/// radius of prog or a caller that knows the true radius is smaller.
std::shared_ptr<const TableNode> tabulate(const NodePtr& prog, int64_t radius);

/// Merges windows whose one-symbol extensions all agree until the radius is
/// minimal. Identity detection becomes exact on the result.
std::shared_ptr<const TableNode> minimize_table(std::shared_ptr<const TableNode> table);

int64_t ipow(int64_t base, int64_t exp);

}  // namespace tfg
