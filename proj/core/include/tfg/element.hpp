#pragma once

#include <optional>
#include <string>

#include "tfg/cocycle.hpp"
#include "tfg/policy.hpp"

namespace tfg {

enum class VerifyMode { Exhaustive, Sampled, Constructed };

/// How an element earned its bijectivity certificate: an exhaustive window
/// sweep, a sampled check (periodic permutations + random probes), or
/// construction from verified parts (compose, invert, even-double, simulate).
struct VerifyRecord {
  VerifyMode mode = VerifyMode::Constructed;
  std::string detail;
};

/// A certified element of the topological full group: a cocycle program that
/// has passed (or inherited) bijectivity verification, with a minimal-radius
/// table cache when the certified radius is within exhaustive reach.
class TfgElement {
 public:
  const NodePtr& rule() const { return rule_; }
  const ShiftSpace& domain() const { return rule_->domain(); }
  const Bounds& bounds() const { return rule_->bounds(); }
  const VerifyRecord& verification() const { return record_; }
  const std::shared_ptr<const TableNode>& canonical() const { return canonical_; }

  /// Checks vertex-shift configurations for admissibility (OffLanguage);
  /// eval_at skips the check and is the hot path for sweeps over admissible
  /// material.
  int64_t evaluate(const Config& x) const;
  int64_t eval_at(const Config& x, int64_t pos) const {
    return canonical_ ? canonical_->eval_at(x, pos) : rule_->eval_at(x, pos);
  }

  /// f(x) = sigma^{c(x)}(x).
  Config apply(const Config& x) const { return x.shifted(evaluate(x)); }

  // named building blocks
  static TfgElement identity(const ShiftSpace& domain);
  static TfgElement shift(const ShiftSpace& domain, int64_t power = 1);

  /// Order-q cycle on the aligned occurrences of 01..(q-1) in {0..q-1}^Z:
  /// +1 inside an occurrence, wrapping -(q-1) at its last offset.
  static TfgElement dial(int q);

  /// Same step rule on aligned occurrences of an arbitrary unbordered
  /// admissible pattern; dial(q) is pattern_cycler over 01..(q-1).
  static TfgElement pattern_cycler(const ShiftSpace& domain, const Word& pattern);

  /// Wraps a rule whose bijectivity is implied by its construction.
  static TfgElement trusted(NodePtr rule, std::string why, const EqualityPolicy& pol = {});

  friend TfgElement compose(const TfgElement& g, const TfgElement& h, const EqualityPolicy& pol);
  friend TfgElement invert(const TfgElement& g, const EqualityPolicy& pol);
  friend TfgElement even_double(const TfgElement& g, const EqualityPolicy& pol);

 private:
  TfgElement(NodePtr rule, VerifyRecord record, const EqualityPolicy& pol);

  NodePtr rule_;
  VerifyRecord record_;
  std::shared_ptr<const TableNode> canonical_;

  friend struct VerifyAccess;
};

/// compose(g, h) applies h first: c(x) = c_h(x) + c_g(sigma^{c_h(x)} x).
TfgElement compose(const TfgElement& g, const TfgElement& h, const EqualityPolicy& pol = {});
TfgElement invert(const TfgElement& g, const EqualityPolicy& pol = {});
TfgElement even_double(const TfgElement& g, const EqualityPolicy& pol = {});
TfgElement power(const TfgElement& g, int64_t k, const EqualityPolicy& pol = {});
TfgElement commutator(const TfgElement& g, const TfgElement& h, const EqualityPolicy& pol = {});
TfgElement conjugate(const TfgElement& g, const TfgElement& by, const EqualityPolicy& pol = {});

enum class EqualityTier { Exhaustive, Periodic, Random };

struct EqualityVerdict {
  bool equal = false;
  bool exact = false;  // exhaustive pass or any counterexample
  EqualityTier tier = EqualityTier::Periodic;
  std::optional<Config> witness;  // cocycles differ here when !equal
  std::string detail;
};

EqualityVerdict equal(const TfgElement& g, const TfgElement& h, const EqualityPolicy& pol = {});
bool is_identity(const TfgElement& g, const EqualityPolicy& pol = {});

/// Restriction of a rule to the p-periodic points; image[i] is the index of
/// the image of the i-th point in the lexicographic order of periodic words.
struct PeriodicAction {
  int64_t period = 0;
  std::vector<Word> points;
  std::vector<int64_t> image;
  bool is_permutation = false;
};

/// Works on unverified rules too; the verifier-oracle agreement tests feed
/// both sides.
PeriodicAction periodic_action(const CocycleNode& rule, int64_t p);

/// As above but for a certified element; a non-permutation outcome signals a
/// verifier bug and throws InternalInconsistency.
PeriodicAction periodic_permutation(const TfgElement& g, int64_t p);

/// Smallest k <= bound with g^k = id under Tier-P equality, or nullopt
/// ("order > bound").
std::optional<int64_t> order_of(const TfgElement& g, int64_t bound = 64,
                                const EqualityPolicy& pol = {});

/// Deterministic sweep over pointed p-periodic points: exhaustive when the
/// count fits the cap, otherwise `samples` seeded draws. fn returns false to
/// abort. Returns whether the sweep was exhaustive.
bool sweep_periodic_points(const ShiftSpace& space, int64_t p, int64_t cap, int64_t samples,
                           uint64_t seed, const std::function<bool(const Word&)>& fn);

}  // namespace tfg
