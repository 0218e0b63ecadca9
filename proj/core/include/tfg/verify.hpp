#pragma once

#include <optional>

#include "tfg/element.hpp"

namespace tfg {

enum class VerifyFailure { None, NotInjective, NotSurjective };

/// Outcome of the bijectivity decision. Failures carry a genuine witness
/// word: for NotInjective, every configuration extending the word collides
/// with its own k-shift; for NotSurjective, every extension misses a
/// preimage.
struct VerifyOutcome {
  bool ok = false;
  VerifyFailure failure = VerifyFailure::None;
  Word witness;
  int64_t collision_shift = 0;  // the k of a NotInjective witness
  VerifyRecord record;
  std::optional<TfgElement> element;
};

/// Decides bijectivity of the induced map f(x) = sigma^{c(x)}(x).
///
/// Exhaustive mode (word spaces within policy.exhaustive_budget):
///   injectivity  — no word of length k+2n+1 has c@0 = k + c@k, k in [1,2M];
///     collisions need c(x) - c(sigma^k x) = k with values in [-M, M], and a
///     periodic point with sigma^k x = x forces k = 0, so the range and the
///     word check are complete.
///   surjectivity — every word of length 2(M+n)+1 admits k in [-M, M] with
///     c@k = -k, which exhibits the preimage sigma^k x.
///
/// Sampled mode (budget exceeded): periodic-permutation checks for p up to
/// policy.period_bound, the same window conditions probed on seeded random
/// configurations, and inverse round-trips when the rule names a backward
/// evaluator. Failures found this way are still exact; a pass is recorded as
/// VerifyMode::Sampled.
VerifyOutcome verify_bijective(const NodePtr& rule, const VerifyPolicy& policy = {},
                               const EqualityPolicy& eq = {});

/// Throws InternalInconsistency if verification fails; for rules that are
/// bijective by construction.
TfgElement require_verified(const NodePtr& rule, const VerifyPolicy& policy = {},
                            const EqualityPolicy& eq = {});

}  // namespace tfg
