#pragma once

#include <functional>

#include "tfg/element.hpp"

namespace tfg {

/// The k-th root suspension of a base shift: base symbols on one residue
/// class mod k, the padding symbol # (index = base alphabet size) elsewhere,
/// plus the all-# limit point.
struct RootSubshift {
  ShiftSpace base;
  int64_t k = 1;
  ShiftSpace ambient;  // full shift over base alphabet + #
  Symbol pad = 0;

  RootSubshift(ShiftSpace base_space, int64_t copies);
};

RootSubshift sqrt_shift(const ShiftSpace& base, int64_t k);

/// An abstract element of [[base]] wr S_k: a k-tuple of base elements and a
/// permutation of the copy offsets.
struct WreathElement {
  std::vector<TfgElement> tuple;  // indexed by target offset
  std::vector<int> perm;          // rho: offset o -> rho[o]

  static WreathElement identity(const RootSubshift& root);
};

WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b,
                              const EqualityPolicy& eq = {});
WreathElement wreath_inverse(const WreathElement& a, const EqualityPolicy& eq = {});
bool wreath_same(const WreathElement& a, const WreathElement& b, const EqualityPolicy& eq = {});

/// The natural embedding into [[sqrt[k]{base}]]: the head's copy index is its
/// offset to the nearest base symbol at or left of it; the element moves the
/// head to the permuted offset and applies the matching tuple entry scaled by
/// k on the base grid. The all-# point is fixed.
TfgElement embed_wreath_Sk(const RootSubshift& root, const WreathElement& element,
                           const EqualityPolicy& eq = {});

/// Pointed periodic points of the root subshift with period exactly dividing
/// p (grid content periodic, all offsets), plus the all-# point at p = 1.
void for_each_root_periodic(const RootSubshift& root, int64_t p,
                            const std::function<bool(const Config&)>& fn);

/// Tier-P style equality over the root periodic suite.
bool equal_on_root(const RootSubshift& root, const TfgElement& g, const TfgElement& h,
                   int64_t max_period);

}  // namespace tfg
