#pragma once

#include "tfg/abelian.hpp"
#include "tfg/codebook.hpp"
#include "tfg/element.hpp"

namespace tfg {

/// The concrete lamplighter generators over {0,1,2,3}: blocks u = 3210 and
/// v = 3220, t-edges running pairs of positions forward through block runs
/// with end wraps (first<->third, second<->fourth), and an a-edge between the
/// first two positions of each v block.
struct LamplighterPair {
  TfgElement walk;    // t-hat
  TfgElement toggle;  // a-hat
  Codebook book;      // the u/v block words
};

LamplighterPair build_lamplighter(const EqualityPolicy& eq = {});

/// Generators of A wr Z for a finite abelian A: block words of length 2|A|
/// over {0, .., 2|A|-1} (descending runs; the marked variant bumps one
/// symbol, reproducing 3210/3220 for |A| = 2), a walk preserving tuple
/// offsets, and one toggle per group element acting by the regular action on
/// the A-state inside marked blocks.
struct WreathOverZ {
  FiniteAbelianGroup group;
  TfgElement walk;
  std::vector<TfgElement> toggles;  // indexed by group element
  Codebook book;
  Word unmarked_block;
  Word marked_block;
};

WreathOverZ build_wreath_AZ(const FiniteAbelianGroup& group, const EqualityPolicy& eq = {});

}  // namespace tfg
