#pragma once

#include "tfg/belt.hpp"

namespace tfg {

/// Per-block (top, bottom) cell counts for a belt cycle of 2p cells whose
/// entry-to-exit displacement along the cycle is d.
struct Allocation {
  std::vector<std::pair<int64_t, int64_t>> blocks;  // left to right
  bool fallback = false;

  int64_t top_total() const;
  int64_t bottom_total() const;
};

/// Main recipe: a = d blocks, one top cell in the leftmost, the remaining
/// d-1 top cells spread one each over the rightmost blocks, one bottom cell
/// in the rightmost, 2p-d-1 bottom cells spread as evenly as possible over
/// the leftmost blocks (extras leftmost). Falls back to the two-block shape
/// (1, 2p-d-1), (d-1, 1) exactly when a per-block count leaves [1, cap].
/// d must be positive and even (node actions are pre-doubled), d < p.
Allocation allocate_cells(int64_t d, int64_t p, int64_t c_u, int64_t multiplier = 100);

/// Mirror for negative displacements: reversed blocks with rows swapped.
Allocation mirror_allocation(const Allocation& a);

/// One letter ghat_u^e of a reduced word, in application order.
struct WitnessLetter {
  int64_t vertex = 0;
  int64_t exponent = 0;
  int chain_index = -1;  // position in the non-commuting chain, -1 if skipped
};

/// Planned belt for one chain letter.
struct WitnessBelt {
  int64_t vertex = 0;
  int64_t displacement = 0;  // d = cocycle of the node action on the content
  int64_t half_cycle = 0;    // p; the cycle has 2p cells
  Allocation allocation;
  std::vector<CodeKey> keys;  // block keys, left to right
  int64_t start = 0;          // absolute start offset of the belt in the witness
  int64_t length = 0;         // total word length of the belt
};

struct WitnessWord {
  Word word;            // t = t' t_{j1} ... t_{jl} t'
  int64_t buffer_len = 0;  // |t'|
  std::vector<WitnessLetter> letters;
  std::vector<WitnessBelt> belts;            // one per chain letter
  std::vector<int64_t> expected_offsets;     // head after each letter; front() = 0
  int64_t last_block_len = 0;                // m in the shift bound |t| - m - 2|t'|
  Config configuration = Config::constant(0);  // concrete member of [t]_{-|t'|}
  std::shared_ptr<Codebook> book;
  std::vector<TfgElement> letter_elements;   // ghat^e per letter, application order
  std::shared_ptr<TfgElement> image;         // the composed word image
};

/// Keys (with the buffer word) that build_witness will request for a word;
/// callers that share one codebook across many words pre-merge these.
std::vector<std::pair<CodeKey, int64_t>> witness_keys(
    const GraphProductSpec& spec, const std::vector<std::pair<int64_t, int64_t>>& reduced_word);

/// Builds the witness cylinder word for a reduced word (application order:
/// front() acts first). Throws NotReduced when a merge, an identity letter,
/// or a commutation-merge applies. When `machines` is null a fresh canonical
/// codebook over the binary ambient alphabet is generated together with its
/// step elements; a caller-supplied BeltMachines must cover all witness keys.
WitnessWord build_witness(const GraphProductSpec& spec,
                          const std::vector<std::pair<int64_t, int64_t>>& reduced_word,
                          const BeltMachines* machines = nullptr,
                          const EqualityPolicy& eq = {});

/// The buffer key guarding witness ends; u is one past the largest vertex id.
CodeKey buffer_key(const GraphProductSpec& spec);

}  // namespace tfg
