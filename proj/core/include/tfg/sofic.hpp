#pragma once

#include <map>
#include <optional>

#include "tfg/codebook.hpp"
#include "tfg/element.hpp"
#include "tfg/simulate.hpp"

namespace tfg {

/// The data of the vertex-shift-into-full-shift embedding: one code word per
/// base symbol (mutually unbordered, length >= 1+p+r), the period word t laid
/// reversed in the periodic cells, the transition radius r, and the boundary
/// bridge words.
struct EmbeddingScheme {
  ShiftSpace base;          // X: transitive vertex shift
  Alphabet target;          // Y: full shift alphabet
  std::map<Symbol, Word> codebook;
  Word period_word;         // t, |t| = p, t.t admissible
  int64_t transition_radius = 0;  // r
  std::map<Symbol, Word> left_bridge;   // u_a: t u a admissible, leftmost block
  std::map<Symbol, Word> right_bridge;  // a u t admissible, rightmost block
  int64_t max_word_length = 0;

  int64_t period() const { return static_cast<int64_t>(period_word.size()); }
};

struct SchemeOptions {
  std::optional<std::map<Symbol, Word>> codebook;  // user-supplied block words
  std::optional<Word> period_word;                 // override t
};

/// r by breadth-first joins over the vertex graph, t the lexicographically
/// least shortest admissible cycle (unless overridden), canonical code words
/// of length >= 1+p+r (unless supplied), bridges by shortest-lex joins.
EmbeddingScheme make_scheme(const ShiftSpace& base, Alphabet target,
                            const SchemeOptions& options = {});

enum class SoficRole { Simulating, Periodic, Transition };

struct SoficBlock {
  int64_t start = 0;
  Symbol symbol = 0;
  bool removed = false;  // part of a forbidden subscript word
  bool erased = false;   // survived removal but formed a length-one belt
};

struct SoficBelt {
  std::vector<int64_t> block_indices;  // into SoficParse::blocks
  Word cycle_word;                     // simulated word read around the cycle
};

struct SoficParse {
  std::vector<SoficBlock> blocks;
  std::vector<SoficBelt> belts;
};

/// Preblocks from code word occurrences; preblocks covered by a forbidden
/// subscript pair are removed; surviving runs of length one are erased.
SoficParse parse_sofic_belts(const EmbeddingScheme& scheme, const Word& window);

/// One forward step along the belt cycle: simulating cells left to right,
/// periodic cells right to left, bridges through the transition cells of the
/// boundary blocks. Verified in sampled mode with the code words planted.
TfgElement sofic_follow_element(const EmbeddingScheme& scheme, const VerifyPolicy& vp = {},
                                const EqualityPolicy& eq = {});

/// Reader of the simulated base symbols (simulating cells read their block
/// subscript, periodic cells the reversed period word, used transition cells
/// their bridge letters; anything else reads t's first letter).
ReaderPtr sofic_symbol_reader(const EmbeddingScheme& scheme);

/// simulate(g, follow, reader): the embedding [[X]] -> [[Y]].
TfgElement embed_element(const EmbeddingScheme& scheme, const TfgElement& g,
                         const TfgElement& follow, const ReaderPtr& reader,
                         const EqualityPolicy& eq = {});

/// Maps a base configuration to its coded target configuration (an infinite
/// belt): each base symbol becomes its code word.
Config encode_configuration(const EmbeddingScheme& scheme, const Config& x);

}  // namespace tfg
