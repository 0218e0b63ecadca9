#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "tfg/alphabet.hpp"
#include "tfg/config.hpp"
#include "tfg/word.hpp"

namespace tfg {

/// Key of a block word: vertex id u, top-cell count a, bottom-cell count b,
/// and the cell symbols v (|v| = a+b over the node alphabet). Keys with
/// a = b = 0 name buffer words that never form blocks.
struct CodeKey {
  int64_t u = 0;
  int64_t a = 0;
  int64_t b = 0;
  Word v;

  bool is_block() const { return a >= 1 && b >= 1; }

  auto tie() const { return std::tie(u, a, b, v); }
  bool operator<(const CodeKey& o) const { return tie() < o.tie(); }
  bool operator==(const CodeKey& o) const { return tie() == o.tie(); }
};

std::string key_to_string(const CodeKey& key);

/// Outcome of the mutual-unborderedness scan: ok, or the offending border t
/// (a proper suffix of entry i and a prefix of entry j, or the containment
/// cases where t is one of the words entirely).
struct BorderReport {
  bool ok = true;
  Word border;
  size_t suffix_of = 0;
  size_t prefix_of = 0;
};

/// No nonempty t may be simultaneously a proper suffix of one entry and a
/// prefix of another (same entry included, covering self-borders), except
/// t equal to both whole words. Empty words raise InvalidCodebook.
BorderReport check_mutually_unbordered(const std::vector<Word>& words);

/// A finite set of mutually unbordered words indexed by keys.
class Codebook {
 public:
  /// Validates: nonempty distinct words, mutual unborderedness.
  static Codebook from_entries(Alphabet alphabet, std::vector<std::pair<CodeKey, Word>> entries);

  /// Canonical coding over the two lowest ambient symbols. Every word is
  ///
  ///     1 1 0 enc(pad) 0^pad enc(u) enc(a) enc(b) enc(v_0) .. enc(v_{a+b-1})
  ///
  /// with enc(N) = (10)^N 0. The leading 11 is the only occurrence of 11 in
  /// the word, every word ends in 0, and decoding is self-delimiting, which
  /// makes any set of such words mutually unbordered and prefix-free. pad is
  /// the smallest value reaching the requested minimum length.
  static Codebook generate(Alphabet alphabet,
                           const std::vector<std::pair<CodeKey, int64_t>>& keys_with_min_lengths);

  /// Canonical word for one key outside any book (same coding).
  static Word canonical_word(const CodeKey& key, int64_t min_length = 0);

  /// Inverse of canonical_word; nullopt if w is not a canonical code word.
  static std::optional<CodeKey> decode_canonical(const Word& w);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::map<CodeKey, Word>& entries() const { return entries_; }
  const Word& word_for(const CodeKey& key) const;
  std::optional<CodeKey> key_for(const Word& w) const;

  int64_t max_word_length() const { return max_len_; }
  bool canonical() const { return canonical_; }

  /// Start positions and keys of all entry occurrences inside `window`
  /// (occurrences never overlap: the entries are mutually unbordered).
  std::vector<std::pair<int64_t, CodeKey>> occurrences(const Word& window) const;

  /// Occurrence search on a configuration, positions in [from, to).
  std::vector<std::pair<int64_t, CodeKey>> occurrences_in(const Config& x, int64_t from,
                                                          int64_t to) const;

 private:
  Codebook(Alphabet alphabet, std::map<CodeKey, Word> entries, bool canonical);

  Alphabet alphabet_;
  std::map<CodeKey, Word> entries_;
  std::map<Word, CodeKey> by_word_;
  int64_t max_len_ = 0;
  bool canonical_ = false;
};

}  // namespace tfg
