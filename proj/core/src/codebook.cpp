#include "tfg/codebook.hpp"

#include <algorithm>

#include "tfg/config.hpp"
#include "tfg/errors.hpp"

namespace tfg {

std::string key_to_string(const CodeKey& key) {
  return "(" + std::to_string(key.u) + "," + std::to_string(key.a) + "," + std::to_string(key.b) +
         "," + word_to_string(key.v) + ")";
}

BorderReport check_mutually_unbordered(const std::vector<Word>& words) {
  for (const Word& w : words)
    if (w.empty()) throw Error(ErrorCode::InvalidCodebook, "empty word in codebook");
  BorderReport rep;
  for (size_t i = 0; i < words.size(); ++i) {
    for (size_t j = 0; j < words.size(); ++j) {
      const Word& wi = words[i];
      const Word& wj = words[j];
      size_t maxt = std::min(wi.size(), wj.size());
      for (size_t t = 1; t <= maxt; ++t) {
        if (t == wi.size() && t == wj.size()) continue;  // u and v both empty
        bool match = true;
        for (size_t s = 0; s < t; ++s)
          if (wi[wi.size() - t + s] != wj[s]) {
            match = false;
            break;
          }
        if (match) {
          rep.ok = false;
          rep.border = Word(wj.begin(), wj.begin() + static_cast<std::ptrdiff_t>(t));
          rep.suffix_of = i;
          rep.prefix_of = j;
          return rep;
        }
      }
    }
  }
  return rep;
}

namespace {

void append_enc(Word& out, int64_t n) {
  for (int64_t i = 0; i < n; ++i) {
    out.push_back(1);
    out.push_back(0);
  }
  out.push_back(0);
}

/// Reads one enc(N) field starting at pos; returns N and advances pos, or
/// returns nullopt on malformed input.
std::optional<int64_t> read_enc(const Word& w, size_t& pos) {
  int64_t n = 0;
  while (true) {
    if (pos >= w.size()) return std::nullopt;
    if (w[pos] == 0) {
      ++pos;
      return n;
    }
    if (pos + 1 >= w.size() || w[pos] != 1 || w[pos + 1] != 0) return std::nullopt;
    pos += 2;
    ++n;
  }
}

constexpr int64_t kMaxWordLength = 4096;

}  // namespace

Word Codebook::canonical_word(const CodeKey& key, int64_t min_length) {
  if (key.u < 0 || key.a < 0 || key.b < 0)
    throw Error(ErrorCode::BadInput, "code key fields must be nonnegative");
  if (static_cast<int64_t>(key.v.size()) != key.a + key.b)
    throw Error(ErrorCode::BadInput, "cell word length must be a+b");
  for (Symbol s : key.v)
    if (s < 0) throw Error(ErrorCode::BadInput, "cell symbols must be nonnegative");
  if (min_length < key.a + key.b)
    min_length = key.a + key.b;  // block words must host all their cells

  int64_t base = 3 + 1;  // marker 110 plus enc(0) for pad
  base += 2 * key.u + 1;
  base += 2 * key.a + 1;
  base += 2 * key.b + 1;
  for (Symbol s : key.v) base += 2 * s + 1;
  int64_t pad = 0;
  if (base < min_length) pad = (min_length - base + 2) / 3;  // each pad unit adds 3 symbols

  Word w{1, 1, 0};
  append_enc(w, pad);
  for (int64_t i = 0; i < pad; ++i) w.push_back(0);
  append_enc(w, key.u);
  append_enc(w, key.a);
  append_enc(w, key.b);
  for (Symbol s : key.v) append_enc(w, s);
  if (static_cast<int64_t>(w.size()) > kMaxWordLength)
    throw Error(ErrorCode::CodebookOverflow, "key " + key_to_string(key) + " exceeds word cap");
  return w;
}

std::optional<CodeKey> Codebook::decode_canonical(const Word& w) {
  if (w.size() < 4 || w[0] != 1 || w[1] != 1 || w[2] != 0) return std::nullopt;
  size_t pos = 3;
  auto pad = read_enc(w, pos);
  if (!pad) return std::nullopt;
  for (int64_t i = 0; i < *pad; ++i) {
    if (pos >= w.size() || w[pos] != 0) return std::nullopt;
    ++pos;
  }
  CodeKey key;
  auto u = read_enc(w, pos);
  auto a = read_enc(w, pos);
  auto b = read_enc(w, pos);
  if (!u || !a || !b) return std::nullopt;
  key.u = *u;
  key.a = *a;
  key.b = *b;
  for (int64_t i = 0; i < key.a + key.b; ++i) {
    auto s = read_enc(w, pos);
    if (!s) return std::nullopt;
    key.v.push_back(static_cast<Symbol>(*s));
  }
  if (pos != w.size()) return std::nullopt;
  return key;
}

Codebook::Codebook(Alphabet alphabet, std::map<CodeKey, Word> entries, bool canonical)
    : alphabet_(std::move(alphabet)), entries_(std::move(entries)), canonical_(canonical) {
  std::vector<Word> words;
  for (const auto& [key, w] : entries_) {
    if (w.empty()) throw Error(ErrorCode::InvalidCodebook, "empty codebook word");
    alphabet_.check_word(w);
    if (by_word_.count(w))
      throw Error(ErrorCode::InvalidCodebook, "two keys share the word " + word_to_string(w));
    by_word_[w] = key;
    max_len_ = std::max<int64_t>(max_len_, static_cast<int64_t>(w.size()));
    words.push_back(w);
    if (key.is_block() && static_cast<int64_t>(w.size()) < key.a + key.b)
      throw Error(ErrorCode::InvalidCodebook,
                  "word " + word_to_string(w) + " too short for its cells");
  }
  BorderReport rep = check_mutually_unbordered(words);
  if (!rep.ok)
    throw Error(ErrorCode::InvalidCodebook,
                "border " + word_to_string(rep.border) + " between entries");
}

Codebook Codebook::from_entries(Alphabet alphabet, std::vector<std::pair<CodeKey, Word>> entries) {
  std::map<CodeKey, Word> map;
  for (auto& [key, w] : entries) {
    if (map.count(key)) throw Error(ErrorCode::InvalidCodebook, "duplicate key");
    map[key] = std::move(w);
  }
  return Codebook(std::move(alphabet), std::move(map), false);
}

Codebook Codebook::generate(Alphabet alphabet,
                            const std::vector<std::pair<CodeKey, int64_t>>& keys) {
  std::map<CodeKey, Word> map;
  for (const auto& [key, min_len] : keys) {
    // zero means "no requested minimum"; an explicit minimum below a+b is a
    // caller error per the block-length precondition
    if (key.is_block() && min_len > 0 && min_len < key.a + key.b)
      throw Error(ErrorCode::BadInput, "minimum length below a+b for " + key_to_string(key));
    if (map.count(key)) throw Error(ErrorCode::InvalidCodebook, "duplicate key");
    map[key] = canonical_word(key, min_len);
  }
  return Codebook(std::move(alphabet), std::move(map), true);
}

const Word& Codebook::word_for(const CodeKey& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw Error(ErrorCode::BadInput, "key not in codebook");
  return it->second;
}

std::optional<CodeKey> Codebook::key_for(const Word& w) const {
  auto it = by_word_.find(w);
  if (it == by_word_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<int64_t, CodeKey>> Codebook::occurrences(const Word& window) const {
  std::vector<std::pair<int64_t, CodeKey>> out;
  for (int64_t at = 0; at < static_cast<int64_t>(window.size()); ++at) {
    if (canonical_) {
      // code words start with 11 and contain no other 11
      if (window[static_cast<size_t>(at)] != 1) continue;
      if (at + 1 >= static_cast<int64_t>(window.size()) || window[static_cast<size_t>(at + 1)] != 1)
        continue;
    }
    for (const auto& [w, key] : by_word_) {
      int64_t len = static_cast<int64_t>(w.size());
      if (at + len > static_cast<int64_t>(window.size())) continue;
      bool match = true;
      for (int64_t i = 0; i < len; ++i)
        if (window[static_cast<size_t>(at + i)] != w[static_cast<size_t>(i)]) {
          match = false;
          break;
        }
      if (match) {
        out.emplace_back(at, key);
        at += len - 1;  // occurrences cannot overlap
        break;
      }
    }
  }
  return out;
}

std::vector<std::pair<int64_t, CodeKey>> Codebook::occurrences_in(const Config& x, int64_t from,
                                                                  int64_t to) const {
  std::vector<std::pair<int64_t, CodeKey>> out;
  for (int64_t at = from; at < to; ++at) {
    if (canonical_) {
      if (x.symbol_at(at) != 1 || x.symbol_at(at + 1) != 1) continue;
    }
    for (const auto& [w, key] : by_word_) {
      int64_t len = static_cast<int64_t>(w.size());
      if (at + len > to) continue;
      bool match = true;
      for (int64_t i = 0; i < len; ++i)
        if (x.symbol_at(at + i) != w[static_cast<size_t>(i)]) {
          match = false;
          break;
        }
      if (match) {
        out.emplace_back(at, key);
        at += len - 1;
        break;
      }
    }
  }
  return out;
}

}  // namespace tfg
