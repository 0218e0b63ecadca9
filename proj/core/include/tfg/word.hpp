#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tfg {

using Symbol = int32_t;
using Word = std::vector<Symbol>;

/// Renders symbols 0..9 as digits, larger ones bracketed, e.g. "01[12]0".
std::string word_to_string(const Word& w);

/// Inverse of word_to_string for plain digit strings ("0110" -> {0,1,1,0}).
Word word_from_digits(const std::string& s);

Word rotate_left(const Word& w, int64_t k);

/// Smallest q >= 1 with w[i] == w[i+q] for all i (q divides |w| not required
/// by the scan, but primitive periods of exact period words always divide).
int64_t primitive_period(const Word& w);

bool is_prefix(const Word& pre, const Word& w);
bool is_suffix(const Word& suf, const Word& w);

inline Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace tfg
