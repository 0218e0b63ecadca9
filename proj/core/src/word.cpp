#include "tfg/word.hpp"

#include <stdexcept>

#include "tfg/errors.hpp"

namespace tfg {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidCodebook: return "InvalidCodebook";
    case ErrorCode::CodebookOverflow: return "CodebookOverflow";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::OffLanguage: return "OffLanguage";
    case ErrorCode::BoundsUnsound: return "BoundsUnsound";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NonCommuting: return "NonCommuting";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::ConstraintUnsatisfiable: return "ConstraintUnsatisfiable";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::NoMovingPeriodicPoint: return "NoMovingPeriodicPoint";
    case ErrorCode::AssertionFailure: return "AssertionFailure";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "UnknownError";
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (Symbol a : w) {
    if (a >= 0 && a <= 9) {
      s += static_cast<char>('0' + a);
    } else {
      s += '[' + std::to_string(a) + ']';
    }
  }
  return s;
}

Word word_from_digits(const std::string& s) {
  Word w;
  w.reserve(s.size());
  for (char c : s) {
    if (c < '0' || c > '9') throw Error(ErrorCode::BadInput, "non-digit in word literal");
    w.push_back(c - '0');
  }
  return w;
}

Word rotate_left(const Word& w, int64_t k) {
  if (w.empty()) return w;
  int64_t n = static_cast<int64_t>(w.size());
  k = ((k % n) + n) % n;
  Word r;
  r.reserve(w.size());
  r.insert(r.end(), w.begin() + k, w.end());
  r.insert(r.end(), w.begin(), w.begin() + k);
  return r;
}

int64_t primitive_period(const Word& w) {
  int64_t n = static_cast<int64_t>(w.size());
  for (int64_t q = 1; q <= n; ++q) {
    if (n % q != 0) continue;
    bool ok = true;
    for (int64_t i = 0; i + q < n; ++i) {
      if (w[static_cast<size_t>(i)] != w[static_cast<size_t>(i + q)]) {
        ok = false;
        break;
      }
    }
    if (ok) return q;
  }
  return n;
}

bool is_prefix(const Word& pre, const Word& w) {
  if (pre.size() > w.size()) return false;
  for (size_t i = 0; i < pre.size(); ++i)
    if (pre[i] != w[i]) return false;
  return true;
}

bool is_suffix(const Word& suf, const Word& w) {
  if (suf.size() > w.size()) return false;
  size_t off = w.size() - suf.size();
  for (size_t i = 0; i < suf.size(); ++i)
    if (suf[i] != w[off + i]) return false;
  return true;
}

}  // namespace tfg
