#pragma once

#include <string>
#include <vector>

#include "tfg/errors.hpp"
#include "tfg/word.hpp"

namespace tfg {

/// A finite alphabet of at least two symbols, identified by index. Names are
/// kept for I/O only; all computation is on indices.
class Alphabet {
 public:
  explicit Alphabet(int size);
  Alphabet(int size, std::vector<std::string> names);

  int size() const { return size_; }
  const std::string& name(Symbol s) const { return names_[static_cast<size_t>(s)]; }
  const std::vector<std::string>& names() const { return names_; }

  bool contains(Symbol s) const { return s >= 0 && s < size_; }
  void check_word(const Word& w) const;

  bool operator==(const Alphabet& other) const { return size_ == other.size_; }

 private:
  int size_;
  std::vector<std::string> names_;
};

}  // namespace tfg
