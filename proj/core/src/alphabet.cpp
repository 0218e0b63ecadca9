#include "tfg/alphabet.hpp"

namespace tfg {

Alphabet::Alphabet(int size) : size_(size) {
  if (size < 2) throw Error(ErrorCode::BadInput, "alphabet needs at least two symbols");
  names_.reserve(static_cast<size_t>(size));
  for (int i = 0; i < size; ++i) names_.push_back(std::to_string(i));
}

Alphabet::Alphabet(int size, std::vector<std::string> names) : size_(size), names_(std::move(names)) {
  if (size < 2) throw Error(ErrorCode::BadInput, "alphabet needs at least two symbols");
  if (static_cast<int>(names_.size()) != size)
    throw Error(ErrorCode::BadInput, "alphabet name count does not match size");
  for (size_t i = 0; i < names_.size(); ++i)
    for (size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw Error(ErrorCode::BadInput, "duplicate symbol name");
}

void Alphabet::check_word(const Word& w) const {
  for (Symbol s : w)
    if (!contains(s)) throw Error(ErrorCode::BadInput, "symbol out of alphabet range");
}

}  // namespace tfg
