#pragma once

#include <cstdint>
#include <vector>

namespace tfg {

/// A finite abelian group as a product of cyclic factors; elements are
/// residue tuples, endomorphisms integer matrices acting mod the factor
/// orders.
class FiniteAbelianGroup {
 public:
  using Element = std::vector<int64_t>;

  explicit FiniteAbelianGroup(std::vector<int64_t> factor_orders);

  const std::vector<int64_t>& factors() const { return factors_; }
  int64_t order() const { return order_; }

  Element zero() const;
  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  bool is_zero(const Element& a) const;

  /// Elements in lexicographic (mixed-radix) order; index 0 is zero.
  Element element(int64_t index) const;
  int64_t index_of(const Element& a) const;

  std::vector<Element> elements() const;

 private:
  std::vector<int64_t> factors_;
  int64_t order_ = 1;
};

/// An endomorphism of a FiniteAbelianGroup: a matrix m where column j is the
/// image of the j-th generator; validity requires m[i][j] * order(j) = 0
/// mod order(i) for all entries.
class Endomorphism {
 public:
  Endomorphism(const FiniteAbelianGroup& group, std::vector<std::vector<int64_t>> matrix);

  static Endomorphism zero(const FiniteAbelianGroup& group);
  static Endomorphism identity(const FiniteAbelianGroup& group);

  FiniteAbelianGroup::Element apply(const FiniteAbelianGroup& group,
                                    const FiniteAbelianGroup::Element& a) const;

  const std::vector<std::vector<int64_t>>& matrix() const { return matrix_; }
  bool operator==(const Endomorphism& o) const { return matrix_ == o.matrix_; }

 private:
  std::vector<std::vector<int64_t>> matrix_;
};

/// All endomorphisms of the group, by brute enumeration of valid matrices;
/// desk-scale orders only.
std::vector<Endomorphism> all_endomorphisms(const FiniteAbelianGroup& group);

}  // namespace tfg
