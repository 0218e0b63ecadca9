#include "tfg/abelian.hpp"

#include <numeric>

#include "tfg/errors.hpp"

namespace tfg {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int64_t> factor_orders)
    : factors_(std::move(factor_orders)) {
  if (factors_.empty()) throw Error(ErrorCode::BadInput, "group needs at least one factor");
  for (int64_t f : factors_) {
    if (f < 2) throw Error(ErrorCode::BadInput, "cyclic factors must have order >= 2");
    order_ *= f;
  }
  if (order_ > 4096) throw Error(ErrorCode::BadInput, "group order beyond desk scale");
}

FiniteAbelianGroup::Element FiniteAbelianGroup::zero() const {
  return Element(factors_.size(), 0);
}

FiniteAbelianGroup::Element FiniteAbelianGroup::add(const Element& a, const Element& b) const {
  Element r(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) r[i] = (a[i] + b[i]) % factors_[i];
  return r;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::negate(const Element& a) const {
  Element r(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) r[i] = (factors_[i] - a[i]) % factors_[i];
  return r;
}

bool FiniteAbelianGroup::is_zero(const Element& a) const {
  for (int64_t v : a)
    if (v != 0) return false;
  return true;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::element(int64_t index) const {
  Element r(factors_.size());
  for (size_t i = factors_.size(); i-- > 0;) {
    r[i] = index % factors_[i];
    index /= factors_[i];
  }
  return r;
}

int64_t FiniteAbelianGroup::index_of(const Element& a) const {
  int64_t idx = 0;
  for (size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + a[i];
  return idx;
}

std::vector<FiniteAbelianGroup::Element> FiniteAbelianGroup::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<size_t>(order_));
  for (int64_t i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

Endomorphism::Endomorphism(const FiniteAbelianGroup& group,
                           std::vector<std::vector<int64_t>> matrix)
    : matrix_(std::move(matrix)) {
  size_t k = group.factors().size();
  if (matrix_.size() != k) throw Error(ErrorCode::BadInput, "endomorphism matrix shape");
  for (size_t i = 0; i < k; ++i) {
    if (matrix_[i].size() != k) throw Error(ErrorCode::BadInput, "endomorphism matrix shape");
    for (size_t j = 0; j < k; ++j) {
      // the j-th generator has order f_j, so its image must be killed by f_j
      int64_t fi = group.factors()[i];
      int64_t fj = group.factors()[j];
      if ((matrix_[i][j] * fj) % fi != 0)
        throw Error(ErrorCode::BadInput, "matrix does not define an endomorphism");
      if (matrix_[i][j] < 0 || matrix_[i][j] >= fi)
        throw Error(ErrorCode::BadInput, "matrix entries must be reduced residues");
    }
  }
}

Endomorphism Endomorphism::zero(const FiniteAbelianGroup& group) {
  size_t k = group.factors().size();
  return Endomorphism(group, std::vector<std::vector<int64_t>>(k, std::vector<int64_t>(k, 0)));
}

Endomorphism Endomorphism::identity(const FiniteAbelianGroup& group) {
  size_t k = group.factors().size();
  std::vector<std::vector<int64_t>> m(k, std::vector<int64_t>(k, 0));
  for (size_t i = 0; i < k; ++i) m[i][i] = 1;
  return Endomorphism(group, std::move(m));
}

FiniteAbelianGroup::Element Endomorphism::apply(const FiniteAbelianGroup& group,
                                                const FiniteAbelianGroup::Element& a) const {
  size_t k = group.factors().size();
  FiniteAbelianGroup::Element r(k, 0);
  for (size_t i = 0; i < k; ++i) {
    int64_t acc = 0;
    for (size_t j = 0; j < k; ++j) acc += matrix_[i][j] * a[j];
    r[i] = ((acc % group.factors()[i]) + group.factors()[i]) % group.factors()[i];
  }
  return r;
}

std::vector<Endomorphism> all_endomorphisms(const FiniteAbelianGroup& group) {
  size_t k = group.factors().size();
  std::vector<Endomorphism> out;
  // enumerate every matrix with reduced residues, keep the valid ones
  std::vector<int64_t> caps;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) caps.push_back(group.factors()[i]);
  std::vector<int64_t> cur(k * k, 0);
  while (true) {
    std::vector<std::vector<int64_t>> m(k, std::vector<int64_t>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) m[i][j] = cur[i * k + j];
    try {
      out.emplace_back(group, std::move(m));
    } catch (const Error&) {
    }
    size_t at = k * k;
    while (at-- > 0) {
      if (++cur[at] < caps[at]) break;
      cur[at] = 0;
      if (at == 0) return out;
    }
  }
}

}  // namespace tfg
