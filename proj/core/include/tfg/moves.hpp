#pragma once

#include <map>
#include <optional>

#include "tfg/abelian.hpp"
#include "tfg/element.hpp"

namespace tfg {

/// Witness that one element of F moves a point differently from every other
/// listed element.
struct MoveCertificate {
  size_t element_index = 0;
  Config point = Config::constant(0);
  int64_t value = 0;
  std::vector<int64_t> other_values;
};

/// Scans periodic points (ascending period, lexicographic words) and then
/// caller-supplied witnesses; at each point candidates are tried by
/// descending cocycle value. Returns the first certificate found.
std::optional<MoveCertificate> unique_moves_check(const std::vector<TfgElement>& family,
                                                  const SearchPolicy& search = {},
                                                  const std::vector<Config>& extra_points = {});

/// A finitely supported map beta: G -> A represented on explicit elements.
struct BetaEntry {
  TfgElement element;
  FiniteAbelianGroup::Element value;
};

struct MoveAithfulCertificate {
  Config point = Config::constant(0);
  std::map<int64_t, Endomorphism> gamma;  // nonzero assignments, keyed by cocycle value
  FiniteAbelianGroup::Element sum;
};

/// Searches points (periodic suite plus extras) and endomorphism assignments
/// gamma supported on the cocycle values attained at the point (at most
/// search.max_gamma_values of them) for sum_g gamma(c_g(x))(beta(g)) != 0.
std::optional<MoveAithfulCertificate> move_aithful_check(
    const FiniteAbelianGroup& group, const std::vector<BetaEntry>& beta,
    const SearchPolicy& search = {}, const std::vector<Config>& extra_points = {});

struct BetaMap {
  std::vector<BetaEntry> entries;  // grouped by element equality, zeros kept
  bool exact_grouping = false;     // all groupings decided at tier E
  bool nonzero = false;
};

/// beta(g) = sum over subsets I of {1..k} with g_I = g of (-1)^|I| h, where
/// g_I is the product of the commuting family over I. Element equality is
/// grouped exactly through canonical tables when radii permit, otherwise by
/// periodic signature (flagged).
BetaMap build_beta_cancel(const FiniteAbelianGroup& group,
                          const std::vector<TfgElement>& family,
                          const FiniteAbelianGroup::Element& h, const EqualityPolicy& eq = {});

}  // namespace tfg
