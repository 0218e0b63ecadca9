#include "tfg/moves.hpp"

#include <algorithm>
#include <set>

#include "tfg/errors.hpp"

namespace tfg {

namespace {

// deterministic point suite: periodic points ascending, then extras
void for_each_search_point(const ShiftSpace& space, const SearchPolicy& search,
                           const std::vector<Config>& extras,
                           const std::function<bool(const Config&)>& fn) {
  bool go = true;
  for (int64_t p = 1; p <= search.period_bound && go; ++p) {
    sweep_periodic_points(space, p, search.period_point_cap, search.samples, search.seed,
                          [&](const Word& w) {
                            go = fn(Config::periodic(w));
                            return go;
                          });
  }
  for (const Config& x : extras) {
    if (!go) break;
    go = fn(x);
  }
}

}  // namespace

std::optional<MoveCertificate> unique_moves_check(const std::vector<TfgElement>& family,
                                                  const SearchPolicy& search,
                                                  const std::vector<Config>& extra_points) {
  if (family.empty()) throw Error(ErrorCode::BadInput, "empty family");
  const ShiftSpace& space = family.front().domain();
  for (const TfgElement& g : family)
    if (g.domain() != space)
      throw Error(ErrorCode::DomainMismatch, "family elements over different shifts");

  std::optional<MoveCertificate> found;
  for_each_search_point(space, search, extra_points, [&](const Config& x) {
    std::vector<int64_t> values(family.size());
    for (size_t i = 0; i < family.size(); ++i) values[i] = family[i].eval_at(x, 0);
    // candidates by descending move, then family order
    std::vector<size_t> order(family.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return values[a] > values[b]; });
    for (size_t i : order) {
      bool unique = true;
      for (size_t j = 0; j < family.size(); ++j)
        if (j != i && values[j] == values[i]) {
          unique = false;
          break;
        }
      if (unique) {
        MoveCertificate cert;
        cert.element_index = i;
        cert.point = x;
        cert.value = values[i];
        for (size_t j = 0; j < family.size(); ++j)
          if (j != i) cert.other_values.push_back(values[j]);
        found = cert;
        return false;
      }
    }
    return true;
  });
  return found;
}

std::optional<MoveAithfulCertificate> move_aithful_check(
    const FiniteAbelianGroup& group, const std::vector<BetaEntry>& beta,
    const SearchPolicy& search, const std::vector<Config>& extra_points) {
  std::vector<const BetaEntry*> support;
  for (const BetaEntry& entry : beta)
    if (!group.is_zero(entry.value)) support.push_back(&entry);
  if (support.empty()) throw Error(ErrorCode::EmptySupport, "beta has empty support");
  const ShiftSpace& space = support.front()->element.domain();

  std::vector<Endomorphism> endos = all_endomorphisms(group);
  std::optional<MoveAithfulCertificate> found;

  for_each_search_point(space, search, extra_points, [&](const Config& x) {
    std::vector<int64_t> values(support.size());
    for (size_t i = 0; i < support.size(); ++i) values[i] = support[i]->element.eval_at(x, 0);
    std::vector<int64_t> distinct(values.begin(), values.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (static_cast<int>(distinct.size()) > search.max_gamma_values)
      distinct.resize(static_cast<size_t>(search.max_gamma_values));

    // enumerate gamma over endomorphism tuples on the attained values
    size_t slots = distinct.size();
    std::vector<size_t> pick(slots, 0);
    while (true) {
      FiniteAbelianGroup::Element sum = group.zero();
      for (size_t i = 0; i < support.size(); ++i) {
        auto it = std::lower_bound(distinct.begin(), distinct.end(), values[i]);
        if (it == distinct.end() || *it != values[i]) continue;  // beyond the value cap
        const Endomorphism& e = endos[pick[static_cast<size_t>(it - distinct.begin())]];
        sum = group.add(sum, e.apply(group, support[i]->value));
      }
      if (!group.is_zero(sum)) {
        MoveAithfulCertificate cert;
        cert.point = x;
        cert.sum = sum;
        for (size_t s = 0; s < slots; ++s) cert.gamma.emplace(distinct[s], endos[pick[s]]);
        found = cert;
        return false;
      }
      size_t at = slots;
      bool rolled = false;
      while (at-- > 0) {
        if (++pick[at] < endos.size()) {
          rolled = true;
          break;
        }
        pick[at] = 0;
      }
      if (!rolled) break;
    }
    return true;
  });
  return found;
}

BetaMap build_beta_cancel(const FiniteAbelianGroup& group, const std::vector<TfgElement>& family,
                          const FiniteAbelianGroup::Element& h, const EqualityPolicy& eq) {
  if (family.empty()) throw Error(ErrorCode::BadInput, "empty family");
  size_t k = family.size();
  if (k > 16) throw Error(ErrorCode::BadInput, "family too large for subset products");

  // commutation check first
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      EqualityVerdict v = equal(compose(family[i], family[j], eq),
                                compose(family[j], family[i], eq), eq);
      if (!v.equal)
        throw Error(ErrorCode::NonCommuting, "family elements " + std::to_string(i) + " and " +
                                                 std::to_string(j) + " do not commute");
    }

  // subset products g_I, grouped by element equality
  BetaMap out;
  out.exact_grouping = true;
  std::vector<TfgElement> reps;
  std::vector<FiniteAbelianGroup::Element> sums;
  for (uint64_t mask = 0; mask < (uint64_t(1) << k); ++mask) {
    TfgElement prod = TfgElement::identity(family.front().domain());
    int bits = 0;
    for (size_t i = 0; i < k; ++i)
      if (mask & (uint64_t(1) << i)) {
        prod = compose(prod, family[i], eq);
        ++bits;
      }
    FiniteAbelianGroup::Element term = (bits % 2 == 0) ? h : group.negate(h);
    bool grouped = false;
    for (size_t r = 0; r < reps.size(); ++r) {
      EqualityVerdict v = equal(reps[r], prod, eq);
      if (!(v.exact || !v.equal)) out.exact_grouping = false;  // equal but only at tier P/R
      if (v.equal) {
        sums[r] = group.add(sums[r], term);
        grouped = true;
        break;
      }
    }
    if (!grouped) {
      reps.push_back(prod);
      sums.push_back(term);
    }
  }
  for (size_t r = 0; r < reps.size(); ++r) {
    out.entries.push_back({reps[r], sums[r]});
    if (!group.is_zero(sums[r])) out.nonzero = true;
  }
  return out;
}

}  // namespace tfg
