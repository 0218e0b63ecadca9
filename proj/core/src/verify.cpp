#include "tfg/verify.hpp"

#include <algorithm>
#include <set>

#include "tfg/errors.hpp"
#include "tfg/parallel.hpp"
#include "tfg/sampler.hpp"

namespace tfg {

struct VerifyAccess {
  static TfgElement make(NodePtr rule, VerifyRecord rec, const EqualityPolicy& eq) {
    return TfgElement(std::move(rule), std::move(rec), eq);
  }
};

namespace {

// admissible word count, saturating at cap+1
int64_t admissible_count(const ShiftSpace& space, int64_t length, int64_t cap) {
  int sigma = space.alphabet().size();
  if (space.is_full()) {
    int64_t c = 1;
    for (int64_t i = 0; i < length; ++i) {
      c *= sigma;
      if (c > cap) return cap + 1;
    }
    return c;
  }
  std::vector<int64_t> cur(static_cast<size_t>(sigma), 0);
  for (int s = 0; s < sigma; ++s) cur[static_cast<size_t>(s)] = space.symbol_live(s) ? 1 : 0;
  for (int64_t i = 1; i < length; ++i) {
    std::vector<int64_t> next(static_cast<size_t>(sigma), 0);
    for (int a = 0; a < sigma; ++a) {
      if (cur[static_cast<size_t>(a)] == 0) continue;
      for (int b = 0; b < sigma; ++b)
        if (space.symbol_live(b) && space.allows(a, b)) {
          next[static_cast<size_t>(b)] += cur[static_cast<size_t>(a)];
          if (next[static_cast<size_t>(b)] > cap) return cap + 1;
        }
    }
    cur = std::move(next);
  }
  int64_t total = 0;
  for (int64_t c : cur) {
    total += c;
    if (total > cap) return cap + 1;
  }
  return length == 0 ? 1 : total;
}

struct Hit {
  int64_t rank = -1;  // lexicographic witness rank; -1 = none
};

Hit min_hit(Hit a, Hit b) {
  if (a.rank < 0) return b;
  if (b.rank < 0) return a;
  return Hit{std::min(a.rank, b.rank)};
}

// ---- exhaustive checks over a full shift, rank arithmetic ----

struct FullSweep {
  const TableNode& vals;
  int sigma;
  int64_t n;  // table radius

  int32_t value(int64_t window_rank) const { return vals.value_at_rank(window_rank); }
};

// injectivity at collision distance k, word length k+2n+1
std::optional<Word> injectivity_witness_full(const FullSweep& fs, int64_t k) {
  int64_t wlen = 2 * fs.n + 1;
  int64_t wspace = ipow(fs.sigma, wlen);
  if (k >= wlen) {
    // windows independent: value difference k suffices, glue with padding
    std::set<int32_t> present;
    for (int64_t r = 0; r < wspace; ++r) present.insert(fs.value(r));
    for (int64_t r1 = 0; r1 < wspace; ++r1) {
      int32_t target = fs.value(r1) - static_cast<int32_t>(k);
      if (!present.count(target)) continue;
      for (int64_t r2 = 0; r2 < wspace; ++r2) {
        if (fs.value(r2) != target) continue;
        Word w = fs.vals.word_of(r1);
        Word gap(static_cast<size_t>(k - wlen), 0);
        Word tail = fs.vals.word_of(r2);
        w.insert(w.end(), gap.begin(), gap.end());
        w.insert(w.end(), tail.begin(), tail.end());
        return w;
      }
    }
    return std::nullopt;
  }
  int64_t total = ipow(fs.sigma, k + wlen);
  int64_t div = ipow(fs.sigma, k);
  Hit hit = parallel_chunks<Hit>(
      0, total, Hit{},
      [&](int64_t lo, int64_t hi) {
        for (int64_t r = lo; r < hi; ++r) {
          int64_t c0 = fs.value(r / div);
          int64_t ck = fs.value(r % wspace);
          if (c0 == k + ck) return Hit{r};
        }
        return Hit{};
      },
      min_hit);
  if (hit.rank < 0) return std::nullopt;
  int64_t len = k + wlen;
  Word w(static_cast<size_t>(len));
  int64_t r = hit.rank;
  for (int64_t i = len - 1; i >= 0; --i) {
    w[static_cast<size_t>(i)] = static_cast<Symbol>(r % fs.sigma);
    r /= fs.sigma;
  }
  return w;
}

std::optional<Word> surjectivity_witness_full(const FullSweep& fs, int64_t M) {
  int64_t wlen = 2 * fs.n + 1;
  int64_t wspace = ipow(fs.sigma, wlen);
  int64_t len = 2 * (M + fs.n) + 1;
  int64_t total = ipow(fs.sigma, len);
  std::vector<int64_t> divs(static_cast<size_t>(2 * M + 1));
  for (int64_t k = -M; k <= M; ++k) divs[static_cast<size_t>(k + M)] = ipow(fs.sigma, M - k);
  Hit hit = parallel_chunks<Hit>(
      0, total, Hit{},
      [&](int64_t lo, int64_t hi) {
        for (int64_t r = lo; r < hi; ++r) {
          bool found = false;
          for (int64_t k = -M; k <= M; ++k) {
            int64_t win = (r / divs[static_cast<size_t>(k + M)]) % wspace;
            if (fs.value(win) == -k) {
              found = true;
              break;
            }
          }
          if (!found) return Hit{r};
        }
        return Hit{};
      },
      min_hit);
  if (hit.rank < 0) return std::nullopt;
  Word w(static_cast<size_t>(len));
  int64_t r = hit.rank;
  for (int64_t i = len - 1; i >= 0; --i) {
    w[static_cast<size_t>(i)] = static_cast<Symbol>(r % fs.sigma);
    r /= fs.sigma;
  }
  return w;
}

// ---- exhaustive checks over a vertex shift, direct enumeration ----

int64_t window_rank_in(const Word& w, int64_t from, int64_t len, int sigma) {
  int64_t r = 0;
  for (int64_t i = from; i < from + len; ++i) r = r * sigma + w[static_cast<size_t>(i)];
  return r;
}

std::optional<Word> injectivity_witness_vertex(const ShiftSpace& space, const TableNode& vals,
                                               int64_t n, int64_t k) {
  std::optional<Word> found;
  int sigma = space.alphabet().size();
  for_each_admissible_word(space, k + 2 * n + 1, [&](const Word& w) {
    int64_t c0 = vals.value_at_rank(window_rank_in(w, 0, 2 * n + 1, sigma));
    int64_t ck = vals.value_at_rank(window_rank_in(w, k, 2 * n + 1, sigma));
    if (c0 == k + ck) {
      found = w;
      return false;
    }
    return true;
  });
  return found;
}

std::optional<Word> surjectivity_witness_vertex(const ShiftSpace& space, const TableNode& vals,
                                                int64_t n, int64_t M) {
  std::optional<Word> found;
  int sigma = space.alphabet().size();
  for_each_admissible_word(space, 2 * (M + n) + 1, [&](const Word& w) {
    for (int64_t k = -M; k <= M; ++k) {
      if (vals.value_at_rank(window_rank_in(w, k + M, 2 * n + 1, sigma)) == -k) return true;
    }
    found = w;
    return false;
  });
  return found;
}

// ---- sampled fallback ----

bool permutes_periodic_points(const CocycleNode& rule, int64_t p, int64_t cap) {
  const ShiftSpace& space = rule.domain();
  int sigma = space.alphabet().size();
  if (space.is_full()) {
    int64_t count = 1;
    for (int64_t i = 0; i < p; ++i) {
      count *= sigma;
      if (count > cap) return true;  // beyond budget, skip this period
    }
    std::vector<char> hit(static_cast<size_t>(count), 0);
    Word w(static_cast<size_t>(p), 0);
    int64_t rank = 0;
    while (true) {
      Config x = Config::periodic(w);
      int64_t c = rule.eval_at(x, 0);
      Word img = rotate_left(w, ((c % p) + p) % p);
      int64_t ir = 0;
      for (Symbol s : img) ir = ir * sigma + s;
      if (hit[static_cast<size_t>(ir)]) return false;
      hit[static_cast<size_t>(ir)] = 1;
      // odometer
      int64_t i = p - 1;
      while (i >= 0 && w[static_cast<size_t>(i)] == sigma - 1) {
        w[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++w[static_cast<size_t>(i)];
      ++rank;
    }
    return true;
  }
  return periodic_action(rule, p).is_permutation;
}

}  // namespace

VerifyOutcome verify_bijective(const NodePtr& rule, const VerifyPolicy& policy,
                               const EqualityPolicy& eq) {
  const ShiftSpace& space = rule->domain();
  int64_t n = rule->bounds().radius;
  int64_t M = rule->bounds().max_disp;
  VerifyOutcome out;

  if (M == 0) {
    // |c| <= 0 forces c == 0: the identity map
    out.ok = true;
    out.record = {VerifyMode::Exhaustive, "max displacement 0: identity"};
    out.element = VerifyAccess::make(rule, out.record, eq);
    return out;
  }

  int64_t surj_len = 2 * (M + n) + 1;
  int64_t cost = admissible_count(space, surj_len, policy.exhaustive_budget);
  for (int64_t k = 1; k <= std::min(2 * M, 2 * n) && cost <= policy.exhaustive_budget; ++k)
    cost += admissible_count(space, k + 2 * n + 1, policy.exhaustive_budget);
  bool table_fits = admissible_count(space, 2 * n + 1, 1 << 24) <= (1 << 24);

  if (cost <= policy.exhaustive_budget && table_fits) {
    auto vals = tabulate(rule, n);
    std::string detail = "exhaustive: n=" + std::to_string(n) + " M=" + std::to_string(M);
    if (space.is_full()) {
      FullSweep fs{*vals, space.alphabet().size(), n};
      for (int64_t k = 1; k <= 2 * M; ++k) {
        if (auto w = injectivity_witness_full(fs, k)) {
          out.failure = VerifyFailure::NotInjective;
          out.witness = *w;
          out.collision_shift = k;
          out.record = {VerifyMode::Exhaustive, detail};
          return out;
        }
      }
      if (auto w = surjectivity_witness_full(fs, M)) {
        out.failure = VerifyFailure::NotSurjective;
        out.witness = *w;
        out.record = {VerifyMode::Exhaustive, detail};
        return out;
      }
    } else {
      for (int64_t k = 1; k <= 2 * M; ++k) {
        if (auto w = injectivity_witness_vertex(space, *vals, n, k)) {
          out.failure = VerifyFailure::NotInjective;
          out.witness = *w;
          out.collision_shift = k;
          out.record = {VerifyMode::Exhaustive, detail};
          return out;
        }
      }
      if (auto w = surjectivity_witness_vertex(space, *vals, n, M)) {
        out.failure = VerifyFailure::NotSurjective;
        out.witness = *w;
        out.record = {VerifyMode::Exhaustive, detail};
        return out;
      }
    }
    out.ok = true;
    out.record = {VerifyMode::Exhaustive, detail};
    out.element = VerifyAccess::make(rule, out.record, eq);
    return out;
  }

  // Sampled mode: periodic permutations, window probes on random
  // configurations, and inverse round-trips.
  std::string detail = "sampled: periods<=" + std::to_string(policy.period_bound) +
                       " samples=" + std::to_string(policy.samples);
  for (int64_t p = 1; p <= policy.period_bound; ++p) {
    if (!permutes_periodic_points(*rule, p, policy.period_point_cap)) {
      // locate the colliding pair for a witness
      PeriodicAction a = periodic_action(*rule, p);
      out.failure = VerifyFailure::NotInjective;
      if (!a.points.empty()) out.witness = a.points.front();
      out.record = {VerifyMode::Sampled, detail + " (period " + std::to_string(p) + ")"};
      return out;
    }
  }

  RandomConfigSampler sampler(space, policy.seed, policy.probe_words);
  NodePtr inv = invert_node(rule);
  for (int64_t s = 0; s < policy.samples; ++s) {
    Config x = sampler.next();
    int64_t c0 = rule->eval_at(x, 0);
    for (int64_t k = 1; k <= 2 * M; ++k) {
      if (c0 == k + rule->eval_at(x, k)) {
        out.failure = VerifyFailure::NotInjective;
        out.witness = x.window(-n, k + 2 * n + 1);
        out.collision_shift = k;
        out.record = {VerifyMode::Sampled, detail};
        return out;
      }
    }
    bool has_preimage = false;
    for (int64_t k = -M; k <= M; ++k) {
      if (rule->eval_at(x, k) == -k) {
        has_preimage = true;
        break;
      }
    }
    if (!has_preimage) {
      out.failure = VerifyFailure::NotSurjective;
      out.witness = x.window(-(M + n), surj_len);
      out.record = {VerifyMode::Sampled, detail};
      return out;
    }
    // round-trips through the structural inverse
    if (inv->eval_at(x, c0) != -c0) {
      out.failure = VerifyFailure::NotInjective;
      out.witness = x.window(-(M + n), surj_len);
      out.record = {VerifyMode::Sampled, detail + " (inverse round-trip)"};
      return out;
    }
  }

  out.ok = true;
  out.record = {VerifyMode::Sampled, detail};
  out.element = VerifyAccess::make(rule, out.record, eq);
  return out;
}

TfgElement require_verified(const NodePtr& rule, const VerifyPolicy& policy,
                            const EqualityPolicy& eq) {
  VerifyOutcome out = verify_bijective(rule, policy, eq);
  if (!out.ok)
    throw Error(ErrorCode::InternalInconsistency,
                "construction produced a non-bijective rule (witness " +
                    word_to_string(out.witness) + ")");
  return *out.element;
}

}  // namespace tfg
