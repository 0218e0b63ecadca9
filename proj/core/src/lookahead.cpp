#include "tfg/lookahead.hpp"

#include <algorithm>

#include "tfg/errors.hpp"

namespace tfg {

namespace {

std::shared_ptr<const TableNode> table_within(const TfgElement& g, int64_t budget) {
  if (g.canonical()) return g.canonical();
  const ShiftSpace& space = g.domain();
  int64_t r = g.bounds().radius;
  int64_t size = 1;
  for (int64_t i = 0; i < 2 * r + 1; ++i) {
    size *= space.alphabet().size();
    if (size > budget)
      throw Error(ErrorCode::SearchBudgetExceeded,
                  "rule radius " + std::to_string(r) + " beyond the cylinder scan budget");
  }
  return minimize_table(tabulate(g.rule(), r));
}

}  // namespace

LookAheadProfile measure_lookahead(const TfgElement& g, int64_t N, int64_t budget) {
  auto table = table_within(g, budget);
  const ShiftSpace& space = g.domain();
  int sigma = space.alphabet().size();
  int64_t r = table->bounds().radius;
  LookAheadProfile profile;

  // best |m| over all defined table entries; reused for every n >= r
  int64_t best_overall = 0;
  int64_t best_overall_rank = -1;
  for (int64_t rank = 0; rank < table->value_count(); ++rank) {
    int32_t v = table->value_at_rank(rank);
    if (v == TableNode::kOffLanguage || v == 0) continue;
    if (std::abs(static_cast<int64_t>(v)) > best_overall) {
      best_overall = std::abs(static_cast<int64_t>(v));
      best_overall_rank = rank;
    }
  }

  for (int64_t n = 1; n <= N; ++n) {
    AlphaProfileRow row;
    row.n = n;
    std::optional<Word> best_window;
    int64_t best_move = 0;

    if (n >= r) {
      if (best_overall_rank >= 0) {
        best_move = best_overall;
        // extend the best radius-r window to radius n, admissibly
        Word core = table->word_of(best_overall_rank);
        Word w;
        if (space.is_full()) {
          w.assign(static_cast<size_t>(2 * n + 1), 0);
          std::copy(core.begin(), core.end(), w.begin() + static_cast<std::ptrdiff_t>(n - r));
        } else {
          Word left{core.front()}, right{core.back()};
          for (int64_t i = 0; i < n - r; ++i) {
            left.insert(left.begin(), space.any_predecessor(left.front()));
            right.push_back(space.any_successor(right.back()));
          }
          w.assign(left.begin(), left.end() - 1);
          w.insert(w.end(), core.begin(), core.end());
          w.insert(w.end(), right.begin() + 1, right.end());
        }
        best_window = w;
      }
    } else {
      // a radius-n cylinder is constant iff all radius-r refinements agree
      int64_t ext = ipow(sigma, r - n);
      int64_t mid = ipow(sigma, 2 * n + 1);
      for (int64_t c = 0; c < mid; ++c) {
        bool constant = true;
        bool seen = false;
        int32_t value = 0;
        for (int64_t left = 0; left < ext && constant; ++left) {
          for (int64_t right = 0; right < ext; ++right) {
            int64_t rank = (left * mid + c) * ext + right;
            int32_t v = table->value_at_rank(rank);
            if (v == TableNode::kOffLanguage) continue;
            if (!seen) {
              seen = true;
              value = v;
            } else if (v != value) {
              constant = false;
              break;
            }
          }
        }
        if (constant && seen && value != 0 &&
            std::abs(static_cast<int64_t>(value)) > best_move) {
          best_move = std::abs(static_cast<int64_t>(value));
          // reconstruct the center word from its rank
          Word w(static_cast<size_t>(2 * n + 1));
          int64_t rank = c;
          for (int64_t i = 2 * n; i >= 0; --i) {
            w[static_cast<size_t>(i)] = static_cast<Symbol>(rank % sigma);
            rank /= sigma;
          }
          best_window = w;
        }
      }
    }

    row.best_move = best_move;
    row.has_certificate = best_window.has_value();
    row.deficiency = std::max<int64_t>(0, n - best_move);
    profile.rows.push_back(row);
    if (best_window) {
      LookAheadCertificate cert;
      cert.window = *best_window;
      cert.n = n;
      // re-evaluate for the signed value
      Config x = space.is_full() ? Config({0}, *best_window, {0}, -n)
                                 : space.embed_word(*best_window, -n);
      cert.value = g.eval_at(x, 0);
      cert.deficiency = row.deficiency;
      profile.certificates.push_back(cert);
    }
  }
  return profile;
}

PlookAheadCertificate measure_plookahead(const TfgElement& g, int64_t N, int64_t point_cap) {
  const ShiftSpace& space = g.domain();
  std::optional<PlookAheadCertificate> best;
  for (int64_t q = 1; q <= 2 * N + 1; ++q) {
    sweep_periodic_points(space, q, point_cap, 0, 0, [&](const Word& w) {
      if (!space.is_full() && !space.cyclically_admissible(w)) return true;
      Config x = Config::periodic(w);
      int64_t m = g.eval_at(x, 0);
      if (m == 0) return true;
      PlookAheadCertificate cert;
      cert.point = x;
      cert.period = q;
      cert.n = std::max<int64_t>(1, (q - 1 + 1) / 2);  // ceil((q-1)/2)
      cert.value = m;
      cert.deficiency = std::max<int64_t>(0, cert.n - std::abs(m));
      if (!best || cert.deficiency < best->deficiency) best = cert;
      return true;
    });
  }
  if (!best)
    throw Error(ErrorCode::NoMovingPeriodicPoint,
                "cocycle vanishes on every periodic point of period <= " +
                    std::to_string(2 * N + 1));
  return *best;
}

PlookAheadCertificate lookaplooka_transform(const TfgElement& g,
                                            const LookAheadCertificate& cert) {
  int64_t n = cert.n;
  if (static_cast<int64_t>(cert.window.size()) != 2 * n + 1)
    throw Error(ErrorCode::BadInput, "certificate window length must be 2n+1");
  Config x = Config::periodic(cert.window).shifted(n);
  // x = sigma^n(w^Z) lies in [w]_{-n}: w starts at -n
  for (int64_t i = 0; i < 2 * n + 1; ++i) {
    if (x.symbol_at(-n + i) != cert.window[static_cast<size_t>(i)])
      throw Error(ErrorCode::InternalInconsistency, "periodicized window misplaced");
  }
  int64_t m = g.eval_at(x, 0);
  if (m != cert.value)
    throw Error(ErrorCode::AssertionFailure,
                "certificate value " + std::to_string(cert.value) +
                    " disagrees with the rule (" + std::to_string(m) + ")");
  PlookAheadCertificate out;
  out.point = x;
  out.period = 2 * n + 1;
  out.n = n;
  out.value = m;
  out.deficiency = std::max<int64_t>(0, n - std::abs(m));
  return out;
}

PlookAheadCertificate plookahead_from_point(const TfgElement& g, const Config& point,
                                            int64_t period) {
  int64_t primitive = period >= 1 ? point.global_period(period) : 0;
  if (primitive < 1 || period % primitive != 0)
    throw Error(ErrorCode::BadInput, "point is not periodic with the stated period");
  int64_t m = g.evaluate(point);
  if (m == 0) throw Error(ErrorCode::NoMovingPeriodicPoint, "cocycle vanishes at the point");
  PlookAheadCertificate cert;
  cert.point = point;
  cert.period = period;
  cert.n = std::max<int64_t>(1, period / 2);  // ceil((q-1)/2)
  cert.value = m;
  cert.deficiency = std::max<int64_t>(0, cert.n - std::abs(m));
  return cert;
}

}  // namespace tfg
