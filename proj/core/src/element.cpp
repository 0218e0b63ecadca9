#include "tfg/element.hpp"

#include <algorithm>
#include <random>

#include "tfg/errors.hpp"
#include "tfg/sampler.hpp"

namespace tfg {

TfgElement::TfgElement(NodePtr rule, VerifyRecord record, const EqualityPolicy& pol)
    : rule_(std::move(rule)), record_(std::move(record)) {
  int sigma = rule_->domain().alphabet().size();
  int64_t cap = pol.exhaustive_radius(sigma);
  if (rule_->bounds().radius <= cap) {
    canonical_ = minimize_table(tabulate(rule_, rule_->bounds().radius));
  }
}

TfgElement TfgElement::trusted(NodePtr rule, std::string why, const EqualityPolicy& pol) {
  return TfgElement(std::move(rule), VerifyRecord{VerifyMode::Constructed, std::move(why)}, pol);
}

int64_t TfgElement::evaluate(const Config& x) const {
  domain().alphabet().check_word(x.left());
  domain().alphabet().check_word(x.center());
  domain().alphabet().check_word(x.right());
  if (!domain().is_full() && !domain().admissible_config(x))
    throw Error(ErrorCode::OffLanguage, "configuration leaves the vertex shift");
  return eval_at(x, 0);
}

TfgElement TfgElement::identity(const ShiftSpace& domain) {
  return trusted(TableNode::constant(domain, 0), "constant cocycle 0");
}

TfgElement TfgElement::shift(const ShiftSpace& domain, int64_t power) {
  return trusted(TableNode::constant(domain, static_cast<int32_t>(power)),
                 "constant cocycle " + std::to_string(power));
}

TfgElement TfgElement::pattern_cycler(const ShiftSpace& domain, const Word& pattern) {
  int64_t len = static_cast<int64_t>(pattern.size());
  if (len < 2) throw Error(ErrorCode::BadInput, "cycler pattern needs length >= 2");
  if (!domain.admissible(pattern))
    throw Error(ErrorCode::OffLanguage, "cycler pattern not admissible");
  for (int64_t t = 1; t < len; ++t) {
    // self-bordered patterns give overlapping occurrences and break the cycle
    bool border = true;
    for (int64_t i = 0; i + t < len; ++i)
      if (pattern[static_cast<size_t>(i)] != pattern[static_cast<size_t>(i + t)]) {
        border = false;
        break;
      }
    if (border) throw Error(ErrorCode::BadInput, "cycler pattern must be unbordered");
  }
  int64_t radius = len - 1;
  int sigma = domain.alphabet().size();
  int64_t total = ipow(sigma, 2 * radius + 1);
  std::vector<int32_t> vals(static_cast<size_t>(total), TableNode::kOffLanguage);
  for_each_admissible_word(domain, 2 * radius + 1, [&](const Word& w) {
    int64_t rank = 0;
    for (Symbol s : w) rank = rank * sigma + s;
    int32_t value = 0;
    for (int64_t j = 0; j < len; ++j) {
      // occurrence with the head at offset j covers [radius-j, radius-j+len)
      bool match = true;
      for (int64_t i = 0; i < len; ++i)
        if (w[static_cast<size_t>(radius - j + i)] != pattern[static_cast<size_t>(i)]) {
          match = false;
          break;
        }
      if (match) {
        value = (j + 1 < len) ? 1 : static_cast<int32_t>(-(len - 1));
        break;
      }
    }
    vals[static_cast<size_t>(rank)] = value;
    return true;
  });
  auto table = minimize_table(
      std::make_shared<TableNode>(domain, radius, std::move(vals)));
  return trusted(table, "aligned-occurrence cycler on " + word_to_string(pattern));
}

TfgElement TfgElement::dial(int q) {
  Word pattern;
  for (int i = 0; i < q; ++i) pattern.push_back(i);
  return pattern_cycler(ShiftSpace::full(Alphabet(q)), pattern);
}

TfgElement compose(const TfgElement& g, const TfgElement& h, const EqualityPolicy& pol) {
  if (g.domain() != h.domain())
    throw Error(ErrorCode::DomainMismatch, "cannot compose elements over different shifts");
  auto node = std::make_shared<ComposeNode>(g.rule(), h.rule());
  return TfgElement(node, VerifyRecord{VerifyMode::Constructed, "composition of bijections"}, pol);
}

TfgElement invert(const TfgElement& g, const EqualityPolicy& pol) {
  return TfgElement(invert_node(g.rule()),
                    VerifyRecord{VerifyMode::Constructed, "inverse of a bijection"}, pol);
}

TfgElement even_double(const TfgElement& g, const EqualityPolicy& pol) {
  auto node = std::make_shared<EvenDoubleNode>(g.rule());
  return TfgElement(node, VerifyRecord{VerifyMode::Constructed, "even-coordinate doubling"}, pol);
}

TfgElement power(const TfgElement& g, int64_t k, const EqualityPolicy& pol) {
  if (k == 0) return TfgElement::identity(g.domain());
  TfgElement base = k > 0 ? g : invert(g, pol);
  TfgElement acc = base;
  for (int64_t i = 1; i < std::abs(k); ++i) acc = compose(acc, base, pol);
  return acc;
}

TfgElement commutator(const TfgElement& g, const TfgElement& h, const EqualityPolicy& pol) {
  return compose(compose(invert(g, pol), invert(h, pol), pol), compose(g, h, pol), pol);
}

TfgElement conjugate(const TfgElement& g, const TfgElement& by, const EqualityPolicy& pol) {
  return compose(invert(by, pol), compose(g, by, pol), pol);
}

bool sweep_periodic_points(const ShiftSpace& space, int64_t p, int64_t cap, int64_t samples,
                           uint64_t seed, const std::function<bool(const Word&)>& fn) {
  int sigma = space.alphabet().size();
  if (space.is_full()) {
    int64_t count = 1;
    bool overflow = false;
    for (int64_t i = 0; i < p; ++i) {
      count *= sigma;
      if (count > cap) {
        overflow = true;
        break;
      }
    }
    if (!overflow) {
      Word w(static_cast<size_t>(p), 0);
      while (true) {
        if (!fn(w)) return true;
        int64_t i = p - 1;
        while (i >= 0 && w[static_cast<size_t>(i)] == sigma - 1) {
          w[static_cast<size_t>(i)] = 0;
          --i;
        }
        if (i < 0) break;
        ++w[static_cast<size_t>(i)];
      }
      return true;
    }
    std::mt19937_64 rng(seed ^ (0x5851f42d4c957f2dull * static_cast<uint64_t>(p)));
    std::uniform_int_distribution<int> dist(0, sigma - 1);
    Word w(static_cast<size_t>(p));
    for (int64_t s = 0; s < samples; ++s) {
      for (auto& a : w) a = dist(rng);
      if (!fn(w)) return false;
    }
    return false;
  }
  // vertex shifts: cyclically admissible words; these spaces stay small
  for (const Word& w : space.periodic_words(p))
    if (!fn(w)) break;
  return true;
}

PeriodicAction periodic_action(const CocycleNode& rule, int64_t p) {
  const ShiftSpace& space = rule.domain();
  PeriodicAction out;
  out.period = p;
  out.points = space.periodic_words(p);
  out.image.assign(out.points.size(), -1);
  std::vector<char> hit(out.points.size(), 0);
  bool perm = true;
  for (size_t i = 0; i < out.points.size(); ++i) {
    Config x = Config::periodic(out.points[i]);
    int64_t c = rule.eval_at(x, 0);
    Word img = rotate_left(out.points[i], ((c % p) + p) % p);
    auto it = std::lower_bound(out.points.begin(), out.points.end(), img);
    if (it == out.points.end() || *it != img) {
      perm = false;
      continue;
    }
    size_t j = static_cast<size_t>(it - out.points.begin());
    out.image[i] = static_cast<int64_t>(j);
    if (hit[j]) perm = false;
    hit[j] = 1;
  }
  for (char h : hit) perm = perm && h;
  out.is_permutation = perm;
  return out;
}

PeriodicAction periodic_permutation(const TfgElement& g, int64_t p) {
  PeriodicAction a = periodic_action(*g.rule(), p);
  if (!a.is_permutation)
    throw Error(ErrorCode::InternalInconsistency,
                "verified element does not permute the periodic points");
  return a;
}

namespace {

struct Disagreement {
  bool found = false;
  Config witness = Config::constant(0);
  std::string where;
};

bool cocycles_agree(const TfgElement& g, const TfgElement& h, const Config& x) {
  return g.evaluate(x) == h.evaluate(x);
}

}  // namespace

EqualityVerdict equal(const TfgElement& g, const TfgElement& h, const EqualityPolicy& pol) {
  if (g.domain() != h.domain())
    throw Error(ErrorCode::DomainMismatch, "cannot compare elements over different shifts");
  const ShiftSpace& space = g.domain();
  EqualityVerdict v;

  // Tier E: both canonical tables exist when certified radii fit the policy.
  if (g.canonical() && h.canonical()) {
    const auto& tg = g.canonical();
    const auto& th = h.canonical();
    v.tier = EqualityTier::Exhaustive;
    v.exact = true;
    if (tg->bounds().radius == th->bounds().radius && tg->values() == th->values()) {
      v.equal = true;
      v.detail = "tier E at r=" + std::to_string(tg->bounds().radius);
      return v;
    }
    // minimal tables are canonical per function, so a difference is real;
    // locate a witness window at the common radius
    int64_t r = std::max(tg->bounds().radius, th->bounds().radius);
    Disagreement dis;
    for_each_admissible_word(space, 2 * r + 1, [&](const Word& w) {
      Config x = space.is_full() ? Config({0}, w, {0}, -r) : space.embed_word(w, -r);
      if (!cocycles_agree(g, h, x)) {
        dis.found = true;
        dis.witness = x;
        return false;
      }
      return true;
    });
    if (!dis.found)
      throw Error(ErrorCode::InternalInconsistency, "canonical tables differ but no witness");
    v.equal = false;
    v.witness = dis.witness;
    v.detail = "tier E counterexample at r=" + std::to_string(r);
    return v;
  }

  // Tier P
  bool all_exhaustive = true;
  Disagreement dis;
  for (int64_t p = 1; p <= pol.period_bound && !dis.found; ++p) {
    bool exact_p = sweep_periodic_points(space, p, pol.period_point_cap, pol.period_samples,
                                         pol.seed, [&](const Word& w) {
                                           Config x = Config::periodic(w);
                                           if (!cocycles_agree(g, h, x)) {
                                             dis.found = true;
                                             dis.witness = x;
                                             return false;
                                           }
                                           return true;
                                         });
    all_exhaustive = all_exhaustive && exact_p;
  }
  if (dis.found) {
    v.equal = false;
    v.exact = true;
    v.tier = EqualityTier::Periodic;
    v.witness = dis.witness;
    v.detail = "periodic counterexample";
    return v;
  }

  // Tier R
  RandomConfigSampler sampler(space, pol.seed, pol.probe_words);
  for (int64_t s = 0; s < pol.random_samples; ++s) {
    Config x = sampler.next();
    if (!cocycles_agree(g, h, x)) {
      v.equal = false;
      v.exact = true;
      v.tier = EqualityTier::Random;
      v.witness = x;
      v.detail = "random counterexample";
      return v;
    }
  }

  v.equal = true;
  v.exact = false;
  v.tier = EqualityTier::Periodic;
  v.detail = std::string("tier P period<=") + std::to_string(pol.period_bound) +
             (all_exhaustive ? "" : " (sampled)") + " + " + std::to_string(pol.random_samples) +
             " random";
  return v;
}

bool is_identity(const TfgElement& g, const EqualityPolicy& pol) {
  return equal(g, TfgElement::identity(g.domain()), pol).equal;
}

std::optional<int64_t> order_of(const TfgElement& g, int64_t bound, const EqualityPolicy& pol) {
  TfgElement acc = g;
  for (int64_t k = 1; k <= bound; ++k) {
    if (is_identity(acc, pol)) return k;
    acc = compose(acc, g, pol);
  }
  return std::nullopt;
}

}  // namespace tfg
