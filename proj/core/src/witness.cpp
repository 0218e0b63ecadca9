#include "tfg/witness.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "tfg/errors.hpp"

namespace tfg {

int64_t Allocation::top_total() const {
  int64_t t = 0;
  for (auto& [a, b] : blocks) t += a;
  return t;
}

int64_t Allocation::bottom_total() const {
  int64_t t = 0;
  for (auto& [a, b] : blocks) t += b;
  return t;
}

Allocation allocate_cells(int64_t d, int64_t p, int64_t c_u, int64_t multiplier) {
  if (d <= 0) throw Error(ErrorCode::BadInput, "the element must move: d must be positive");
  if (d % 2 != 0)
    throw Error(ErrorCode::BadInput, "d must be even (node actions are pre-doubled)");
  if (p <= d) throw Error(ErrorCode::BadInput, "need d < p");
  if (c_u < 1) throw Error(ErrorCode::BadInput, "slack constant must be >= 1");
  int64_t cap = multiplier * c_u;

  // main recipe: a = d blocks
  {
    Allocation alloc;
    int64_t a = d;
    int64_t spread = 2 * p - d - 1;       // bottom cells over the a-1 leftmost blocks
    int64_t q = spread / (a - 1 == 0 ? 1 : a - 1);
    int64_t rem = spread % (a - 1 == 0 ? 1 : a - 1);
    bool ok = true;
    for (int64_t j = 0; j < a; ++j) {
      int64_t top = 1;  // one in front, one each over the a-1 rightmost
      int64_t bottom;
      if (j == a - 1) {
        bottom = 1;
      } else {
        bottom = q + (j < rem ? 1 : 0);
      }
      if (top < 1 || top > cap || bottom < 1 || bottom > cap) ok = false;
      alloc.blocks.emplace_back(top, bottom);
    }
    if (ok && alloc.top_total() == d && alloc.bottom_total() == 2 * p - d) return alloc;
  }

  // fallback: two blocks on the same 2p cycle
  {
    Allocation alloc;
    alloc.fallback = true;
    int64_t left_bottom = 2 * p - d - 1;
    int64_t right_top = d - 1;
    if (left_bottom >= 1 && left_bottom <= cap && right_top >= 1 && right_top <= cap) {
      alloc.blocks.emplace_back(1, left_bottom);
      alloc.blocks.emplace_back(right_top, 1);
      return alloc;
    }
  }

  throw Error(ErrorCode::ConstraintUnsatisfiable,
              "no block allocation for d=" + std::to_string(d) + " p=" + std::to_string(p) +
                  " cap=" + std::to_string(cap));
}

Allocation mirror_allocation(const Allocation& a) {
  Allocation m;
  m.fallback = a.fallback;
  for (auto it = a.blocks.rbegin(); it != a.blocks.rend(); ++it)
    m.blocks.emplace_back(it->second, it->first);
  return m;
}

CodeKey buffer_key(const GraphProductSpec& spec) {
  int64_t top = 0;
  for (const auto& v : spec.vertices) top = std::max(top, v.id);
  return CodeKey{top + 1, 0, 0, {}};
}

namespace {

// the node-alphabet content simulated on a letter's belt cycle
Config letter_content(const GraphProductSpec& spec, int64_t u, int64_t exponent, int64_t* d_out,
                      int64_t* p0_out) {
  const auto& vx = spec.vertex(u);
  if (vx.group.kind == NodeGroupKind::FreeCyclic) {
    if (exponent == 0) throw Error(ErrorCode::NotReduced, "zero exponent at a free node");
    *d_out = 2 * exponent;
    *p0_out = 1;
    return Config::constant(0);
  }
  int q = vx.group.order;
  int64_t k = ((exponent % q) + q) % q;
  if (k == 0) throw Error(ErrorCode::NotReduced, "exponent divisible by the node order");
  *d_out = 2 * k;
  // spread dial pattern: D_i at even positions, filler 0 at odd ones
  Word w;
  for (int i = 0; i < q; ++i) {
    w.push_back(i);
    w.push_back(0);
  }
  *p0_out = 2 * q;
  return Config::periodic(w);
}

struct LetterPlan {
  int64_t vertex = 0;
  int64_t exponent = 0;
  int64_t d = 0;
  int64_t p = 0;
  Allocation alloc;
  std::vector<CodeKey> keys;
};

LetterPlan plan_letter(const GraphProductSpec& spec, int64_t u, int64_t exponent) {
  LetterPlan plan;
  plan.vertex = u;
  plan.exponent = exponent;
  int64_t p0 = 1;
  Config content = letter_content(spec, u, exponent, &plan.d, &p0);

  // massage: n > |d|, n >= 2, p = 2^r p0 with n <= p-1
  int64_t n = std::max<int64_t>(std::abs(plan.d) + 1, 2);
  int64_t p = p0;
  while (p < n + 1) p *= 2;
  plan.p = p;

  const auto& vx = spec.vertex(u);
  Allocation alloc = allocate_cells(std::abs(plan.d), p, vx.slack, spec.slack_multiplier);
  if (plan.d < 0) alloc = mirror_allocation(alloc);
  plan.alloc = alloc;

  // lay the content around the cycle: traversal index i carries content(i);
  // tops are indices [0, T), bottoms wrap right-to-left after them
  int64_t T = alloc.top_total();
  int64_t cum_a = 0;
  std::vector<int64_t> bottoms_after;  // bottoms in blocks strictly right of j
  {
    int64_t suffix = 0;
    bottoms_after.assign(alloc.blocks.size(), 0);
    for (size_t j = alloc.blocks.size(); j-- > 0;) {
      bottoms_after[j] = suffix;
      suffix += alloc.blocks[j].second;
    }
  }
  for (size_t j = 0; j < alloc.blocks.size(); ++j) {
    auto [a, b] = alloc.blocks[j];
    CodeKey key;
    key.u = u;
    key.a = a;
    key.b = b;
    for (int64_t t = 0; t < a; ++t) key.v.push_back(content.symbol_at(cum_a + t));
    int64_t S = T + bottoms_after[j];
    for (int64_t t = 0; t < b; ++t) key.v.push_back(content.symbol_at(S + b - 1 - t));
    plan.keys.push_back(std::move(key));
    cum_a += a;
  }
  return plan;
}

bool commutes(const GraphProductSpec& spec, int64_t u, int64_t v) {
  return u == v || spec.has_edge(u, v);
}

void check_reduced(const GraphProductSpec& spec,
                   const std::vector<std::pair<int64_t, int64_t>>& word) {
  if (word.empty()) throw Error(ErrorCode::NotReduced, "empty word");
  for (auto& [u, e] : word) {
    const auto& vx = spec.vertex(u);
    if (vx.group.kind == NodeGroupKind::FreeCyclic) {
      if (e == 0) throw Error(ErrorCode::NotReduced, "identity letter");
    } else if (((e % vx.group.order) + vx.group.order) % vx.group.order == 0) {
      throw Error(ErrorCode::NotReduced, "identity letter");
    }
  }
  // two letters of the same vertex merge when everything between commutes
  for (size_t i = 0; i < word.size(); ++i) {
    for (size_t k = i + 1; k < word.size(); ++k) {
      if (word[k].first == word[i].first) {
        bool mergeable = true;
        for (size_t j = i + 1; j < k; ++j)
          if (!commutes(spec, word[j].first, word[i].first)) {
            mergeable = false;
            break;
          }
        if (mergeable)
          throw Error(ErrorCode::NotReduced,
                      "letters " + std::to_string(i) + " and " + std::to_string(k) + " merge");
        break;  // only the next occurrence matters
      }
      if (commutes(spec, word[k].first, word[i].first)) continue;
      break;
    }
  }
}

std::vector<int> greedy_chain(const GraphProductSpec& spec,
                              const std::vector<std::pair<int64_t, int64_t>>& word) {
  std::vector<int> chain{0};
  for (size_t i = 1; i < word.size(); ++i) {
    if (!commutes(spec, word[i].first, word[static_cast<size_t>(chain.back())].first))
      chain.push_back(static_cast<int>(i));
  }
  return chain;
}

}  // namespace

std::vector<std::pair<CodeKey, int64_t>> witness_keys(
    const GraphProductSpec& spec, const std::vector<std::pair<int64_t, int64_t>>& reduced_word) {
  check_reduced(spec, reduced_word);
  std::vector<int> chain = greedy_chain(spec, reduced_word);
  std::map<CodeKey, int64_t> keys;
  keys[buffer_key(spec)] = 0;
  for (int idx : chain) {
    auto [u, e] = reduced_word[static_cast<size_t>(idx)];
    LetterPlan plan = plan_letter(spec, u, e);
    for (const CodeKey& key : plan.keys) keys[key] = 0;
  }
  return {keys.begin(), keys.end()};
}

WitnessWord build_witness(const GraphProductSpec& spec,
                          const std::vector<std::pair<int64_t, int64_t>>& reduced_word,
                          const BeltMachines* machines, const EqualityPolicy& eq) {
  spec.validate();
  check_reduced(spec, reduced_word);
  std::vector<int> chain = greedy_chain(spec, reduced_word);

  std::optional<BeltMachines> own;
  if (!machines) {
    auto book = std::make_shared<Codebook>(
        Codebook::generate(Alphabet(2), witness_keys(spec, reduced_word)));
    own = BeltMachines::build(spec, book, builder_verify_policy(), eq);
    machines = &*own;
  }
  const std::shared_ptr<Codebook>& book = machines->book;

  WitnessWord w;
  w.book = book;

  const Word& buffer = book->word_for(buffer_key(spec));
  w.buffer_len = static_cast<int64_t>(buffer.size());
  w.word = buffer;

  // belts laid out left to right starting at absolute offset 0
  int64_t at = 0;
  for (int idx : chain) {
    auto [u, e] = reduced_word[static_cast<size_t>(idx)];
    LetterPlan plan = plan_letter(spec, u, e);
    WitnessBelt belt;
    belt.vertex = u;
    belt.displacement = plan.d;
    belt.half_cycle = plan.p;
    belt.allocation = plan.alloc;
    belt.keys = plan.keys;
    belt.start = at;
    for (const CodeKey& key : plan.keys) {
      const Word& bw = book->word_for(key);
      w.word.insert(w.word.end(), bw.begin(), bw.end());
      at += static_cast<int64_t>(bw.size());
    }
    belt.length = at - belt.start;
    w.belts.push_back(std::move(belt));
  }
  w.word.insert(w.word.end(), buffer.begin(), buffer.end());

  const WitnessBelt& last = w.belts.back();
  const CodeKey& last_key = last.keys.back();
  w.last_block_len = static_cast<int64_t>(book->word_for(last_key).size());

  // expected head offsets: entry at 0; each chain letter lands on the shared
  // junction cell (or the final rightmost bottom precell); skipped letters
  // hold still
  std::vector<int64_t> chain_exit(chain.size());
  for (size_t i = 0; i < chain.size(); ++i) {
    const WitnessBelt& belt = w.belts[i];
    int64_t last_block_start = belt.start + belt.length -
                               static_cast<int64_t>(book->word_for(belt.keys.back()).size());
    const CodeKey& key = belt.keys.back();
    int64_t own_exit = last_block_start + key.a + key.b - 1;
    if (i + 1 < chain.size()) {
      int64_t self_color = belt.vertex;
      int64_t right_color = w.belts[i + 1].vertex;
      chain_exit[i] = self_color > right_color ? w.belts[i + 1].start : own_exit;
    } else {
      chain_exit[i] = own_exit;
    }
  }
  w.expected_offsets.push_back(0);
  {
    size_t next_chain = 0;
    int64_t cur = 0;
    for (size_t i = 0; i < reduced_word.size(); ++i) {
      if (next_chain < chain.size() && static_cast<int>(i) == chain[next_chain]) {
        cur = chain_exit[next_chain];
        ++next_chain;
      }
      w.expected_offsets.push_back(cur);
    }
  }

  // letters and their elements over the shared codebook
  {
    size_t next_chain = 0;
    for (size_t i = 0; i < reduced_word.size(); ++i) {
      auto [u, e] = reduced_word[i];
      WitnessLetter letter;
      letter.vertex = u;
      letter.exponent = e;
      if (next_chain < chain.size() && static_cast<int>(i) == chain[next_chain]) {
        letter.chain_index = static_cast<int>(next_chain);
        ++next_chain;
      }
      w.letters.push_back(letter);
      w.letter_elements.push_back(
          node_element(spec, *book, u, e, machines->step(u), machines->reader(u), eq));
    }
  }

  w.configuration = Config({0}, w.word, {0}, -w.buffer_len);

  TfgElement image = w.letter_elements.front();
  for (size_t i = 1; i < w.letter_elements.size(); ++i)
    image = compose(w.letter_elements[i], image, eq);
  w.image = std::make_shared<TfgElement>(std::move(image));
  return w;
}

}  // namespace tfg
