// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its bounds and tolerances in code.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "tfg/json_io.hpp"
#include "tfg/lamplighter.hpp"
#include "tfg/moves.hpp"
#include "tfg/root.hpp"
#include "tfg/sampler.hpp"

using namespace tfg;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream log;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "    FAILED: " << what << "\n";
    }
  }
};

const ShiftSpace& bin() {
  static ShiftSpace s = ShiftSpace::full(Alphabet(2));
  return s;
}

// lean periodic-permutation oracle, rank-based, no word materialization
bool permutes_all_periods(const CocycleNode& rule, int64_t max_period) {
  const ShiftSpace& space = rule.domain();
  int sigma = space.alphabet().size();
  for (int64_t p = 1; p <= max_period; ++p) {
    if (space.is_full()) {
      int64_t count = ipow(sigma, p);
      std::vector<char> hit(static_cast<size_t>(count), 0);
      Word w(static_cast<size_t>(p), 0);
      while (true) {
        Config x = Config::periodic(w);
        int64_t c = rule.eval_at(x, 0);
        Word img = rotate_left(w, ((c % p) + p) % p);
        int64_t rank = 0;
        for (Symbol s : img) rank = rank * sigma + s;
        if (hit[static_cast<size_t>(rank)]) return false;
        hit[static_cast<size_t>(rank)] = 1;
        int64_t i = p - 1;
        while (i >= 0 && w[static_cast<size_t>(i)] == sigma - 1) {
          w[static_cast<size_t>(i)] = 0;
          --i;
        }
        if (i < 0) break;
        ++w[static_cast<size_t>(i)];
      }
    } else {
      if (!periodic_action(rule, p).is_permutation) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 1: verifier-oracle agreement over the corpus, periods <= 10

bool criterion1(std::ostream& out) {
  Check check;
  struct Entry {
    std::string name;
    NodePtr rule;
  };
  std::vector<Entry> corpus;
  corpus.push_back({"sigma", TfgElement::shift(bin()).rule()});
  corpus.push_back({"sigma_inv", TfgElement::shift(bin(), -1).rule()});
  corpus.push_back({"pi01", TfgElement::dial(2).rule()});
  corpus.push_back({"dial3", TfgElement::dial(3).rule()});
  corpus.push_back({"dial4", TfgElement::dial(4).rule()});
  LamplighterPair lamp = build_lamplighter();
  corpus.push_back({"lamp_walk", lamp.walk.rule()});
  corpus.push_back({"lamp_toggle", lamp.toggle.rule()});

  RaagCheckPolicy raag_policy;
  raag_policy.vp = builder_verify_policy();
  GraphProductSpec two = GraphProductSpec::raag(2, {});
  BeltMachines m2 = standard_machines(two, raag_policy);
  corpus.push_back({"belt2_f0", m2.step(0).rule()});
  corpus.push_back({"belt2_f1", m2.step(1).rule()});
  GraphProductSpec three = GraphProductSpec::raag(3, {{0, 1}});
  BeltMachines m3 = standard_machines(three, raag_policy);
  for (int64_t u = 0; u < 3; ++u)
    corpus.push_back({"belt3_f" + std::to_string(u), m3.step(u).rule()});

  VerifyPolicy vp;  // full budget
  for (const Entry& entry : corpus) {
    VerifyOutcome verdict = verify_bijective(entry.rule, vp);
    bool oracle = permutes_all_periods(*entry.rule, 10);
    check.expect(verdict.ok == oracle, entry.name + ": verdict " +
                                           (verdict.ok ? "true" : "false") + " vs oracle " +
                                           (oracle ? "true" : "false"));
    check.expect(verdict.ok, entry.name + " should verify");
  }
  out << check.log.str();
  return check.ok;
}

// ---------------------------------------------------------------------------
// criterion 2: group laws, tier E for small radii, tier P otherwise

bool criterion2(std::ostream& out) {
  Check check;
  EqualityPolicy exact_eq;
  exact_eq.random_samples = 2000;

  std::vector<TfgElement> small = {TfgElement::shift(bin()), TfgElement::shift(bin(), -1),
                                   TfgElement::dial(2), TfgElement::shift(bin(), 2)};
  // associativity, exhaustively exact: radii stay within the binary cap 6
  for (const TfgElement& a : small)
    for (const TfgElement& b : small)
      for (const TfgElement& c : small) {
        EqualityVerdict v =
            equal(compose(compose(a, b), c), compose(a, compose(b, c)), exact_eq);
        check.expect(v.equal && v.exact, "tier-E associativity");
      }
  for (const TfgElement& g : small) {
    EqualityVerdict l = equal(compose(g, invert(g)), TfgElement::identity(bin()), exact_eq);
    EqualityVerdict r = equal(compose(invert(g), g), TfgElement::identity(bin()), exact_eq);
    check.expect(l.equal && l.exact && r.equal && r.exact, "tier-E inverse law");
  }

  // larger radii: lamplighter material at tier P (period <= 12, capped)
  LamplighterPair lamp = build_lamplighter();
  EqualityPolicy tier_p;
  tier_p.period_bound = 12;
  tier_p.period_point_cap = 1 << 14;
  tier_p.period_samples = 1 << 12;
  tier_p.random_samples = 4000;
  tier_p.probe_words = {word_from_digits("3210"), word_from_digits("3220")};
  std::vector<TfgElement> big = {lamp.walk, lamp.toggle,
                                 compose(lamp.walk, lamp.toggle, tier_p)};
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 6; ++trial) {
    const TfgElement& a = big[rng() % big.size()];
    const TfgElement& b = big[rng() % big.size()];
    const TfgElement& c = big[rng() % big.size()];
    EqualityVerdict v = equal(compose(compose(a, b), c), compose(a, compose(b, c)), tier_p);
    check.expect(v.equal, "tier-P associativity");
  }
  for (const TfgElement& g : big) {
    check.expect(equal(compose(g, invert(g)), TfgElement::identity(g.domain()), tier_p).equal,
                 "tier-P inverse law");
    check.expect(equal(compose(invert(g), g), TfgElement::identity(g.domain()), tier_p).equal,
                 "tier-P inverse law (left)");
  }
  out << check.log.str();
  return check.ok;
}

// ---------------------------------------------------------------------------
// criterion 3: graph products on K2, the free pair, P3 and C4

std::vector<GraphProductReport> g_raag_reports;  // reused by criterion 7

// criterion 7 can run standalone: rebuild a small report set on demand
void ensure_raag_reports() {
  if (!g_raag_reports.empty()) return;
  RaagCheckPolicy policy;
  policy.vp = builder_verify_policy();
  policy.eq.period_bound = 8;
  policy.eq.random_samples = 2000;
  for (const GraphProductSpec& spec :
       {GraphProductSpec::raag(2, {}), GraphProductSpec::raag(3, {{0, 1}})})
    g_raag_reports.push_back(verify_graph_product(spec, policy));
}

bool criterion3(std::ostream& out) {
  Check check;
  RaagCheckPolicy policy;
  policy.vp = builder_verify_policy();
  policy.eq.period_bound = 12;
  policy.eq.random_samples = 100000;

  struct Graph {
    std::string name;
    GraphProductSpec spec;
  };
  std::vector<Graph> graphs;
  graphs.push_back({"K2", GraphProductSpec::raag(2, {{0, 1}})});
  graphs.push_back({"free pair", GraphProductSpec::raag(2, {})});
  graphs.push_back({"P3", GraphProductSpec::raag(3, {{0, 1}, {1, 2}})});
  graphs.push_back({"C4", GraphProductSpec::raag(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})});

  g_raag_reports.clear();
  for (const Graph& graph : graphs) {
    GraphProductReport report = verify_graph_product(graph.spec, policy);
    g_raag_reports.push_back(report);
    check.expect(report.ok, graph.name + ": report not ok");
    for (const EdgeCheck& e : report.edges)
      check.expect(e.identity, graph.name + ": edge commutator nontrivial");
    for (const NonEdgeCheck& e : report.non_edges) {
      check.expect(e.nontrivial, graph.name + ": non-edge commutator trivial");
      check.expect(e.offsets_match, graph.name + ": witness offsets diverge");
    }
  }

  // the two-generator free case: every freely reduced word of length <= 4
  GraphProductSpec free2 = GraphProductSpec::raag(2, {});
  BeltMachines machines = standard_machines(free2, policy);
  // pre-extend the shared codebook with every key those words need
  {
    std::map<CodeKey, int64_t> keys;
    for (const auto& [key, w] : machines.book->entries()) keys[key] = 0;
    std::function<void(std::vector<int>&, int)> expand = [&](std::vector<int>& letters,
                                                             int depth) {
      if (!letters.empty()) {
        std::vector<std::pair<int64_t, int64_t>> word;
        for (int letter : letters) {
          int64_t vtx = letter / 2;
          int64_t sign = (letter % 2 == 0) ? 1 : -1;
          if (!word.empty() && word.back().first == vtx)
            word.back().second += sign;
          else
            word.emplace_back(vtx, sign);
        }
        bool reduced = true;
        for (auto& [vtx, e] : word) reduced = reduced && e != 0;
        if (reduced)
          for (auto& [key, len] : witness_keys(free2, word)) keys[key] = len;
      }
      if (depth == 0) return;
      for (int next = 0; next < 4; ++next) {
        if (!letters.empty() && (letters.back() ^ 1) == next) continue;  // free reduction
        letters.push_back(next);
        expand(letters, depth - 1);
        letters.pop_back();
      }
    };
    std::vector<int> letters;
    expand(letters, 4);
    auto book = std::make_shared<Codebook>(
        Codebook::generate(Alphabet(2), {keys.begin(), keys.end()}));
    machines = BeltMachines::build(free2, book, policy.vp, policy.eq);
  }

  int64_t words_checked = 0;
  std::function<void(std::vector<int>&, int)> sweep = [&](std::vector<int>& letters, int depth) {
    if (!check.ok) return;
    if (!letters.empty()) {
      std::vector<std::pair<int64_t, int64_t>> word;
      for (int letter : letters) {
        int64_t vtx = letter / 2;
        int64_t sign = (letter % 2 == 0) ? 1 : -1;
        if (!word.empty() && word.back().first == vtx)
          word.back().second += sign;
        else
          word.emplace_back(vtx, sign);
      }
      bool reduced = true;
      for (auto& [vtx, e] : word) reduced = reduced && e != 0;
      if (reduced) {
        WitnessWord w = build_witness(free2, word, &machines, policy.eq);
        check.expect(witness_offsets_match(w), "free word witness offsets");
        int64_t final_offset = w.image->evaluate(w.configuration);
        check.expect(final_offset == w.expected_offsets.back(), "free word image offset");
        check.expect(final_offset != 0, "free word acts trivially");
        ++words_checked;
      }
    }
    if (depth == 0) return;
    for (int next = 0; next < 4; ++next) {
      if (!letters.empty() && (letters.back() ^ 1) == next) continue;
      letters.push_back(next);
      sweep(letters, depth - 1);
      letters.pop_back();
    }
  };
  std::vector<int> letters;
  sweep(letters, 4);
  check.expect(words_checked == 160, "expected 160 freely reduced words, saw " +
                                         std::to_string(words_checked));

  out << check.log.str();
  return check.ok;
}

// ---------------------------------------------------------------------------
// criterion 4: allocation arithmetic on 1000 random valid triples

bool criterion4(std::ostream& out) {
  Check check;
  std::mt19937_64 rng(0xa110c);
  std::uniform_int_distribution<int64_t> d_half(1, 20);
  std::uniform_int_distribution<int64_t> p_extra(2, 100);
  std::uniform_int_distribution<int64_t> slack(1, 3);

  int done = 0;
  while (done < 1000) {
    int64_t d = 2 * d_half(rng);
    int64_t p = d + p_extra(rng);
    int64_t c_u = slack(rng);
    int64_t cap = 100 * c_u;

    // independent feasibility arithmetic for both recipes
    int64_t spread = 2 * p - d - 1;
    int64_t per_block_max = (spread + d - 2) / (d - 1);
    bool main_fits = per_block_max <= cap;
    bool fallback_fits = spread >= 1 && spread <= cap && d - 1 >= 1 && d - 1 <= cap;
    if (!main_fits && !fallback_fits) continue;  // stay in the valid envelope
    ++done;

    Allocation alloc = allocate_cells(d, p, c_u);
    check.expect(alloc.top_total() == d, "top total != d");
    check.expect(alloc.bottom_total() == 2 * p - d, "bottom total != 2p-d");
    for (auto [a, b] : alloc.blocks) {
      check.expect(a >= 1 && a <= cap, "top count out of range");
      check.expect(b >= 1 && b <= cap, "bottom count out of range");
    }
    check.expect(alloc.fallback == !main_fits, "fallback trigger mismatch");
    if (!check.ok) break;
  }
  out << check.log.str();
  return check.ok;
}

// ---------------------------------------------------------------------------
// criterion 5: the lamplighter relations

bool criterion5(std::ostream& out) {
  Check check;
  LamplighterPair lamp = build_lamplighter();
  Word u = word_from_digits("3210"), v = word_from_digits("3220");

  // a^2 = id exactly
  EqualityPolicy exact_eq;
  exact_eq.random_samples = 1000;
  EqualityVerdict squared = equal(compose(lamp.toggle, lamp.toggle, exact_eq),
                                  TfgElement::identity(lamp.toggle.domain()), exact_eq);
  check.expect(squared.equal && squared.exact && squared.tier == EqualityTier::Exhaustive,
               "toggle squared should be exactly the identity");

  // [a, t^-i a t^i] = id for i <= 4, periods <= 14 (exhaustive to 10, seeded
  // samples beyond) plus 1e5 random configurations with planted blocks
  EqualityPolicy suite;
  suite.period_bound = 14;
  suite.period_point_cap = 1 << 21;
  suite.period_samples = 1 << 16;
  suite.random_samples = 100000;
  suite.probe_words = {u, v};
  for (int i = 1; i <= 4; ++i) {
    TfgElement conj = conjugate(lamp.toggle, power(lamp.walk, i, suite), suite);
    TfgElement comm = commutator(lamp.toggle, conj, suite);
    EqualityVerdict verdict = equal(comm, TfgElement::identity(comm.domain()), suite);
    check.expect(verdict.equal, "conjugate commutator i=" + std::to_string(i));
  }

  // nontrivial lamp words act nontrivially on the single-v belt witness
  {
    Word center;
    std::vector<std::string> pattern = {"3210", "3210", "3220", "3210", "3210"};
    for (const auto& block : pattern) {
      Word w = word_from_digits(block);
      center.insert(center.end(), w.begin(), w.end());
    }
    for (int64_t vpos : {2}) {
      // lamp words: products of distinct conjugates a^{t^i}, i in the belt
      for (const std::vector<int>& word : {std::vector<int>{vpos == 2 ? 2 : 1},
                                           std::vector<int>{0, 2}, std::vector<int>{1, 2},
                                           std::vector<int>{0, 1, 2}}) {
        TfgElement acc = TfgElement::identity(lamp.walk.domain());
        for (int i : word)
          acc = compose(acc, conjugate(lamp.toggle, power(lamp.walk, i, exact_eq), exact_eq),
                        exact_eq);
        // head at the first block; the v block sits at run position 2
        Config x({0}, center, {0}, 0);
        bool moves = false;
        for (int64_t offset : {0, 1}) moves = moves || acc.eval_at(x, offset) != 0;
        check.expect(moves, "lamp word fixes the single-v witness");
      }
    }
  }

  // the walk has order beyond 64: on a 70-block belt no power <= 64 returns
  {
    Word center;
    for (int i = 0; i < 70; ++i) center.insert(center.end(), u.begin(), u.end());
    Config x({0}, center, {0}, 0);
    int64_t offset = 0;
    for (int k = 1; k <= 64; ++k) {
      offset += lamp.walk.eval_at(x, offset);
      check.expect(offset != 0, "walk power " + std::to_string(k) + " returned");
    }
  }

  out << check.log.str();
  return check.ok;
}

// ---------------------------------------------------------------------------
// criterion 6: simulation is a homomorphism on 200 seeded pairs

bool criterion6(std::ostream& out) {
  Check check;
  EqualityPolicy eq;
  eq.period_bound = 12;
  eq.period_point_cap = 1 << 14;
  eq.period_samples = 1 << 12;
  eq.random_samples = 2000;

  LamplighterPair lamp = build_lamplighter();
  eq.probe_words = {word_from_digits("3210"), word_from_digits("3220")};

  // reader pool: identity over binary, parity window over binary, mod-2 over
  // the lamplighter alphabet
  ReaderPtr id_bin = TableReader::identity(bin());
  ReaderPtr parity = std::make_shared<FnReader>(
      2, 1, "parity", [](const Config& x, int64_t pos) -> Symbol {
        return (x.symbol_at(pos - 1) + x.symbol_at(pos)) % 2;
      });
  ReaderPtr mod2 = std::make_shared<FnReader>(
      2, 0, "mod2", [](const Config& x, int64_t pos) -> Symbol { return x.symbol_at(pos) % 2; });

  struct Machine {
    TfgElement f;
    ReaderPtr s;
  };
  std::vector<Machine> machines = {{TfgElement::shift(bin()), id_bin},
                                   {TfgElement::dial(2), id_bin},
                                   {TfgElement::shift(bin(), 2), parity},
                                   {lamp.walk, mod2},
                                   {lamp.toggle, mod2}};
  std::vector<TfgElement> targets = {TfgElement::shift(bin()), TfgElement::shift(bin(), -1),
                                     TfgElement::dial(2), TfgElement::shift(bin(), 2),
                                     compose(TfgElement::dial(2), TfgElement::shift(bin()))};

  std::mt19937_64 rng(0x600d);
  for (int trial = 0; trial < 200; ++trial) {
    const Machine& m = machines[rng() % machines.size()];
    const TfgElement& g = targets[rng() % targets.size()];
    const TfgElement& h = targets[rng() % targets.size()];
    TfgElement lhs = simulate(compose(g, h, eq), m.f, m.s, eq);
    TfgElement rhs = compose(simulate(g, m.f, m.s, eq), simulate(h, m.f, m.s, eq), eq);
    EqualityVerdict verdict = equal(lhs, rhs, eq);
    check.expect(verdict.equal, "simulate homomorphism failed on trial " + std::to_string(trial));
    if (!check.ok) break;
  }
  out << check.log.str();
  return check.ok;
}

// ---------------------------------------------------------------------------
// criterion 7: the look-ahead transform and the bounded-deficiency report

bool criterion7(std::ostream& out) {
  Check check;
  std::vector<TfgElement> pool;
  for (int64_t k : {1, -1, 2, -2, 3, -3, 4, -4}) pool.push_back(TfgElement::shift(bin(), k));
  pool.push_back(TfgElement::dial(2));
  pool.push_back(TfgElement::dial(3));
  pool.push_back(even_double(TfgElement::shift(bin())));
  pool.push_back(even_double(TfgElement::dial(2)));
  pool.push_back(compose(TfgElement::dial(2), TfgElement::shift(bin())));
  pool.push_back(compose(TfgElement::shift(bin(), 2), TfgElement::dial(2)));
  LamplighterPair lamp = build_lamplighter();
  pool.push_back(lamp.toggle);

  int64_t transformed = 0;
  for (const TfgElement& g : pool) {
    LookAheadProfile profile = measure_lookahead(g, 7);
    // monotone best moves
    for (size_t i = 1; i < profile.rows.size(); ++i)
      check.expect(profile.rows[i].best_move >= profile.rows[i - 1].best_move,
                   "profile not monotone");
    for (const LookAheadCertificate& cert : profile.certificates) {
      PlookAheadCertificate pc = lookaplooka_transform(g, cert);
      check.expect(pc.value == cert.value, "transform changed the move value");
      check.expect(pc.period <= 2 * cert.n + 1, "transformed period too long");
      ++transformed;
    }
  }
  check.expect(transformed >= 100,
               "only " + std::to_string(transformed) + " certificates transformed");

  // graph-product generators report a bounded deficiency and witness ratios
  ensure_raag_reports();
  int64_t C = 0;
  for (const GraphProductReport& report : g_raag_reports) {
    C = std::max(C, report.deficiency_bound);
    for (const GeneratorLookahead& row : report.lookahead)
      check.expect(row.deficiency <= report.deficiency_bound, "deficiency above the bound");
    for (const WitnessBoundRow& row : report.witness_bounds)
      if (row.t_len >= report.ratio_threshold)
        check.expect(3 * (row.t_len - row.last_block - 2 * row.buffer) >= row.t_len,
                     "witness shift below |t|/3 above the threshold");
  }
  out << "    deficiency bound C = " << C << "\n";
  out << check.log.str();
  return check.ok;
}

// ---------------------------------------------------------------------------
// criterion 8: the vertex-shift embedding fixture

bool criterion8(std::ostream& out) {
  Check check;
  SchemeOptions options;
  options.period_word = word_from_digits("01");
  options.codebook = std::map<Symbol, Word>{{0, word_from_digits("3210")},
                                            {1, word_from_digits("3220")}};
  EmbeddingScheme scheme = make_scheme(ShiftSpace::golden_mean(), Alphabet(4), options);
  check.expect(scheme.period() == 2, "p != 2");
  check.expect(scheme.transition_radius == 1, "r != 1");
  check.expect(scheme.codebook.at(0).size() == 4 && scheme.codebook.at(1).size() == 4,
               "block length != 4");

  // the exact elimination sequence of the worked example
  Word window = word_from_digits("000");
  for (char c : std::string("01101001")) {
    const Word& w = scheme.codebook.at(c - '0');
    window.insert(window.end(), w.begin(), w.end());
  }
  window.push_back(0);
  SoficParse parse = parse_sofic_belts(scheme, window);
  check.expect(parse.blocks.size() == 8, "expected 8 preblocks");
  check.expect(parse.blocks[1].removed && parse.blocks[2].removed, "subscript 11 not removed");
  check.expect(parse.blocks[0].erased, "isolated block not erased");
  check.expect(parse.belts.size() == 1 && parse.belts[0].block_indices.size() == 5,
               "surviving belt should have blocks 4..8");
  for (const SoficBelt& belt : parse.belts)
    check.expect(scheme.base.cyclically_admissible(belt.cycle_word), "belt cycle off language");

  // homomorphism for 20 sampled elements over the period <= 12 suite (capped)
  EqualityPolicy eq;
  eq.period_bound = 12;
  eq.period_point_cap = 1 << 13;
  eq.period_samples = 1 << 11;
  eq.random_samples = 500;
  eq.probe_words = {word_from_digits("3210"), word_from_digits("3220")};
  TfgElement follow = sofic_follow_element(scheme, builder_verify_policy(), eq);
  ReaderPtr reader = sofic_symbol_reader(scheme);

  std::vector<TfgElement> basis = {TfgElement::shift(scheme.base),
                                   TfgElement::shift(scheme.base, -1),
                                   TfgElement::pattern_cycler(scheme.base, word_from_digits("01")),
                                   TfgElement::pattern_cycler(scheme.base, word_from_digits("001"))};
  std::mt19937_64 rng(0x50f1c);
  std::vector<TfgElement> samples;
  for (int i = 0; i < 20; ++i) {
    TfgElement g = basis[rng() % basis.size()];
    int extra = static_cast<int>(rng() % 3);
    for (int j = 0; j < extra; ++j) g = compose(g, basis[rng() % basis.size()], eq);
    samples.push_back(g);
  }
  for (size_t i = 0; i < samples.size(); ++i) {
    const TfgElement& g = samples[i];
    const TfgElement& h = samples[(i + 1) % samples.size()];
    TfgElement lhs = embed_element(scheme, compose(g, h, eq), follow, reader, eq);
    TfgElement rhs = compose(embed_element(scheme, g, follow, reader, eq),
                             embed_element(scheme, h, follow, reader, eq), eq);
    EqualityVerdict verdict = equal(lhs, rhs, eq);
    check.expect(verdict.equal, "embedding homomorphism failed at sample " + std::to_string(i));
    if (!check.ok) break;
  }
  out << check.log.str();
  return check.ok;
}

// ---------------------------------------------------------------------------
// criterion 9: the cancellation identity and the unique-moves certificates

bool criterion9(std::ostream& out) {
  Check check;
  RaagCheckPolicy policy;
  policy.vp = builder_verify_policy();
  policy.eq.period_bound = 8;
  policy.eq.random_samples = 2000;
  GraphProductSpec c4 = GraphProductSpec::raag(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  BeltMachines machines = standard_machines(c4, policy);
  policy.eq.probe_words.clear();
  for (const auto& [key, w] : machines.book->entries()) policy.eq.probe_words.push_back(w);

  TfgElement g0 = node_element(c4, *machines.book, 0, 1, machines.step(0), machines.reader(0),
                               policy.eq);
  TfgElement g1 = node_element(c4, *machines.book, 1, 1, machines.step(1), machines.reader(1),
                               policy.eq);

  FiniteAbelianGroup z2({2});
  auto h = z2.element(1);
  BetaMap beta = build_beta_cancel(z2, {g0, g1}, h, policy.eq);
  check.expect(beta.nonzero, "beta vanished on the commuting edge pair");

  // sampled points: periodic suite plus planted belt material
  std::vector<Config> samples;
  for (int64_t p = 1; p <= 8; ++p)
    sweep_periodic_points(bin(), p, 1 << 10, 0, 0, [&](const Word& w) {
      samples.push_back(Config::periodic(w));
      return true;
    });
  {
    RandomConfigSampler sampler(bin(), 0xbeef, policy.eq.probe_words);
    for (int i = 0; i < 200; ++i) samples.push_back(sampler.next());
  }

  // the four subset products of {g0, g1}
  std::vector<TfgElement> subset_products = {TfgElement::identity(bin()), g0, g1,
                                             compose(g0, g1, policy.eq)};
  std::vector<int> parity = {+1, -1, -1, +1};
  auto endos = all_endomorphisms(z2);

  for (const Config& x : samples) {
    int64_t c0 = g0.eval_at(x, 0);
    int64_t c1 = g1.eval_at(x, 0);
    check.expect(c0 == 0 || c1 == 0,
                 "edge generators share a moving point; colors must be disjoint");
    std::vector<int64_t> values;
    for (const TfgElement& gI : subset_products) values.push_back(gI.eval_at(x, 0));
    std::vector<int64_t> distinct = values;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    // every assignment gamma on the attained values must cancel
    std::vector<size_t> pick(distinct.size(), 0);
    while (true) {
      auto sum = z2.zero();
      for (size_t i = 0; i < subset_products.size(); ++i) {
        size_t slot = static_cast<size_t>(
            std::lower_bound(distinct.begin(), distinct.end(), values[i]) - distinct.begin());
        auto term = parity[i] > 0 ? h : z2.negate(h);
        sum = z2.add(sum, endos[pick[slot]].apply(z2, term));
      }
      check.expect(z2.is_zero(sum), "telescoping sum failed to cancel");
      size_t at = pick.size();
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
    if (!check.ok) break;
  }

  // the checker itself comes back empty-handed on those samples
  SearchPolicy search;
  search.period_bound = 8;
  auto cert = move_aithful_check(z2, beta.entries, search, samples);
  check.expect(!cert.has_value(), "move-aithful certificate found where none can exist");

  // and positively: unique moves for shift powers and for {id, pi01}
  {
    std::vector<TfgElement> family;
    for (int64_t k : {-2, -1, 0, 1, 2}) family.push_back(TfgElement::shift(bin(), k));
    auto c = unique_moves_check(family);
    check.expect(c.has_value() && c->point == Config::constant(0),
                 "shift family should certificate immediately");
  }
  {
    std::vector<TfgElement> family = {TfgElement::identity(bin()), TfgElement::dial(2)};
    auto c = unique_moves_check(family);
    check.expect(c.has_value(), "{id, pi01} should certificate");
    check.expect(c.has_value() && c->element_index == 1 && c->value != 0,
                 "pi01 should be the distinguished mover");
  }
  out << check.log.str();
  return check.ok;
}

// ---------------------------------------------------------------------------
// criterion 10: the wreath law over square roots, k = 2 and 3

bool criterion10(std::ostream& out) {
  Check check;
  EqualityPolicy eq;
  eq.period_bound = 6;
  eq.random_samples = 300;

  for (int64_t k : {2, 3}) {
    RootSubshift root = sqrt_shift(bin(), k);
    std::vector<WreathElement> generators;
    {
      WreathElement a = WreathElement::identity(root);
      a.tuple[0] = TfgElement::shift(bin());
      generators.push_back(a);
      WreathElement b = WreathElement::identity(root);
      std::rotate(b.perm.begin(), b.perm.begin() + 1, b.perm.end());
      generators.push_back(b);
      WreathElement c = WreathElement::identity(root);
      std::swap(c.perm[0], c.perm[1]);
      c.tuple[1] = TfgElement::dial(2);
      generators.push_back(c);
    }

    // law on all generator words of length <= 3, checked on the root suite
    std::vector<WreathElement> layer = {WreathElement::identity(root)};
    std::vector<TfgElement> embedded_layer = {TfgElement::identity(root.ambient)};
    std::vector<WreathElement> all_abstract = layer;
    int64_t max_p = 4 * k;
    for (int depth = 1; depth <= 3; ++depth) {
      std::vector<WreathElement> next;
      std::vector<TfgElement> next_embedded;
      for (size_t i = 0; i < layer.size(); ++i) {
        for (const WreathElement& gen : generators) {
          WreathElement product = wreath_multiply(gen, layer[i], eq);
          TfgElement stepped = compose(embed_wreath_Sk(root, gen, eq), embedded_layer[i], eq);
          check.expect(
              equal_on_root(root, embed_wreath_Sk(root, product, eq), stepped, max_p),
              "wreath law at k=" + std::to_string(k) + " depth " + std::to_string(depth));
          next.push_back(product);
          next_embedded.push_back(stepped);
          all_abstract.push_back(product);
        }
      }
      layer = std::move(next);
      embedded_layer = std::move(next_embedded);
      if (!check.ok) break;
    }

    // faithfulness: abstractly distinct elements act differently on some
    // periodic point of period <= 8 (k=2) / 9 (k=3)
    std::vector<WreathElement> distinct;
    for (const WreathElement& el : all_abstract) {
      bool seen = false;
      for (const WreathElement& d : distinct) seen = seen || wreath_same(el, d, eq);
      if (!seen) distinct.push_back(el);
    }
    int64_t faithful_p = k == 2 ? 8 : 9;
    for (size_t i = 0; i < distinct.size() && check.ok; ++i)
      for (size_t j = i + 1; j < distinct.size(); ++j) {
        bool same_action = equal_on_root(root, embed_wreath_Sk(root, distinct[i], eq),
                                         embed_wreath_Sk(root, distinct[j], eq), faithful_p);
        check.expect(!same_action, "distinct wreath elements act identically (k=" +
                                       std::to_string(k) + ")");
        if (!check.ok) break;
      }
  }
  out << check.log.str();
  return check.ok;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;  // 0 = no stated budget
    std::function<bool(std::ostream&)> run;
  };
  std::vector<Criterion> criteria = {
      {1, "verifier-oracle agreement", 300, criterion1},
      {2, "group laws", 0, criterion2},
      {3, "graph products", 900, criterion3},
      {4, "allocation arithmetic", 0, criterion4},
      {5, "lamplighter relations", 600, criterion5},
      {6, "simulation homomorphism", 0, criterion6},
      {7, "look-ahead transform and bounds", 0, criterion7},
      {8, "vertex-shift embedding", 0, criterion8},
      {9, "cancellation and unique moves", 0, criterion9},
      {10, "root wreath law", 0, criterion10},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    if (only != 0 && criterion.id != only) continue;
    std::ostringstream log;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(log);
    } catch (const std::exception& e) {
      log << "    exception: " << e.what() << "\n";
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.budget_seconds > 0 && seconds > criterion.budget_seconds) {
      ok = false;
      log << "    runtime " << seconds << "s exceeded the budget of "
          << criterion.budget_seconds << "s\n";
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion.id << ": "
              << criterion.name << " (" << static_cast<int>(seconds) << "s)\n"
              << log.str();
    if (!ok) ++failures;
  }
  return failures;
}
