#include "tfg/raag.hpp"

#include <algorithm>

#include "tfg/errors.hpp"

namespace tfg {

namespace {

using ReducedWord = std::vector<std::pair<int64_t, int64_t>>;

ReducedWord commutator_word(int64_t u, int64_t v) {
  // application order for [ghat_u, ghat_v] = u^-1 v^-1 u v
  return {{v, 1}, {u, 1}, {v, -1}, {u, -1}};
}

std::vector<std::pair<int64_t, int64_t>> non_edge_pairs(const GraphProductSpec& spec) {
  std::vector<std::pair<int64_t, int64_t>> out;
  for (size_t i = 0; i < spec.vertices.size(); ++i)
    for (size_t j = i + 1; j < spec.vertices.size(); ++j) {
      int64_t u = spec.vertices[i].id, v = spec.vertices[j].id;
      if (!spec.has_edge(u, v)) out.emplace_back(u, v);
    }
  return out;
}

}  // namespace

bool witness_offsets_match(const WitnessWord& w) {
  const Config& x = w.configuration;
  int64_t offset = 0;
  if (w.expected_offsets.front() != 0) return false;
  for (size_t i = 0; i < w.letter_elements.size(); ++i) {
    offset += w.letter_elements[i].eval_at(x, offset);
    if (offset != w.expected_offsets[i + 1]) return false;
  }
  return true;
}

BeltMachines standard_machines(const GraphProductSpec& spec, const RaagCheckPolicy& policy) {
  std::map<CodeKey, int64_t> keys;
  keys[buffer_key(spec)] = 0;
  auto add = [&](const ReducedWord& word) {
    for (auto& [key, len] : witness_keys(spec, word)) keys[key] = len;
  };
  for (const auto& vx : spec.vertices) {
    add({{vx.id, 1}});
    add({{vx.id, -1}});
  }
  for (auto [u, v] : non_edge_pairs(spec)) add(commutator_word(u, v));
  auto book = std::make_shared<Codebook>(
      Codebook::generate(Alphabet(2), {keys.begin(), keys.end()}));
  return BeltMachines::build(spec, book, policy.vp, policy.eq);
}

PlookAheadCertificate generator_certificate(const GraphProductSpec& spec,
                                            const BeltMachines& machines, int64_t u,
                                            const EqualityPolicy& eq) {
  WitnessWord w = build_witness(spec, {{u, 1}}, &machines, eq);
  // periodicize t = t' belt t' and point the head at the belt entry
  Config point = Config::periodic(w.word).shifted(w.buffer_len);
  int64_t period = static_cast<int64_t>(w.word.size());
  return plookahead_from_point(w.letter_elements.front(), point, period);
}

GraphProductReport verify_graph_product(const GraphProductSpec& spec,
                                        const RaagCheckPolicy& policy) {
  spec.validate();
  GraphProductReport report;
  BeltMachines machines = standard_machines(spec, policy);

  // plant codebook words into the random equality probes
  EqualityPolicy eq = policy.eq;
  if (eq.probe_words.empty())
    for (const auto& [key, w] : machines.book->entries()) eq.probe_words.push_back(w);

  std::map<int64_t, TfgElement> generators;
  for (const auto& vx : spec.vertices)
    generators.emplace(vx.id, node_element(spec, *machines.book, vx.id, 1,
                                           machines.step(vx.id), machines.reader(vx.id), eq));

  bool ok = true;

  // (i) edges: commutators vanish
  for (auto [u, v] : spec.edges) {
    EdgeCheck check;
    check.u = u;
    check.v = v;
    TfgElement comm = commutator(generators.at(u), generators.at(v), eq);
    EqualityVerdict verdict = equal(comm, TfgElement::identity(comm.domain()), eq);
    check.identity = verdict.equal;
    check.exact = verdict.exact;
    check.detail = verdict.detail;
    ok = ok && check.identity;
    report.edges.push_back(check);
  }

  // (ii) non-edges: commutators move their witnesses
  for (auto [u, v] : non_edge_pairs(spec)) {
    NonEdgeCheck check;
    check.u = u;
    check.v = v;
    WitnessWord w = build_witness(spec, commutator_word(u, v), &machines, eq);
    check.offsets_match = witness_offsets_match(w);
    check.final_offset = w.image->evaluate(w.configuration);
    check.nontrivial = check.final_offset != 0;
    ok = ok && check.offsets_match && check.nontrivial;
    report.non_edges.push_back(check);

    WitnessBoundRow row;
    row.t_len = static_cast<int64_t>(w.word.size());
    row.last_block = w.last_block_len;
    row.buffer = w.buffer_len;
    row.at_least_third = 3 * (row.t_len - row.last_block - 2 * row.buffer) >= row.t_len;
    report.witness_bounds.push_back(row);
  }

  // (iii) node relations: cyclic generators have their stated order
  for (const auto& vx : spec.vertices) {
    if (vx.group.kind != NodeGroupKind::Cyclic) continue;
    NodeRelationCheck check;
    check.u = vx.id;
    check.order = vx.group.order;
    check.holds = is_identity(power(generators.at(vx.id), vx.group.order, eq), eq);
    ok = ok && check.holds;
    report.node_relations.push_back(check);
  }

  // (iv) look-ahead data: provider certificates per generator
  for (const auto& vx : spec.vertices) {
    PlookAheadCertificate cert = generator_certificate(spec, machines, vx.id, eq);
    GeneratorLookahead row;
    row.u = vx.id;
    row.period = cert.period;
    row.move = cert.value;
    row.deficiency = cert.deficiency;
    report.deficiency_bound = std::max(report.deficiency_bound, cert.deficiency);
    report.lookahead.push_back(row);

    WitnessWord w = build_witness(spec, {{vx.id, 1}}, &machines, eq);
    WitnessBoundRow row2;
    row2.t_len = static_cast<int64_t>(w.word.size());
    row2.last_block = w.last_block_len;
    row2.buffer = w.buffer_len;
    row2.at_least_third = 3 * (row2.t_len - row2.last_block - 2 * row2.buffer) >= row2.t_len;
    report.witness_bounds.push_back(row2);
  }

  // smallest |t| above which every built witness meets the 1/3 bound
  std::vector<WitnessBoundRow> rows = report.witness_bounds;
  std::sort(rows.begin(), rows.end(),
            [](const WitnessBoundRow& a, const WitnessBoundRow& b) { return a.t_len < b.t_len; });
  int64_t threshold = 0;
  for (const auto& row : rows)
    if (!row.at_least_third) threshold = row.t_len + 1;
  report.ratio_threshold = threshold;

  report.ok = ok;
  return report;
}

}  // namespace tfg
