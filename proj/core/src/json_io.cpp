#include "tfg/json_io.hpp"

#include "json.hpp"

#include "tfg/errors.hpp"

namespace tfg {

using json = nlohmann::ordered_json;

namespace {

json word_json(const Word& w) { return word_to_string(w); }

Word word_from(const json& j) { return word_from_digits(j.get<std::string>()); }

json domain_json(const ShiftSpace& space) {
  json j;
  j["type"] = space.is_full() ? "full" : "vertex";
  j["alphabet"] = space.alphabet().names();
  if (!space.is_full()) {
    json rows = json::array();
    int n = space.alphabet().size();
    for (int a = 0; a < n; ++a) {
      json row = json::array();
      for (int b = 0; b < n; ++b) row.push_back((*space.adjacency())[a][b]);
      rows.push_back(row);
    }
    j["adjacency"] = rows;
  }
  return j;
}

ShiftSpace domain_from(const json& j) {
  std::vector<std::string> names = j.at("alphabet").get<std::vector<std::string>>();
  Alphabet alphabet(static_cast<int>(names.size()), names);
  if (j.at("type") == "full") return ShiftSpace::full(std::move(alphabet));
  auto rows = j.at("adjacency");
  std::vector<std::vector<bool>> adj;
  for (const auto& row : rows) adj.push_back(row.get<std::vector<bool>>());
  return ShiftSpace::vertex(std::move(alphabet), std::move(adj));
}

json key_json(const CodeKey& key) {
  json j;
  j["u"] = key.u;
  j["a"] = key.a;
  j["b"] = key.b;
  j["v"] = word_json(key.v);
  return j;
}

CodeKey key_from(const json& j) {
  CodeKey key;
  key.u = j.at("u").get<int64_t>();
  key.a = j.at("a").get<int64_t>();
  key.b = j.at("b").get<int64_t>();
  key.v = word_from(j.at("v"));
  return key;
}

}  // namespace

std::string shift_space_to_json(const ShiftSpace& space) {
  json j;
  j["schema"] = kSchemaVersion;
  j["domain"] = domain_json(space);
  return j.dump(2);
}

ShiftSpace shift_space_from_json(const std::string& text) {
  json j = json::parse(text);
  return domain_from(j.contains("domain") ? j.at("domain") : j);
}

std::string codebook_to_json(const Codebook& book) {
  json j;
  j["schema"] = kSchemaVersion;
  j["alphabet"] = book.alphabet().names();
  json entries = json::array();
  for (const auto& [key, w] : book.entries()) {
    json e = key_json(key);
    e["word"] = word_json(w);
    entries.push_back(e);
  }
  j["entries"] = entries;
  return j.dump(2);
}

Codebook codebook_from_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<std::string> names = j.at("alphabet").get<std::vector<std::string>>();
  Alphabet alphabet(static_cast<int>(names.size()), names);
  std::vector<std::pair<CodeKey, Word>> entries;
  for (const auto& e : j.at("entries")) entries.emplace_back(key_from(e), word_from(e.at("word")));
  return Codebook::from_entries(std::move(alphabet), std::move(entries));
}

std::string table_to_json(const TableNode& table) {
  json j;
  j["schema"] = kSchemaVersion;
  j["radius"] = table.bounds().radius;
  j["max_displacement"] = table.bounds().max_disp;
  j["domain"] = domain_json(table.domain());
  json entries = json::object();
  for (int64_t rank = 0; rank < table.value_count(); ++rank) {
    int32_t v = table.value_at_rank(rank);
    if (v == TableNode::kOffLanguage) continue;
    entries[word_to_string(table.word_of(rank))] = v;
  }
  j["entries"] = entries;
  return j.dump(2);
}

std::shared_ptr<const TableNode> table_from_json(const std::string& text) {
  json j = json::parse(text);
  ShiftSpace domain = domain_from(j.at("domain"));
  int64_t radius = j.at("radius").get<int64_t>();
  int sigma = domain.alphabet().size();
  int64_t total = ipow(sigma, 2 * radius + 1);
  std::vector<int32_t> values(static_cast<size_t>(total), TableNode::kOffLanguage);
  for (const auto& [key, value] : j.at("entries").items()) {
    Word w = word_from_digits(key);
    if (static_cast<int64_t>(w.size()) != 2 * radius + 1)
      throw Error(ErrorCode::BadInput, "entry word length does not match the radius");
    domain.alphabet().check_word(w);
    if (!domain.admissible(w))
      throw Error(ErrorCode::OffLanguage, "entry word not admissible: " + key);
    int64_t rank = 0;
    for (Symbol s : w) rank = rank * sigma + s;
    values[static_cast<size_t>(rank)] = value.get<int32_t>();
  }
  // every admissible window needs a value
  bool complete = true;
  for_each_admissible_word(domain, 2 * radius + 1, [&](const Word& w) {
    int64_t rank = 0;
    for (Symbol s : w) rank = rank * sigma + s;
    if (values[static_cast<size_t>(rank)] == TableNode::kOffLanguage) {
      complete = false;
      return false;
    }
    return true;
  });
  if (!complete) throw Error(ErrorCode::BadInput, "table does not cover all admissible windows");
  auto table = std::make_shared<TableNode>(domain, radius, std::move(values));
  if (j.contains("max_displacement")) {
    int64_t declared = j.at("max_displacement").get<int64_t>();
    if (table->bounds().max_disp > declared)
      throw Error(ErrorCode::BoundsUnsound, "a table entry exceeds the declared bound");
  }
  return table;
}

std::string verify_outcome_to_json(const VerifyOutcome& outcome) {
  json j;
  j["schema"] = kSchemaVersion;
  j["verified"] = outcome.ok;
  j["mode"] = outcome.record.mode == VerifyMode::Exhaustive  ? "exhaustive"
              : outcome.record.mode == VerifyMode::Sampled   ? "sampled"
                                                             : "constructed";
  j["detail"] = outcome.record.detail;
  j["injective"] = outcome.failure != VerifyFailure::NotInjective;
  j["surjective"] = outcome.failure != VerifyFailure::NotSurjective;
  if (!outcome.ok) {
    j["witness"] = word_to_string(outcome.witness);
    if (outcome.failure == VerifyFailure::NotInjective)
      j["collision_shift"] = outcome.collision_shift;
  }
  return j.dump(2);
}

std::string graph_spec_to_json(const GraphProductSpec& spec) {
  json j;
  j["schema"] = kSchemaVersion;
  json vertices = json::array();
  for (const auto& vx : spec.vertices) {
    json v;
    v["id"] = vx.id;
    v["group"] = vx.group.kind == NodeGroupKind::FreeCyclic
                     ? json("Z")
                     : json("Z" + std::to_string(vx.group.order));
    v["slack"] = vx.slack;
    vertices.push_back(v);
  }
  j["vertices"] = vertices;
  json edges = json::array();
  for (auto [u, v] : spec.edges) edges.push_back(json::array({u, v}));
  j["edges"] = edges;
  j["slack_multiplier"] = spec.slack_multiplier;
  return j.dump(2);
}

GraphProductSpec graph_spec_from_json(const std::string& text) {
  json j = json::parse(text);
  GraphProductSpec spec;
  for (const auto& v : j.at("vertices")) {
    std::string group = v.at("group").get<std::string>();
    NodeGroup g;
    if (group == "Z") {
      g = NodeGroup::free_cyclic();
    } else if (group.size() > 1 && group[0] == 'Z') {
      g = NodeGroup::cyclic(std::stoi(group.substr(1)));
    } else {
      throw Error(ErrorCode::BadInput, "node group must be Z or Zq");
    }
    int64_t slack = v.contains("slack") ? v.at("slack").get<int64_t>() : 1;
    spec.add_vertex(v.at("id").get<int64_t>(), g, slack);
  }
  for (const auto& e : j.at("edges"))
    spec.add_edge(e.at(0).get<int64_t>(), e.at(1).get<int64_t>());
  if (j.contains("slack_multiplier"))
    spec.slack_multiplier = j.at("slack_multiplier").get<int64_t>();
  return spec;
}

std::string raag_report_to_json(const GraphProductReport& report) {
  json j;
  j["schema"] = kSchemaVersion;
  j["ok"] = report.ok;
  json edges = json::array();
  for (const auto& e : report.edges) {
    json row;
    row["u"] = e.u;
    row["v"] = e.v;
    row["commutator_identity"] = e.identity;
    row["exact"] = e.exact;
    row["detail"] = e.detail;
    edges.push_back(row);
  }
  j["edges"] = edges;
  json non_edges = json::array();
  for (const auto& e : report.non_edges) {
    json row;
    row["u"] = e.u;
    row["v"] = e.v;
    row["final_offset"] = e.final_offset;
    row["offsets_match"] = e.offsets_match;
    row["nontrivial"] = e.nontrivial;
    non_edges.push_back(row);
  }
  j["non_edges"] = non_edges;
  json relations = json::array();
  for (const auto& rel : report.node_relations) {
    json row;
    row["u"] = rel.u;
    row["order"] = rel.order;
    row["holds"] = rel.holds;
    relations.push_back(row);
  }
  j["node_relations"] = relations;
  json lookahead = json::array();
  for (const auto& row : report.lookahead) {
    json item;
    item["u"] = row.u;
    item["period"] = row.period;
    item["move"] = row.move;
    item["deficiency"] = row.deficiency;
    lookahead.push_back(item);
  }
  j["lookahead"] = lookahead;
  j["deficiency_bound"] = report.deficiency_bound;
  json bounds = json::array();
  for (const auto& row : report.witness_bounds) {
    json item;
    item["t_len"] = row.t_len;
    item["last_block"] = row.last_block;
    item["buffer"] = row.buffer;
    item["shift_lower_bound"] = row.t_len - row.last_block - 2 * row.buffer;
    item["at_least_third"] = row.at_least_third;
    bounds.push_back(item);
  }
  j["witness_bounds"] = bounds;
  j["ratio_threshold"] = report.ratio_threshold;
  return j.dump(2);
}

std::string scheme_to_json(const EmbeddingScheme& scheme) {
  json j;
  j["schema"] = kSchemaVersion;
  j["source"] = domain_json(scheme.base);
  j["target_alphabet"] = scheme.target.names();
  json words = json::object();
  for (const auto& [a, w] : scheme.codebook) words[std::to_string(a)] = word_json(w);
  j["codebook"] = words;
  j["period_word"] = word_json(scheme.period_word);
  j["transition_radius"] = scheme.transition_radius;
  json left = json::object(), right = json::object();
  for (const auto& [a, w] : scheme.left_bridge) left[std::to_string(a)] = word_json(w);
  for (const auto& [a, w] : scheme.right_bridge) right[std::to_string(a)] = word_json(w);
  j["left_bridges"] = left;
  j["right_bridges"] = right;
  j["layout"] = "periodic cells carry the reversed period word; the cycle reads "
                "subscripts, right bridge, period copies, left bridge";
  return j.dump(2);
}

std::string profile_to_json(const LookAheadProfile& profile) {
  json j;
  j["schema"] = kSchemaVersion;
  json rows = json::array();
  for (const auto& row : profile.rows) {
    json item;
    item["n"] = row.n;
    item["best_move"] = row.best_move;
    item["deficiency"] = row.deficiency;
    item["has_certificate"] = row.has_certificate;
    rows.push_back(item);
  }
  j["alpha_profile"] = rows;
  json certs = json::array();
  for (const auto& cert : profile.certificates) {
    json item;
    item["window"] = word_json(cert.window);
    item["n"] = cert.n;
    item["value"] = cert.value;
    item["deficiency"] = cert.deficiency;
    certs.push_back(item);
  }
  j["certificates"] = certs;
  return j.dump(2);
}

std::string trace_to_json(const OrbitTrace& trace) {
  json j;
  j["schema"] = kSchemaVersion;
  json steps = json::array();
  for (const auto& s : trace.steps) {
    json item;
    item["offset"] = s.offset;
    item["symbol"] = s.symbol;
    steps.push_back(item);
  }
  j["steps"] = steps;
  return j.dump(2);
}

}  // namespace tfg
