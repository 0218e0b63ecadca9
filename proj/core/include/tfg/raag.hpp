#pragma once

#include "tfg/lookahead.hpp"
#include "tfg/witness.hpp"

namespace tfg {

struct EdgeCheck {
  int64_t u = 0, v = 0;
  bool identity = false;
  bool exact = false;
  std::string detail;
};

struct NonEdgeCheck {
  int64_t u = 0, v = 0;
  int64_t final_offset = 0;    // cocycle of the commutator on its witness
  bool offsets_match = false;  // trace agrees with build_witness predictions
  bool nontrivial = false;     // final offset != 0
};

struct NodeRelationCheck {
  int64_t u = 0;
  int order = 0;
  bool holds = false;
};

struct GeneratorLookahead {
  int64_t u = 0;
  int64_t period = 0;
  int64_t move = 0;
  int64_t deficiency = 0;
};

struct WitnessBoundRow {
  int64_t t_len = 0;
  int64_t last_block = 0;
  int64_t buffer = 0;
  // the guaranteed shift is t_len - last_block - 2*buffer
  bool at_least_third = false;
};

struct GraphProductReport {
  bool ok = false;
  std::vector<EdgeCheck> edges;
  std::vector<NonEdgeCheck> non_edges;
  std::vector<NodeRelationCheck> node_relations;
  std::vector<GeneratorLookahead> lookahead;
  int64_t deficiency_bound = 0;  // C: max deficiency over the generators
  std::vector<WitnessBoundRow> witness_bounds;
  int64_t ratio_threshold = 0;  // all witnesses with |t| >= this pass the 1/3 bound
};

struct RaagCheckPolicy {
  EqualityPolicy eq;
  VerifyPolicy vp;
};

/// End-to-end validation of one graph-product construction: edge commutators
/// vanish on the equality suites, non-edge commutators act nontrivially on
/// their built witnesses with exact head-offset predictions, cyclic node
/// relations hold, and the per-generator plook-ahead / witness-shift data is
/// measured and reported.
GraphProductReport verify_graph_product(const GraphProductSpec& spec,
                                        const RaagCheckPolicy& policy = {});

/// Expected head offsets re-traced by actually applying the letter elements;
/// returns true when every offset matches the prediction.
bool witness_offsets_match(const WitnessWord& w);

/// Shared machinery for a spec: one codebook covering all generator and
/// commutator witnesses plus per-vertex steppers.
BeltMachines standard_machines(const GraphProductSpec& spec, const RaagCheckPolicy& policy = {});

/// Provider certificate for a generator: the periodicized single-belt
/// witness, evaluated at the belt entry.
PlookAheadCertificate generator_certificate(const GraphProductSpec& spec,
                                            const BeltMachines& machines, int64_t u,
                                            const EqualityPolicy& eq = {});

}  // namespace tfg
