#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>

#include "tfg/codebook.hpp"
#include "tfg/element.hpp"
#include "tfg/simulate.hpp"

namespace tfg {

enum class NodeGroupKind { FreeCyclic, Cyclic };

struct NodeGroup {
  NodeGroupKind kind = NodeGroupKind::FreeCyclic;
  int order = 0;  // q >= 2 for Cyclic

  static NodeGroup free_cyclic() { return {NodeGroupKind::FreeCyclic, 0}; }
  static NodeGroup cyclic(int q) { return {NodeGroupKind::Cyclic, q}; }
};

/// A finite graph product: vertices carry node groups (Z or Z_q), node
/// alphabets, and slack constants; edges are the commuting pairs. The vertex
/// order of the construction is ascending id.
struct GraphProductSpec {
  struct Vertex {
    int64_t id = 0;
    NodeGroup group;
    int node_alphabet = 2;  // sigma_u; 2 for Z, q for Z_q
    int64_t slack = 1;      // c_u >= 1
  };

  std::vector<Vertex> vertices;              // ascending id
  std::set<std::pair<int64_t, int64_t>> edges;  // stored as (min,max)
  int64_t slack_multiplier = 100;            // the 100 in [1, 100 c_u]

  static GraphProductSpec raag(int64_t n_vertices,
                               const std::vector<std::pair<int64_t, int64_t>>& edges);

  void add_vertex(int64_t id, NodeGroup group, int64_t slack = 1);
  void add_edge(int64_t u, int64_t v);
  bool has_edge(int64_t u, int64_t v) const;
  const Vertex& vertex(int64_t id) const;

  /// Per-block cell cap [1, slack_multiplier * c_u].
  int64_t cell_cap(int64_t u) const;

  void validate() const;
};

enum class CellRow { Top, Bottom };

struct BeltCell {
  int64_t position = 0;  // absolute position (relocated cells live in a neighbor)
  CellRow row = CellRow::Top;
  int64_t index = 0;  // within its row, in position order
  Symbol symbol = 0;  // the u-symbol carried by this cell
  bool relocated = false;
};

struct BeltBlock {
  int64_t start = 0;
  CodeKey key;
  std::vector<BeltCell> top;
  std::vector<BeltCell> bottom;
};

struct Belt {
  int64_t color = 0;
  std::vector<BeltBlock> blocks;
};

struct SharedCellInfo {
  int64_t position = 0;
  int64_t left_color = 0;   // the belt ending here
  int64_t right_color = 0;  // the belt starting here
  Symbol left_symbol = 0;
  Symbol right_symbol = 0;
};

struct BeltParse {
  std::vector<Belt> belts;  // ordered by first block position
  std::vector<SharedCellInfo> shared;
  int64_t margin = 0;  // boundary band in which the decomposition is unreliable
};

/// Decomposes a window into colored conveyor belts: maximal runs of adjacent
/// same-color blocks, with the boundary perturbation that moves the higher
/// color's junction cell into the lower color's precell when the colors are
/// not joined by an edge. Unparsable stretches stay uncolored.
BeltParse parse_belts(const GraphProductSpec& spec, const Codebook& book, const Word& window);

/// One forward step along the color-u edges (identity off u-colored cells).
/// The returned element carries a named backward evaluator and has been
/// verified (sampled mode; exhaustive reach is far beyond these radii).
TfgElement belt_step_element(const GraphProductSpec& spec, const Codebook& book, int64_t u,
                             const VerifyPolicy& vp = {}, const EqualityPolicy& eq = {});

/// The reader s_u: the u-symbol under the head, or symbol 0 of the node
/// alphabet off u-colored cells.
ReaderPtr belt_symbol_reader(const GraphProductSpec& spec, const Codebook& book, int64_t u);

/// The node generator's base action on the simulated configuration, already
/// even-doubled: (even sigma)^e for Z nodes, (even dial_q)^e for Z_q nodes.
TfgElement node_base_action(const GraphProductSpec& spec, int64_t u, int64_t exponent,
                            const EqualityPolicy& eq = {});

/// ghat = simulate(node_base_action^exponent, f_u, s_u).
TfgElement node_element(const GraphProductSpec& spec, const Codebook& book, int64_t u,
                        int64_t exponent, const TfgElement& f_u, const ReaderPtr& s_u,
                        const EqualityPolicy& eq = {});

/// Convenience: builds f_u and s_u internally (exponent 1).
TfgElement node_generator(const GraphProductSpec& spec, const Codebook& book, int64_t u,
                          const VerifyPolicy& vp = {}, const EqualityPolicy& eq = {});

/// The per-vertex step elements and readers over one shared codebook;
/// building them once and reusing them keeps repeated witness construction
/// from re-verifying the same machinery.
struct BeltMachines {
  std::shared_ptr<Codebook> book;
  std::map<int64_t, std::pair<TfgElement, ReaderPtr>> by_vertex;

  static BeltMachines build(const GraphProductSpec& spec, std::shared_ptr<Codebook> book,
                            const VerifyPolicy& vp = {}, const EqualityPolicy& eq = {});

  const TfgElement& step(int64_t u) const;
  const ReaderPtr& reader(int64_t u) const;
};

/// A light sampled-verification policy for builder-internal step elements;
/// the acceptance suite re-verifies them with the full budget.
VerifyPolicy builder_verify_policy();

}  // namespace tfg
