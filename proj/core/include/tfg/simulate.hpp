#pragma once

#include <string>
#include <vector>

#include "tfg/element.hpp"

namespace tfg {

/// g/(f,s): act on the configuration simulated by reading s along the
/// f-orbit. Bijectivity is inherited: the inverse is simulate(invert(g),f,s).
/// g must live on the full shift over the reader's target alphabet; f on the
/// base domain.
TfgElement simulate(const TfgElement& g, const TfgElement& f, const ReaderPtr& s,
                    const EqualityPolicy& pol = {});

struct OrbitStep {
  int64_t offset = 0;
  Symbol symbol = 0;  // symbol under the head at this offset
};

struct OrbitTrace {
  std::vector<OrbitStep> steps;  // steps[0] is the starting position
};

/// Iterates g (or its inverse for negative step counts) from the head at 0;
/// consecutive offsets differ by exactly the evaluated cocycle.
OrbitTrace trace_orbit(const TfgElement& g, const Config& x, int64_t steps);

/// Diagram rendering: the configuration window with the head path
/// marked step by step.
std::string render_trace(const Config& x, const OrbitTrace& trace);

}  // namespace tfg
