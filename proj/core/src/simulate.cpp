#include "tfg/simulate.hpp"

#include <algorithm>

#include "tfg/errors.hpp"

namespace tfg {

TfgElement simulate(const TfgElement& g, const TfgElement& f, const ReaderPtr& s,
                    const EqualityPolicy& pol) {
  auto node = std::make_shared<SimulateNode>(g.rule(), f.rule(), invert_node(f.rule()), s);
  return TfgElement::trusted(node, "simulation along a verified orbit", pol);
}

OrbitTrace trace_orbit(const TfgElement& g, const Config& x, int64_t steps) {
  OrbitTrace trace;
  TfgElement mover = steps >= 0 ? g : invert(g);
  int64_t count = steps >= 0 ? steps : -steps;
  int64_t offset = 0;
  trace.steps.push_back({0, x.symbol_at(0)});
  for (int64_t i = 0; i < count; ++i) {
    offset += mover.eval_at(x, offset);
    trace.steps.push_back({offset, x.symbol_at(offset)});
  }
  return trace;
}

std::string render_trace(const Config& x, const OrbitTrace& trace) {
  int64_t lo = 0, hi = 0;
  for (const OrbitStep& s : trace.steps) {
    lo = std::min(lo, s.offset);
    hi = std::max(hi, s.offset);
  }
  lo -= 2;
  hi += 2;
  std::string out;
  out += "pos  ";
  for (int64_t i = lo; i <= hi; ++i) out += (i == 0) ? '.' : ' ';
  out += "\n     ";
  for (int64_t i = lo; i <= hi; ++i) {
    Symbol a = x.symbol_at(i);
    out += (a >= 0 && a <= 9) ? static_cast<char>('0' + a) : '?';
  }
  out += "\n";
  for (size_t t = 0; t < trace.steps.size(); ++t) {
    std::string line = "t=" + std::to_string(t);
    while (line.size() < 5) line += ' ';
    for (int64_t i = lo; i <= hi; ++i) line += (i == trace.steps[t].offset) ? '^' : ' ';
    out += line + "\n";
  }
  return out;
}

}  // namespace tfg
