#pragma once
// 7-weighting of an arbitrary connected nice graph: distinguishing, and every
// vertex of degree >= 6 sees two distinct weights. Processes vertices along a
// good ordering; each step perturbs only edges at the current vertex and
// freezes a committed sum w(v) with sigma(v) in {w(v), w(v)+3} thereafter
// (equality when v never gets another successor edge).

#include <vector>

#include "nsdw/graph.hpp"
#include "nsdw/ordering.hpp"

namespace nsdw {

struct SeedRow {
  int w12;  // weight of the v1v2 edge
  int we1;  // weight of v1's other first-successor edge
  int we2;  // weight of v2's first-successor edge
};
// Seed weights keyed by (4*d(v1)) mod 6 and (4*d(v2)) mod 6.
SeedRow bootstrap_row(int ra, int rb);

struct StepRecord {
  int vertex = -1;
  std::vector<int> plus3_edges;  // edge indices raised by 3
  int r = 0;                     // amount subtracted from the first-successor edge
  long long committed = 0;       // w(vertex) after the step
};

struct RunTrace {
  int v1 = -1, v2 = -1;
  SeedRow seed{};
  long long w_v1 = 0, w_v2 = 0;
  std::vector<StepRecord> steps;
};

EdgeWeighting run_general7(const Graph& g, RunTrace* trace = nullptr);

std::string trace_lines(const RunTrace& t);

}  // namespace nsdw
