#pragma once
// Independent checks on finished weightings. Nothing here knows how a
// weighting was produced; constructions call these as a final gate.

#include <map>
#include <string>
#include <vector>

#include "nsdw/graph.hpp"

namespace nsdw {

// Edge indices uv with sigma(u) == sigma(v).
std::vector<int> check_distinguishing(const Graph& g, const EdgeWeighting& w);

// Vertices of degree >= t whose incident edges all carry one weight.
std::vector<int> check_threshold(const Graph& g, const EdgeWeighting& w, int t);

struct RelaxedResult {
  bool ok = true;
  int witness_vertex = -1;  // first vertex exceeding the bound
  int witness_weight = 0;
};
// Max degree of each monochromatic subgraph must be <= d. Requires d >= 1.
RelaxedResult check_relaxed(const Graph& g, const EdgeWeighting& w, int d);

struct WeightingReport {
  bool proper = false;
  std::vector<int> conflicts;  // edge indices
  int max_weight = 0;
  int t = 0;
  std::vector<int> threshold_violations;
  int d = 0;
  bool relaxed_ok = true;
  std::map<int, int> relaxed_degrees;  // weight -> max degree of that class
};

// t == 0 or d == 0 skips the respective check.
WeightingReport report(const Graph& g, const EdgeWeighting& w, int t = 0, int d = 0);
std::string report_json(const WeightingReport& r);

// Distinguishing, weights within [1,k], and (t > 0) threshold clean.
bool verify(const Graph& g, const EdgeWeighting& w, int k, int t = 0);

}  // namespace nsdw
