#pragma once
// Exact backtracking search over all k-weightings, used as ground truth by
// tests and for the minimum-k scan. Deterministic: lexicographically first
// witness under a fixed most-constrained edge order.

#include <optional>

#include "nsdw/graph.hpp"

namespace nsdw {

struct ConstraintProfile {
  enum class Mode { none, relaxed, threshold };
  int k = 1;
  Mode mode = Mode::none;
  int d = 0;  // relaxed: max degree per weight class
  int t = 0;  // threshold: degree at which two distinct weights are required

  static ConstraintProfile plain(int k) { return {k, Mode::none, 0, 0}; }
  static ConstraintProfile relaxed(int k, int d) { return {k, Mode::relaxed, d, 0}; }
  static ConstraintProfile threshold(int k, int t) { return {k, Mode::threshold, 0, t}; }
};

std::optional<EdgeWeighting> exists_weighting(const Graph& g, const ConstraintProfile& p);

// Smallest k admitting a distinguishing weighting under the given mode
// (d/t carried in param). Guarded by an edge cap; scans k = 1..max_k.
int exact_min_k(const Graph& g, ConstraintProfile::Mode mode, int param,
                int edge_cap = 16, int max_k = 32);

}  // namespace nsdw
