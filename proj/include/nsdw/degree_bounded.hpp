#pragma once
// Distinguishing weightings with small maxima for bounded-degree graphs:
//   max degree <= 3 -> weights within 4 (5 for the 5-cycle),
//   max degree <= 4 -> weights within 6,
//   max degree <= 5 -> weights within 7,
// and every vertex of degree >= 2 sees two distinct weights throughout
// (that guarantee is what the edge-removal induction leans on).

#include "nsdw/graph.hpp"

namespace nsdw {

EdgeWeighting weight_subcubic(const Graph& g);   // nice, max degree <= 3
EdgeWeighting weight_max_deg4(const Graph& g);   // nice, max degree <= 4
EdgeWeighting weight_max_deg5(const Graph& g);   // nice, max degree <= 5

}  // namespace nsdw
