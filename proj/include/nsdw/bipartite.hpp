#pragma once
// Bipartite pipelines. Sums are separated per class by residue (mod 3 for the
// 6-weighting, mod 2 for the even-side 4-weighting); a local 2-weighting of
// each weight class then gives degree->=2 vertices two distinct weights
// without moving any sum across its residue class.

#include <utility>
#include <vector>

#include "nsdw/graph.hpp"

namespace nsdw {

struct ModClassCertificate {
  int modulus = 0;
  std::vector<int> side;     // per vertex
  std::vector<int> residue;  // per vertex: sigma mod modulus
};

// Connected bipartite, >= 3 vertices. Weights {1,2,3}, sums on the side of the
// lowest-index degree->=2 vertex are nonzero mod 3, the other side's are zero.
std::pair<EdgeWeighting, ModClassCertificate> bip_three_weighting(const Graph& g);

// Bipartite (possibly disconnected). Weights {1,2}; every vertex of degree
// >= 2 in this graph sees both values.
EdgeWeighting bip_two_local(const Graph& g);

// Nice bipartite -> distinguishing 6-weighting, every degree->=2 vertex sees
// two distinct weights; sigma mod 3 matches the base 3-weighting vertex-wise.
EdgeWeighting bip_six(const Graph& g);

// Connected bipartite, >= 3 vertices, some side of even size. Weights {1,2},
// uniform sum parity per side, opposite across sides.
std::pair<EdgeWeighting, ModClassCertificate> bip_even_two(const Graph& g);

// Same preconditions as bip_even_two -> distinguishing 4-weighting, every
// degree->=2 vertex sees two distinct weights; parity preserved class-wise.
EdgeWeighting bip_four(const Graph& g);

}  // namespace nsdw
