#pragma once
// Method selection per component and the (method, k, t) certificate:
//   star     -> k=2, t=2      subcubic -> k=4 (5 for C5), t=2
//   bip4     -> k=4, t=2      bip6     -> k=6, t=2
//   delta4   -> k=6, t=2      delta5   -> k=7, t=2
//   general7 -> k=7, t=6
// Distinguishing + threshold t together bound every monochromatic class's
// degree by max_degree - 1.

#include <string>
#include <utility>
#include <vector>

#include "nsdw/graph.hpp"

namespace nsdw {

enum class Method { subcubic, delta4, delta5, general7, bip6, bip4, star, oracle };
const char* method_name(Method m);

struct ComponentCertificate {
  std::vector<int> vertices;  // parent-graph labels
  Method method;
  int k = 0;
  int t = 0;
};

struct DispatchCertificate {
  Method method;
  int k = 0;
  int t = 0;
  std::vector<ComponentCertificate> parts;
};

// Requires a nice graph. Weights the graph per component and verifies the
// result at the certificate's (k, t) before returning.
std::pair<EdgeWeighting, DispatchCertificate> auto_weight(const Graph& g);

// Star rule: lowest-index edge gets 2, the rest 1.
EdgeWeighting weight_star(const Graph& g);

}  // namespace nsdw
