#pragma once
// Vertex orderings v_1..v_n satisfying:
//   (i)   the first two vertices have degree >= 2,
//   (ii)  every vertex after the first has an earlier neighbour,
//   (iii) a vertex with no later neighbour has at most one neighbour that
//         itself has a neighbour placed after that vertex.
// A successor of v is a later neighbour; x precedes y in the derived partial
// order when an index-increasing path runs from x to y.

#include <vector>

#include "nsdw/graph.hpp"

namespace nsdw {

struct VertexOrdering {
  std::vector<int> order;     // position (0-based) -> vertex
  std::vector<int> position;  // vertex -> position (0-based)
};

VertexOrdering make_ordering(const Graph& g, const std::vector<int>& order);

struct OrderingViolation {
  int condition;  // 1, 2 or 3
  int vertex;
};
std::vector<OrderingViolation> check_ordering(const Graph& g, const VertexOrdering& o);

struct OrderingStats {
  int repairs = 0;
  std::vector<int> b_sizes;  // |{vertices without successor}| before each repair + final
};

// Requires connected, not a star, n >= 3. BFS seed + repair loop.
VertexOrdering good_ordering(const Graph& g, OrderingStats* stats = nullptr);

// Repair an ordering satisfying (i)+(ii) until (iii) holds. Exposed for tests.
VertexOrdering repair_ordering(const Graph& g, VertexOrdering o, OrderingStats* stats = nullptr);

}  // namespace nsdw
