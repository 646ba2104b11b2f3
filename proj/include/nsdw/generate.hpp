#pragma once
// Graph families, seeded random graphs, and the labeled-graph enumerator.

#include <cstdint>
#include <vector>

#include "nsdw/graph.hpp"

namespace nsdw {

Graph gen_path(int n);
Graph gen_cycle(int n);                       // n >= 3
Graph gen_star(int n);                        // K_{1,n-1}, n >= 2
Graph gen_complete(int n);
Graph gen_complete_bipartite(int a, int b);
Graph gen_random_bounded_degree(int n, int dmax, std::uint64_t seed);  // connected
Graph gen_random_bipartite(int n1, int n2, double p, std::uint64_t seed);

// Edge (i,j), i<j, lexicographic -> bit position in a mask over C(n,2) bits.
std::uint64_t labeled_graph_count(int n);     // 2^C(n,2); n <= 11
Graph graph_from_mask(int n, std::uint64_t mask);
// Reuses g's buffers; for tight enumeration loops.
void assign_from_mask(Graph& g, int n, std::uint64_t mask);

struct LabeledGraphStream {
  int n;
  std::uint64_t next_mask = 0;
  std::uint64_t end;
  explicit LabeledGraphStream(int n_) : n(n_), end(labeled_graph_count(n_)) {}
  bool done() const { return next_mask >= end; }
  Graph next() { return graph_from_mask(n, next_mask++); }
};

std::string format_edge_list(const Graph& g);  // "n <count>" header + "u v" lines

}  // namespace nsdw
