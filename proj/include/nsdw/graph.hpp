#pragma once
// Simple undirected graphs on vertices 0..n-1, edge lists, parsing, components.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nsdw {

// Bad input: parse errors, precondition violations. CLI maps this to exit 2.
struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal invariant failure. Throwing aborts the construction; this must never
// fire on valid input. Always on, independent of NDEBUG.
inline void ensure(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(std::string("invariant violated: ") + msg);
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw structural_error(msg);
}

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;              // normalized u < v
  std::vector<std::vector<std::pair<int, int>>> adj;   // per vertex: (neighbour, edge index)

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& es);

  int m() const { return (int)edges.size(); }
  int degree(int v) const { return (int)adj[v].size(); }
  int max_degree() const;
  int edge_between(int u, int v) const;  // edge index or -1
};

struct EdgeWeighting {
  std::vector<int> w;  // per edge index
  int k = 1;           // declared maximum weight
};

using VertexColouring = std::vector<int>;

VertexColouring sigma(const Graph& g, const EdgeWeighting& w);

Graph parse_edge_list(const std::string& text);
std::string format_weighting(const Graph& g, const EdgeWeighting& w);
EdgeWeighting parse_weighting(const Graph& g, const std::string& text);

struct Component {
  Graph graph;                      // same labels? no: relabeled 0..n_c-1
  std::vector<int> to_parent;       // component vertex -> parent vertex
  std::vector<int> edge_to_parent;  // component edge -> parent edge
};
std::vector<Component> components(const Graph& g);

// Same vertex set, keep only the listed edges.
struct EdgeSubgraph {
  Graph graph;
  std::vector<int> edge_to_parent;
};
EdgeSubgraph edge_subgraph(const Graph& g, const std::vector<int>& keep_edges);
EdgeSubgraph remove_edges(const Graph& g, const std::vector<int>& drop_edges);

bool is_connected(const Graph& g);
bool is_nice(const Graph& g);  // no connected component is a single edge
bool is_star(const Graph& g);  // K_{1,n-1}, n >= 2

// 2-colouring by side, lowest vertex of each component on side 0.
// Empty optional if some component has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);

}  // namespace nsdw
