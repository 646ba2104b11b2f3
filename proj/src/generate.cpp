#include "nsdw/generate.hpp"

#include <random>

namespace nsdw {

Graph gen_path(int n) {
  require(n >= 1, "path needs a vertex");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; i++) es.push_back({i, i + 1});
  return Graph::from_edges(n, es);
}

Graph gen_cycle(int n) {
  require(n >= 3, "cycle needs three vertices");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; i++) es.push_back({i, i + 1});
  es.push_back({n - 1, 0});
  return Graph::from_edges(n, es);
}

Graph gen_star(int n) {
  require(n >= 2, "star needs two vertices");
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i < n; i++) es.push_back({0, i});
  return Graph::from_edges(n, es);
}

Graph gen_complete(int n) {
  require(n >= 1, "empty vertex set");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) es.push_back({i, j});
  return Graph::from_edges(n, es);
}

Graph gen_complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "both sides need vertices");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < a; i++)
    for (int j = 0; j < b; j++) es.push_back({i, a + j});
  return Graph::from_edges(a + b, es);
}

Graph gen_random_bounded_degree(int n, int dmax, std::uint64_t seed) {
  require(n >= 1, "empty vertex set");
  require(n <= 2 || dmax >= 2, "degree bound too small for a connected graph");
  std::mt19937_64 rng(seed);
  std::vector<int> deg(n, 0);
  std::vector<std::pair<int, int>> es;
  auto has_edge = [&](int u, int v) {
    for (auto [a, b] : es)
      if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
  };
  for (int i = 1; i < n; i++) {
    std::vector<int> eligible;
    for (int j = 0; j < i; j++)
      if (deg[j] < dmax) eligible.push_back(j);
    ensure(!eligible.empty(), "degree budget exhausted while attaching");
    int j = eligible[rng() % eligible.size()];
    es.push_back({j, i});
    deg[j]++;
    deg[i]++;
  }
  for (int attempt = 0; attempt < 2 * n; attempt++) {
    int u = (int)(rng() % n), v = (int)(rng() % n);
    if (u == v || deg[u] >= dmax || deg[v] >= dmax || has_edge(u, v)) continue;
    es.push_back({std::min(u, v), std::max(u, v)});
    deg[u]++;
    deg[v]++;
  }
  return Graph::from_edges(n, es);
}

Graph gen_random_bipartite(int n1, int n2, double p, std::uint64_t seed) {
  require(n1 >= 1 && n2 >= 1, "both sides need vertices");
  require(p >= 0.0 && p <= 1.0, "probability out of range");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n1; i++)
    for (int j = 0; j < n2; j++) {
      double coin = (double)(rng() >> 11) * 0x1.0p-53;
      if (coin < p) es.push_back({i, n1 + j});
    }
  return Graph::from_edges(n1 + n2, es);
}

std::uint64_t labeled_graph_count(int n) {
  require(n >= 1 && n <= 11, "labeled enumeration supports 1..11 vertices");
  return 1ULL << (n * (n - 1) / 2);
}

void assign_from_mask(Graph& g, int n, std::uint64_t mask) {
  g.n = n;
  g.edges.clear();
  if ((int)g.adj.size() < n) g.adj.resize(n);
  for (int v = 0; v < n; v++) g.adj[v].clear();
  int bit = 0;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++, bit++) {
      if (!((mask >> bit) & 1)) continue;
      int idx = (int)g.edges.size();
      g.edges.push_back({i, j});
      g.adj[i].push_back({j, idx});
      g.adj[j].push_back({i, idx});
    }
  // pair scan order leaves every adjacency list ascending already
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  require(mask < labeled_graph_count(n), "mask out of range");
  Graph g;
  assign_from_mask(g, n, mask);
  g.adj.resize(n);
  return g;
}

std::string format_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.n) + "\n";
  for (auto [u, v] : g.edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace nsdw
