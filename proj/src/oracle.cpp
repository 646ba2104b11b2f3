#include "nsdw/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace nsdw {

namespace {

// Edges sorted so each vertex's incident edges finish as early as possible:
// assignments complete vertices promptly and conflicts surface near the root.
std::vector<int> search_order(const Graph& g) {
  std::vector<int> pos(g.n, -1);
  int next = 0;
  std::vector<int> queue;
  for (int s = 0; s < g.n; s++) {
    if (pos[s] >= 0) continue;
    pos[s] = next++;
    queue.clear();
    queue.push_back(s);
    for (size_t qi = 0; qi < queue.size(); qi++)
      for (auto [u, e] : g.adj[queue[qi]]) {
        (void)e;
        if (pos[u] < 0) {
          pos[u] = next++;
          queue.push_back(u);
        }
      }
  }
  std::vector<int> order(g.m());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int e) {
    auto [u, v] = g.edges[e];
    int a = pos[u], b = pos[v];
    return std::tuple(std::max(a, b), std::min(a, b), e);
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
  return order;
}

struct Search {
  const Graph& g;
  ConstraintProfile p;
  std::vector<int> order;
  std::vector<int> weight;      // per edge, 0 = unassigned
  std::vector<int> remaining;   // unassigned incident edges per vertex
  std::vector<long long> sum;
  std::vector<std::vector<int>> class_count;  // vertex -> weight -> count

  Search(const Graph& g_, const ConstraintProfile& p_)
      : g(g_), p(p_), order(search_order(g_)), weight(g_.m(), 0),
        remaining(g_.n), sum(g_.n, 0),
        class_count(g_.n, std::vector<int>(p_.k + 1, 0)) {
    for (int v = 0; v < g.n; v++) remaining[v] = g.degree(v);
  }

  bool vertex_ok_on_completion(int v) const {
    if (p.mode == ConstraintProfile::Mode::threshold && g.degree(v) >= p.t) {
      bool mono = true;
      int first = weight[g.adj[v][0].second];
      for (auto [u, e] : g.adj[v]) {
        (void)u;
        if (weight[e] != first) mono = false;
      }
      if (mono) return false;
    }
    for (auto [u, e] : g.adj[v]) {
      (void)e;
      if (remaining[u] == 0 && sum[u] == sum[v]) return false;
    }
    return true;
  }

  bool assign(size_t step) {
    if (step == order.size()) return true;
    int e = order[step];
    auto [a, b] = g.edges[e];
    for (int c = 1; c <= p.k; c++) {
      if (p.mode == ConstraintProfile::Mode::relaxed &&
          (class_count[a][c] + 1 > p.d || class_count[b][c] + 1 > p.d))
        continue;
      weight[e] = c;
      class_count[a][c]++;
      class_count[b][c]++;
      sum[a] += c;
      sum[b] += c;
      remaining[a]--;
      remaining[b]--;
      bool ok = (remaining[a] > 0 || vertex_ok_on_completion(a)) &&
                (remaining[b] > 0 || vertex_ok_on_completion(b));
      if (ok && assign(step + 1)) return true;
      weight[e] = 0;
      class_count[a][c]--;
      class_count[b][c]--;
      sum[a] -= c;
      sum[b] -= c;
      remaining[a]++;
      remaining[b]++;
    }
    return false;
  }
};

}  // namespace

std::optional<EdgeWeighting> exists_weighting(const Graph& g, const ConstraintProfile& p) {
  require(p.k >= 1, "weight bound must be positive");
  if (p.mode == ConstraintProfile::Mode::relaxed)
    require(p.d >= 1, "relaxed bound must be positive");
  if (p.mode == ConstraintProfile::Mode::threshold)
    require(p.t >= 1, "threshold must be positive");
  Search s(g, p);
  if (!s.assign(0)) return std::nullopt;
  return EdgeWeighting{s.weight, p.k};
}

int exact_min_k(const Graph& g, ConstraintProfile::Mode mode, int param,
                int edge_cap, int max_k) {
  require(g.m() <= edge_cap, "graph exceeds the oracle edge cap (" +
                                 std::to_string(edge_cap) + " edges)");
  for (int k = 1; k <= max_k; k++) {
    ConstraintProfile p{k, mode, 0, 0};
    if (mode == ConstraintProfile::Mode::relaxed) p.d = param;
    if (mode == ConstraintProfile::Mode::threshold) p.t = param;
    if (exists_weighting(g, p).has_value()) return k;
  }
  throw structural_error("no weighting within " + std::to_string(max_k) + " weights");
}

}  // namespace nsdw
