#include "nsdw/ordering.hpp"

#include <algorithm>

namespace nsdw {

VertexOrdering make_ordering(const Graph& g, const std::vector<int>& order) {
  require((int)order.size() == g.n, "ordering must list every vertex once");
  VertexOrdering o;
  o.order = order;
  o.position.assign(g.n, -1);
  for (int p = 0; p < g.n; p++) {
    int v = order[p];
    require(v >= 0 && v < g.n && o.position[v] < 0, "ordering must be a permutation");
    o.position[v] = p;
  }
  return o;
}

namespace {

// Largest position among v's neighbours, -1 if isolated.
std::vector<int> max_neighbour_pos(const Graph& g, const VertexOrdering& o) {
  std::vector<int> mp(g.n, -1);
  for (auto [u, v] : g.edges) {
    mp[u] = std::max(mp[u], o.position[v]);
    mp[v] = std::max(mp[v], o.position[u]);
  }
  return mp;
}

bool has_successor(const Graph& g, const VertexOrdering& o, const std::vector<int>& mp,
                   int v) {
  (void)g;
  return mp[v] > o.position[v];
}

}  // namespace

std::vector<OrderingViolation> check_ordering(const Graph& g, const VertexOrdering& o) {
  std::vector<OrderingViolation> out;
  for (int p = 0; p < std::min(g.n, 2); p++)
    if (g.degree(o.order[p]) < 2) out.push_back({1, o.order[p]});
  for (int p = 1; p < g.n; p++) {
    int v = o.order[p];
    bool pred = false;
    for (auto [u, e] : g.adj[v]) {
      (void)e;
      if (o.position[u] < p) pred = true;
    }
    if (!pred) out.push_back({2, v});
  }
  auto mp = max_neighbour_pos(g, o);
  for (int p = 0; p < g.n; p++) {
    int v = o.order[p];
    if (has_successor(g, o, mp, v)) continue;
    int crowded = 0;
    for (auto [u, e] : g.adj[v]) {
      (void)e;
      if (mp[u] > p) crowded++;
    }
    if (crowded >= 2) out.push_back({3, v});
  }
  return out;
}

namespace {

// Reachability by index-increasing paths, as bitsets; the relation behind
// successor bookkeeping. reach[x] bit y set iff x strictly precedes y.
struct Reach {
  int words;
  std::vector<std::uint64_t> bits;  // n rows of `words`
  bool get(int x, int y) const {
    return (bits[(size_t)x * words + y / 64] >> (y % 64)) & 1;
  }
};

Reach compute_reach(const Graph& g, const VertexOrdering& o) {
  Reach r;
  r.words = (g.n + 63) / 64;
  r.bits.assign((size_t)g.n * r.words, 0);
  for (int p = g.n - 1; p >= 0; p--) {
    int v = o.order[p];
    auto* row = &r.bits[(size_t)v * r.words];
    for (auto [u, e] : g.adj[v]) {
      (void)e;
      if (o.position[u] <= p) continue;
      row[u / 64] |= 1ULL << (u % 64);
      const auto* urow = &r.bits[(size_t)u * r.words];
      for (int w = 0; w < r.words; w++) row[w] |= urow[w];
    }
  }
  return r;
}

}  // namespace

VertexOrdering repair_ordering(const Graph& g, VertexOrdering o, OrderingStats* stats) {
  OrderingStats local;
  OrderingStats& st = stats ? *stats : local;
  int last_b = -1;
  for (int round = 0; round <= g.n + 1; round++) {
    auto mp = max_neighbour_pos(g, o);
    int b = 0, violator = -1;
    for (int p = 0; p < g.n && violator < 0; p++) {
      int v = o.order[p];
      if (has_successor(g, o, mp, v)) continue;
      b++;
      int crowded = 0;
      for (auto [u, e] : g.adj[v]) {
        (void)e;
        if (mp[u] > p) crowded++;
      }
      if (crowded >= 2) violator = v;
    }
    if (violator < 0)  // count the rest of B for the stats
      ;
    else
      for (int p = o.position[violator] + 1; p < g.n; p++)
        if (!has_successor(g, o, mp, o.order[p])) b++;
    ensure(last_b < 0 || b < last_b, "no-successor count failed to shrink");
    last_b = b;
    st.b_sizes.push_back(b);
    if (violator < 0) return o;
    st.repairs++;

    Reach reach = compute_reach(g, o);
    int v = violator;
    // re-index v to its minimal slot: strict predecessors keep their order,
    // then v, then everything else keeps its order
    std::vector<int> down, rest;
    for (int p = 0; p < g.n; p++) {
      int x = o.order[p];
      if (x == v) continue;
      (reach.get(x, v) ? down : rest).push_back(x);
    }
    std::vector<int> reordered = down;
    reordered.push_back(v);
    reordered.insert(reordered.end(), rest.begin(), rest.end());
    o = make_ordering(g, reordered);
    int i = o.position[v];  // 0-based; everything before is a strict predecessor

    mp = max_neighbour_pos(g, o);
    int j = -1;
    int late = 0;
    for (auto [u, e] : g.adj[v]) {
      (void)e;
      ensure(o.position[u] < i, "violator gained a successor during re-indexing");
      if (mp[u] > i) {
        late++;
        j = std::max(j, o.position[u]);
      }
    }
    ensure(late >= 2, "crowding witnesses lost during re-indexing");
    ensure(j >= 1, "pivot cannot sit at the first position");

    int vj = o.order[j];
    // walk = pivot plus everything strictly between that the pivot precedes;
    // reversed, it follows v so each member keeps a successor
    std::vector<int> walk{vj}, gaps;
    for (int p = j + 1; p < i; p++) {
      int x = o.order[p];
      (reach.get(vj, x) ? walk : gaps).push_back(x);
    }
    std::vector<int> spliced(o.order.begin(), o.order.begin() + j);
    spliced.insert(spliced.end(), gaps.begin(), gaps.end());
    spliced.push_back(v);
    spliced.insert(spliced.end(), walk.rbegin(), walk.rend());
    spliced.insert(spliced.end(), o.order.begin() + i + 1, o.order.end());
    o = make_ordering(g, spliced);
  }
  throw std::logic_error("invariant violated: ordering repair failed to converge");
}

VertexOrdering good_ordering(const Graph& g, OrderingStats* stats) {
  require(g.n >= 3, "need at least three vertices");
  require(is_connected(g), "graph must be connected");
  require(!is_star(g), "stars have no valid ordering");
  // seed edge: lowest-index vertex of degree >= 2 with a degree->=2
  // neighbour; one exists in any connected non-star with >= 3 vertices
  int u0 = -1, v0 = -1;
  for (int u = 0; u < g.n && u0 < 0; u++) {
    if (g.degree(u) < 2) continue;
    for (auto [x, e] : g.adj[u]) {
      (void)e;
      if (g.degree(x) >= 2) {
        u0 = u;
        v0 = x;
        break;
      }
    }
  }
  ensure(u0 >= 0, "no adjacent pair of degree->=2 vertices");
  std::vector<int> order;
  std::vector<bool> vis(g.n, false);
  vis[u0] = vis[v0] = true;
  order.push_back(u0);
  order.push_back(v0);
  for (size_t qi = 0; qi < order.size(); qi++)
    for (auto [x, e] : g.adj[order[qi]]) {
      (void)e;
      if (!vis[x]) {
        vis[x] = true;
        order.push_back(x);
      }
    }
  ensure((int)order.size() == g.n, "seed search missed vertices");
  return repair_ordering(g, make_ordering(g, order), stats);
}

}  // namespace nsdw
