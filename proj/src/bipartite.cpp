#include "nsdw/bipartite.hpp"

#include <algorithm>

#include "nsdw/verify.hpp"

namespace nsdw {

namespace {

std::vector<int> bfs_parents(const Graph& g, int root) {
  std::vector<int> parent(g.n, -2);
  parent[root] = -1;
  std::vector<int> queue{root};
  for (size_t qi = 0; qi < queue.size(); qi++)
    for (auto [u, e] : g.adj[queue[qi]]) {
      (void)e;
      if (parent[u] == -2) {
        parent[u] = queue[qi];
        queue.push_back(u);
      }
    }
  return parent;
}

int shift_mod3(int w, int add) { return (w + add - 1) % 3 + 1; }

}  // namespace

std::pair<EdgeWeighting, ModClassCertificate> bip_three_weighting(const Graph& g) {
  require(g.n >= 3, "need at least three vertices");
  require(is_connected(g), "graph must be connected");
  auto side_opt = bipartition(g);
  require(side_opt.has_value(), "graph must be bipartite");
  int x = -1;
  for (int v = 0; v < g.n && x < 0; v++)
    if (g.degree(v) >= 2) x = v;
  ensure(x >= 0, "connected graph on >= 3 vertices has a branch vertex");

  ModClassCertificate cert;
  cert.modulus = 3;
  cert.side.resize(g.n);
  for (int v = 0; v < g.n; v++) cert.side[v] = (*side_opt)[v] == (*side_opt)[x] ? 0 : 1;

  EdgeWeighting w;
  w.k = 3;
  w.w.assign(g.m(), 3);
  auto parent = bfs_parents(g, x);
  for (int v = 0; v < g.n; v++) {
    if (cert.side[v] != 0 || v == x) continue;
    // even-length tree path v -> x; adds alternate 1,2 starting at v's end,
    // so interior vertices gain multiples of 3 and x gains 2
    int cur = v, add = 1;
    while (cur != x) {
      int e = g.edge_between(cur, parent[cur]);
      ensure(e >= 0, "tree edge missing");
      w.w[e] = shift_mod3(w.w[e], add);
      add = 3 - add;
      cur = parent[cur];
    }
  }
  auto s = sigma(g, w);
  if (s[x] % 3 == 0) {
    std::vector<int> inc;
    for (auto [u, e] : g.adj[x]) {
      (void)u;
      inc.push_back(e);
    }
    std::sort(inc.begin(), inc.end());
    ensure(inc.size() >= 2, "fix-up needs two edges at x");
    w.w[inc[0]] = shift_mod3(w.w[inc[0]], 2);
    w.w[inc[1]] = shift_mod3(w.w[inc[1]], 2);
    s = sigma(g, w);
  }
  cert.residue.resize(g.n);
  for (int v = 0; v < g.n; v++) cert.residue[v] = (int)(s[v] % 3);
  for (int v = 0; v < g.n; v++)
    if (cert.side[v] == 0) ensure(cert.residue[v] != 0, "processed side hit residue 0");
  for (auto [a, b] : g.edges)
    ensure(cert.residue[a] != cert.residue[b], "equal residues across an edge");
  return {w, cert};
}

namespace {

struct TwoLocal {
  const Graph& g;
  std::vector<bool> active;
  std::vector<int> cur_deg;
  std::vector<int> w;  // 0 = unassigned

  explicit TwoLocal(const Graph& g_)
      : g(g_), active(g_.n, true), cur_deg(g_.n), w(g_.m(), 0) {
    for (int v = 0; v < g.n; v++) cur_deg[v] = g.degree(v);
  }

  int active_degree_excl(int u, int skip) const {
    int d = 0;
    for (auto [z, e] : g.adj[u]) {
      (void)e;
      if (z != skip && active[z]) d++;
    }
    return d;
  }

  // u currently has exactly one active weighted edge (not counting vertex
  // `skip`); return it
  int single_edge_excl(int u, int skip) const {
    int found = -1;
    for (auto [z, e] : g.adj[u])
      if (z != skip && active[z]) {
        ensure(found < 0, "expected a single active edge");
        found = e;
      }
    ensure(found >= 0, "expected one active edge, found none");
    return found;
  }

  // Flip an alternating path out of u (whose single weighted edge carries
  // `a`) until an endpoint that keeps both values after the flip. `pending`
  // is the vertex being reinserted: its edges carry no weights yet, so the
  // walk ignores it. Never reaches `avoid`: that would close an odd cycle or
  // an odd same-side path.
  void flip_alternating(int u, int avoid, int pending) {
    std::vector<bool> visited(g.n, false);
    visited[u] = true;
    int cur_edge = single_edge_excl(u, pending);
    std::vector<int> path{cur_edge};
    int cur = u;
    for (int guard = 0; guard <= g.n; guard++) {
      auto [p, q] = g.edges[cur_edge];
      int nxt = p == cur ? q : p;
      ensure(nxt != avoid, "alternating path reached the opposite pending vertex");
      ensure(!visited[nxt], "alternating path revisited a vertex");
      visited[nxt] = true;
      int c = w[cur_edge];
      int c_count = 0, deg = 0, opposite = -1;
      for (auto [z, e] : g.adj[nxt]) {
        if (!active[z] || z == pending) continue;
        deg++;
        if (w[e] == c) c_count++;
        else if (opposite < 0) opposite = e;  // lowest neighbour first: adj sorted
        (void)z;
      }
      if (c_count >= 2 || deg == 1) break;
      ensure(opposite >= 0, "no opposite-weight continuation");
      cur_edge = opposite;
      cur = nxt;
      path.push_back(cur_edge);
    }
    for (int e : path) w[e] = 3 - w[e];
  }

  void check_invariant() const {
    for (int v = 0; v < g.n; v++) {
      if (!active[v]) continue;
      bool one = false, two = false;
      int d = 0;
      for (auto [z, e] : g.adj[v]) {
        if (!active[z]) continue;
        d++;
        ensure(w[e] != 0, "active edge left unweighted");
        (w[e] == 1 ? one : two) = true;
      }
      if (d >= 2) ensure(one && two, "degree->=2 vertex sees one value");
    }
  }

  void reinsert(int v) {
    active[v] = true;
    std::vector<std::pair<int, int>> nbrs;  // (neighbour, edge)
    for (auto [z, e] : g.adj[v])
      if (active[z] && z != v) nbrs.push_back({z, e});
    int d = (int)nbrs.size();
    if (d == 1) {
      auto [u, e] = nbrs[0];
      int du = active_degree_excl(u, v);
      if (du == 1)
        w[e] = 3 - w[single_edge_excl(u, v)];
      else
        w[e] = 1;
    } else if (d == 2) {
      auto [u1, e1] = nbrs[0];
      auto [u2, e2] = nbrs[1];
      int d1 = active_degree_excl(u1, v), d2 = active_degree_excl(u2, v);
      if (d1 >= 2 || d2 >= 2) {
        // anchor on a branching neighbour, give the other one first
        int ue = d1 >= 2 ? e1 : e2;
        int ov = d1 >= 2 ? u2 : u1;
        int oe = d1 >= 2 ? e2 : e1;
        int dov = d1 >= 2 ? d2 : d1;
        w[oe] = dov == 1 ? 3 - w[single_edge_excl(ov, v)] : 1;
        w[ue] = 3 - w[oe];
      } else {
        ensure(d1 == 1 && d2 == 1, "pending pair lost its outside edges");
        int a = w[single_edge_excl(u1, v)];
        int b = w[single_edge_excl(u2, v)];
        if (a == b) {
          flip_alternating(u1, u2, v);
          a = w[single_edge_excl(u1, v)];
          ensure(a != b, "flip failed to separate values");
        }
        w[e1] = b;
        w[e2] = a;
      }
    } else if (d >= 3) {
      w[nbrs[0].second] = 1;
      w[nbrs[1].second] = 2;
      for (int i = 2; i < d; i++) w[nbrs[i].second] = 1;
    }
    check_invariant();
  }
};

}  // namespace

EdgeWeighting bip_two_local(const Graph& g) {
  require(bipartition(g).has_value(), "graph must be bipartite");
  TwoLocal state(g);
  std::vector<int> stack;
  std::vector<bool> removed(g.n, false);
  for (int step = 0; step < g.n; step++) {
    int best = -1;
    for (int v = 0; v < g.n; v++)
      if (!removed[v] && (best < 0 || state.cur_deg[v] < state.cur_deg[best])) best = v;
    removed[best] = true;
    state.active[best] = false;
    stack.push_back(best);
    for (auto [u, e] : g.adj[best]) {
      (void)e;
      if (!removed[u]) state.cur_deg[u]--;
    }
  }
  while (!stack.empty()) {
    state.reinsert(stack.back());
    stack.pop_back();
  }
  for (int e = 0; e < g.m(); e++) ensure(state.w[e] != 0, "edge left unweighted");
  return {state.w, 2};
}

EdgeWeighting bip_six(const Graph& g) {
  require(is_nice(g), "graph has a bare-edge component");
  require(bipartition(g).has_value(), "graph must be bipartite");
  EdgeWeighting out;
  out.k = 6;
  out.w.assign(g.m(), 0);
  for (auto& comp : components(g)) {
    if (comp.graph.n == 1) continue;
    ensure(comp.graph.n >= 3, "two-vertex component slipped past the niceness check");
    auto [w3, cert] = bip_three_weighting(comp.graph);
    std::vector<int> local(comp.graph.m(), 0);
    for (int c = 1; c <= 3; c++) {
      std::vector<int> keep;
      for (int e = 0; e < comp.graph.m(); e++)
        if (w3.w[e] == c) keep.push_back(e);
      if (keep.empty()) continue;
      auto sub = edge_subgraph(comp.graph, keep);
      EdgeWeighting w2 = bip_two_local(sub.graph);
      for (int t = 0; t < sub.graph.m(); t++)
        local[sub.edge_to_parent[t]] = w2.w[t] == 1 ? c : c + 3;
    }
    auto s6 = sigma(comp.graph, {local, 6});
    for (int v = 0; v < comp.graph.n; v++)
      ensure(s6[v] % 3 == cert.residue[v], "class lift moved a residue");
    for (int e = 0; e < comp.graph.m(); e++) out.w[comp.edge_to_parent[e]] = local[e];
  }
  ensure(check_distinguishing(g, out).empty(), "six-weighting not distinguishing");
  ensure(check_threshold(g, out, 2).empty(), "six-weighting left a monochromatic vertex");
  return out;
}

std::pair<EdgeWeighting, ModClassCertificate> bip_even_two(const Graph& g) {
  require(g.n >= 3, "need at least three vertices");
  require(is_connected(g), "graph must be connected");
  auto side_opt = bipartition(g);
  require(side_opt.has_value(), "graph must be bipartite");
  int count0 = 0;
  for (int v = 0; v < g.n; v++)
    if ((*side_opt)[v] == 0) count0++;
  int even_side;
  if (count0 % 2 == 0) even_side = 0;
  else if ((g.n - count0) % 2 == 0) even_side = 1;
  else throw structural_error("both sides are odd");

  ModClassCertificate cert;
  cert.modulus = 2;
  cert.side.resize(g.n);
  for (int v = 0; v < g.n; v++) cert.side[v] = (*side_opt)[v] == even_side ? 0 : 1;

  // parity-constrained DFS: weights {1,2}, each vertex's finished sum must
  // land on its side's parity
  std::vector<int> weight(g.m(), 0);
  std::vector<long long> sum(g.n, 0);
  std::vector<int> remaining(g.n);
  auto solve = [&](int c1) {
    for (int v = 0; v < g.n; v++) {
      remaining[v] = g.degree(v);
      sum[v] = 0;
    }
    std::fill(weight.begin(), weight.end(), 0);
    auto rec = [&](auto&& self, int e) -> bool {
      if (e == g.m()) return true;
      auto [a, b] = g.edges[e];
      for (int c = 1; c <= 2; c++) {
        weight[e] = c;
        sum[a] += c;
        sum[b] += c;
        remaining[a]--;
        remaining[b]--;
        auto fits = [&](int v) {
          int want = cert.side[v] == 0 ? c1 : 1 - c1;
          return remaining[v] > 0 || sum[v] % 2 == want;
        };
        if (fits(a) && fits(b) && self(self, e + 1)) return true;
        weight[e] = 0;
        sum[a] -= c;
        sum[b] -= c;
        remaining[a]++;
        remaining[b]++;
      }
      return false;
    };
    return rec(rec, 0);
  };
  if (!solve(1))
    ensure(solve(0), "no parity-separated two-weighting found");
  EdgeWeighting w{weight, 2};
  auto s = sigma(g, w);
  cert.residue.resize(g.n);
  for (int v = 0; v < g.n; v++) cert.residue[v] = (int)(s[v] % 2);
  for (auto [a, b] : g.edges)
    ensure(cert.residue[a] != cert.residue[b], "equal parities across an edge");
  return {w, cert};
}

EdgeWeighting bip_four(const Graph& g) {
  auto [w2, cert] = bip_even_two(g);
  std::vector<int> final_w(g.m(), 0);
  for (int c = 1; c <= 2; c++) {
    std::vector<int> keep;
    for (int e = 0; e < g.m(); e++)
      if (w2.w[e] == c) keep.push_back(e);
    if (keep.empty()) continue;
    auto sub = edge_subgraph(g, keep);
    EdgeWeighting local = bip_two_local(sub.graph);
    for (int t = 0; t < sub.graph.m(); t++)
      final_w[sub.edge_to_parent[t]] = local.w[t] == 1 ? c : c + 2;
  }
  EdgeWeighting out{final_w, 4};
  auto s4 = sigma(g, out);
  auto s2 = sigma(g, w2);
  for (int v = 0; v < g.n; v++)
    ensure(s4[v] % 2 == s2[v] % 2, "class lift moved a parity");
  ensure(check_distinguishing(g, out).empty(), "four-weighting not distinguishing");
  ensure(check_threshold(g, out, 2).empty(), "four-weighting left a monochromatic vertex");
  return out;
}

}  // namespace nsdw
