#include "nsdw/degree_bounded.hpp"

#include <algorithm>
#include <functional>

#include "nsdw/oracle.hpp"
#include "nsdw/polynomial.hpp"
#include "nsdw/verify.hpp"

namespace nsdw {

namespace {

// weight a pruned subgraph component-by-component; bare edges get weight 1
std::vector<int> weight_parts(const EdgeSubgraph& sub,
                              const std::function<std::vector<int>(const Graph&)>& leaf) {
  std::vector<int> wp(sub.graph.m(), 0);
  for (auto& cc : components(sub.graph)) {
    if (cc.graph.m() == 0) continue;
    if (cc.graph.m() == 1) {
      wp[cc.edge_to_parent[0]] = 1;
      continue;
    }
    std::vector<int> wcc = leaf(cc.graph);
    for (int t = 0; t < cc.graph.m(); t++) wp[cc.edge_to_parent[t]] = wcc[t];
  }
  return wp;
}

// first adjacent pair among the (ascending) neighbourhood, or (-1,-1)
std::pair<int, int> first_adjacent_pair(const Graph& g, const std::vector<int>& nb) {
  for (size_t i = 0; i < nb.size(); i++)
    for (size_t j = i + 1; j < nb.size(); j++)
      if (g.edge_between(nb[i], nb[j]) >= 0) return {nb[i], nb[j]};
  return {-1, -1};
}

std::vector<int> deg4_component(const Graph& c);

// admissible weights for the new edge at a surviving endpoint `a` whose
// partner across the removed pair is `b`: avoid recreating an equal sum with
// any settled neighbour, and when `a` kept a single edge (necessarily to b)
// avoid its weight so `a` still sees two values
std::vector<int> endpoint_set(const Graph& gp, const std::vector<int>& wp,
                              const VertexColouring& sp, int a, int b, int kmax) {
  std::vector<int> s;
  for (int cand = 1; cand <= kmax; cand++) {
    bool bad = false;
    for (auto [z, e] : gp.adj[a]) {
      (void)e;
      if (z != b && sp[z] - sp[a] == cand) bad = true;
    }
    if (gp.degree(a) == 1) {
      int eab = gp.edge_between(a, b);
      ensure(eab >= 0, "pendant survivor must hang off its partner");
      if (wp[eab] == cand) bad = true;
    }
    if (!bad) s.push_back(cand);
  }
  return s;
}

// admissible weights for the edge from an isolated hub back to neighbour `a`
std::vector<int> spoke_set(const Graph& gp, const std::vector<int>& wp,
                           const VertexColouring& sp, int a, int kmax) {
  std::vector<int> s;
  for (int cand = 1; cand <= kmax; cand++) {
    bool bad = false;
    for (auto [z, e] : gp.adj[a]) {
      (void)e;
      if (sp[z] - sp[a] == cand) bad = true;
      if (gp.degree(a) == 1 && wp[e] == cand) bad = true;
    }
    if (!bad) s.push_back(cand);
  }
  return s;
}

std::vector<int> deg4_component(const Graph& c) {
  if (c.m() <= 3) {
    auto w = exists_weighting(c, ConstraintProfile::threshold(6, 2));
    ensure(w.has_value(), "small component admits no weighting");
    return w->w;
  }
  if (c.max_degree() <= 3) return weight_subcubic(c).w;
  int u = -1;
  for (int x = 0; x < c.n && u < 0; x++)
    if (c.degree(x) == 4) u = x;
  std::vector<int> nb;
  for (auto [z, e] : c.adj[u]) {
    (void)e;
    nb.push_back(z);
  }
  auto [v, vw] = first_adjacent_pair(c, nb);
  std::vector<int> out(c.m(), 0);
  if (v >= 0) {
    int euv = c.edge_between(u, v), euw = c.edge_between(u, vw);
    auto sub = remove_edges(c, {euv, euw});
    auto wp = weight_parts(sub, deg4_component);
    auto sp = sigma(sub.graph, {wp, 6});
    auto s1 = endpoint_set(sub.graph, wp, sp, v, vw, 6);
    auto s2 = endpoint_set(sub.graph, wp, sp, vw, v, 6);
    ensure(s1.size() >= 4 && s2.size() >= 4, "value sets shrank too far");
    std::vector<LinearFactor> fs;
    for (auto [z, e] : sub.graph.adj[u]) {
      (void)e;
      fs.push_back({{1, 1}, sp[u] - sp[z]});
    }
    ensure(fs.size() == 2, "hub keeps exactly two settled edges");
    fs.push_back({{0, 1}, (long long)sp[u] - sp[v]});
    fs.push_back({{1, 0}, (long long)sp[u] - sp[vw]});
    fs.push_back({{1, -1}, (long long)sp[v] - sp[vw]});
    auto pt = cn_search(fs, {s1, s2});
    for (int t = 0; t < sub.graph.m(); t++) out[sub.edge_to_parent[t]] = wp[t];
    out[euv] = pt[0];
    out[euw] = pt[1];
  } else {
    // independent neighbourhood: detach the hub entirely
    std::vector<int> spokes;
    for (int z : nb) spokes.push_back(c.edge_between(u, z));
    auto sub = remove_edges(c, spokes);
    auto wp = weight_parts(sub, deg4_component);
    auto sp = sigma(sub.graph, {wp, 6});
    std::vector<std::vector<int>> sets;
    for (int z : nb) {
      sets.push_back(spoke_set(sub.graph, wp, sp, z, 6));
      ensure(sets.back().size() >= 3, "value sets shrank too far");
    }
    std::vector<LinearFactor> fs;
    for (int i = 0; i < 4; i++) {
      LinearFactor f{{1, 1, 1, 1}, 0};
      f.coeff[i] = 0;
      f.constant = -(long long)sp[nb[i]];
      fs.push_back(f);
    }
    fs.push_back({{0, 0, 1, -1}, 0});
    auto pt = cn_search(fs, sets);
    for (int t = 0; t < sub.graph.m(); t++) out[sub.edge_to_parent[t]] = wp[t];
    for (int i = 0; i < 4; i++) out[spokes[i]] = pt[i];
  }
  return out;
}

std::vector<int> deg5_component(const Graph& c) {
  if (c.m() <= 4) {
    auto w = exists_weighting(c, ConstraintProfile::threshold(7, 2));
    ensure(w.has_value(), "small component admits no weighting");
    return w->w;
  }
  if (c.max_degree() <= 4) return deg4_component(c);
  int u = -1;
  for (int x = 0; x < c.n && u < 0; x++)
    if (c.degree(x) == 5) u = x;
  std::vector<int> nb;
  for (auto [z, e] : c.adj[u]) {
    (void)e;
    nb.push_back(z);
  }
  auto [v, vw] = first_adjacent_pair(c, nb);
  std::vector<int> out(c.m(), 0);
  if (v >= 0 && std::min(c.degree(v), c.degree(vw)) <= 3) {
    // adjacent pair with a low-degree end: drop both spokes
    if (c.degree(v) > 3) std::swap(v, vw);
    int euv = c.edge_between(u, v), euw = c.edge_between(u, vw);
    auto sub = remove_edges(c, {euv, euw});
    auto wp = weight_parts(sub, deg5_component);
    auto sp = sigma(sub.graph, {wp, 7});
    auto s1 = endpoint_set(sub.graph, wp, sp, v, vw, 7);
    auto s2 = endpoint_set(sub.graph, wp, sp, vw, v, 7);
    ensure(s1.size() >= 6 && s2.size() >= 4, "value sets shrank too far");
    std::vector<LinearFactor> fs;
    for (auto [z, e] : sub.graph.adj[u]) {
      (void)e;
      fs.push_back({{1, 1}, sp[u] - sp[z]});
    }
    ensure(fs.size() == 3, "hub keeps exactly three settled edges");
    fs.push_back({{0, 1}, (long long)sp[u] - sp[v]});
    fs.push_back({{1, 0}, (long long)sp[u] - sp[vw]});
    fs.push_back({{1, -1}, (long long)sp[v] - sp[vw]});
    auto pt = cn_search(fs, {s1, s2});
    for (int t = 0; t < sub.graph.m(); t++) out[sub.edge_to_parent[t]] = wp[t];
    out[euv] = pt[0];
    out[euw] = pt[1];
  } else if (v >= 0) {
    // adjacent pair, both ends busy: open the triangle on u
    int euv = c.edge_between(u, v), euw = c.edge_between(u, vw);
    int evw = c.edge_between(v, vw);
    auto sub = remove_edges(c, {euv, euw, evw});
    for (auto& cc : components(sub.graph))
      ensure(cc.graph.n == 1 || cc.graph.m() >= 2, "triangle removal stranded an edge");
    auto wp = weight_parts(sub, deg5_component);
    auto sp = sigma(sub.graph, {wp, 7});
    std::vector<LinearFactor> fs;
    for (auto [z, e] : sub.graph.adj[u]) {
      (void)e;
      fs.push_back({{1, 1, 0}, sp[u] - sp[z]});
    }
    for (auto [z, e] : sub.graph.adj[v]) {
      (void)e;
      fs.push_back({{1, 0, 1}, sp[v] - sp[z]});
    }
    for (auto [z, e] : sub.graph.adj[vw]) {
      (void)e;
      fs.push_back({{0, 1, 1}, sp[vw] - sp[z]});
    }
    fs.push_back({{1, -1, 0}, (long long)sp[v] - sp[vw]});
    fs.push_back({{1, 0, -1}, (long long)sp[u] - sp[vw]});
    fs.push_back({{0, 1, -1}, (long long)sp[u] - sp[v]});
    std::vector<int> full{1, 2, 3, 4, 5, 6, 7};
    auto pt = cn_search(fs, {full, full, full});
    for (int t = 0; t < sub.graph.m(); t++) out[sub.edge_to_parent[t]] = wp[t];
    out[euv] = pt[0];
    out[euw] = pt[1];
    out[evw] = pt[2];
  } else {
    std::vector<int> spokes;
    for (int z : nb) spokes.push_back(c.edge_between(u, z));
    auto sub = remove_edges(c, spokes);
    auto wp = weight_parts(sub, deg5_component);
    auto sp = sigma(sub.graph, {wp, 7});
    std::vector<std::vector<int>> sets;
    for (int z : nb) {
      sets.push_back(spoke_set(sub.graph, wp, sp, z, 7));
      ensure(sets.back().size() >= 3, "value sets shrank too far");
    }
    std::vector<LinearFactor> fs;
    for (int i = 0; i < 5; i++) {
      LinearFactor f{{1, 1, 1, 1, 1}, 0};
      f.coeff[i] = 0;
      f.constant = -(long long)sp[nb[i]];
      fs.push_back(f);
    }
    fs.push_back({{0, 0, 1, -1, 0}, 0});
    auto pt = cn_search(fs, sets);
    for (int t = 0; t < sub.graph.m(); t++) out[sub.edge_to_parent[t]] = wp[t];
    for (int i = 0; i < 5; i++) out[spokes[i]] = pt[i];
  }
  return out;
}

}  // namespace

EdgeWeighting weight_subcubic(const Graph& g) {
  require(is_nice(g), "graph has a bare-edge component");
  require(g.max_degree() <= 3, "maximum degree must be at most 3");
  EdgeWeighting out;
  out.k = 4;
  out.w.assign(g.m(), 0);
  for (auto& comp : components(g)) {
    const Graph& c = comp.graph;
    if (c.m() == 0) continue;
    bool five_cycle = c.n == 5 && c.m() == 5 && c.max_degree() == 2;
    int kc = five_cycle ? 5 : 4;
    auto w = exists_weighting(c, ConstraintProfile::threshold(kc, 2));
    ensure(w.has_value(), "component admits no weighting at its bound");
    for (int e = 0; e < c.m(); e++) out.w[comp.edge_to_parent[e]] = w->w[e];
    out.k = std::max(out.k, kc);
  }
  ensure(verify(g, out, out.k, 2), "weighting failed its final check");
  return out;
}

EdgeWeighting weight_max_deg4(const Graph& g) {
  require(is_nice(g), "graph has a bare-edge component");
  require(g.max_degree() <= 4, "maximum degree must be at most 4");
  EdgeWeighting out;
  out.k = 6;
  out.w.assign(g.m(), 0);
  for (auto& comp : components(g)) {
    if (comp.graph.m() == 0) continue;
    auto w = deg4_component(comp.graph);
    for (int e = 0; e < comp.graph.m(); e++) out.w[comp.edge_to_parent[e]] = w[e];
  }
  ensure(verify(g, out, 6, 2), "weighting failed its final check");
  return out;
}

EdgeWeighting weight_max_deg5(const Graph& g) {
  require(is_nice(g), "graph has a bare-edge component");
  require(g.max_degree() <= 5, "maximum degree must be at most 5");
  EdgeWeighting out;
  out.k = 7;
  out.w.assign(g.m(), 0);
  for (auto& comp : components(g)) {
    if (comp.graph.m() == 0) continue;
    auto w = deg5_component(comp.graph);
    for (int e = 0; e < comp.graph.m(); e++) out.w[comp.edge_to_parent[e]] = w[e];
  }
  ensure(verify(g, out, 7, 2), "weighting failed its final check");
  return out;
}

}  // namespace nsdw
