#include "nsdw/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace nsdw {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& es) {
  require(n >= 0, "negative vertex count");
  Graph g;
  g.n = n;
  g.adj.resize(n);
  std::map<std::pair<int, int>, int> seen;
  for (auto [u, v] : es) {
    require(u >= 0 && u < n && v >= 0 && v < n, "edge endpoint out of range");
    require(u != v, "self-loop");
    if (u > v) std::swap(u, v);
    require(!seen.count({u, v}), "duplicate edge");
    int idx = (int)g.edges.size();
    seen[{u, v}] = idx;
    g.edges.push_back({u, v});
    g.adj[u].push_back({v, idx});
    g.adj[v].push_back({u, idx});
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n; v++) d = std::max(d, degree(v));
  return d;
}

int Graph::edge_between(int u, int v) const {
  for (auto [x, e] : adj[u])
    if (x == v) return e;
  return -1;
}

VertexColouring sigma(const Graph& g, const EdgeWeighting& w) {
  ensure((int)w.w.size() == g.m(), "weight vector length mismatch");
  VertexColouring s(g.n, 0);
  for (int e = 0; e < g.m(); e++) {
    s[g.edges[e].first] += w.w[e];
    s[g.edges[e].second] += w.w[e];
  }
  return s;
}

namespace {

bool parse_int(const std::string& tok, long long& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long declared_n = -1;
  bool saw_content = false;
  long long max_label = -1;
  std::vector<std::pair<int, int>> edges;
  std::map<std::pair<int, int>, int> first_seen;  // for duplicate line numbers
  while (std::getline(in, line)) {
    lineno++;
    auto toks = tokens(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    std::string where = "line " + std::to_string(lineno) + ": ";
    if (!saw_content && toks[0] == "n") {
      require(toks.size() == 2, where + "header needs one count");
      require(parse_int(toks[1], declared_n) && declared_n >= 0,
              where + "bad vertex count '" + toks[1] + "'");
      saw_content = true;
      continue;
    }
    saw_content = true;
    require(toks.size() == 2, where + "expected two endpoints");
    long long u, v;
    require(parse_int(toks[0], u), where + "bad vertex '" + toks[0] + "'");
    require(parse_int(toks[1], v), where + "bad vertex '" + toks[1] + "'");
    require(u >= 0 && v >= 0, where + "negative vertex");
    require(u != v, where + "self-loop at " + std::to_string(u));
    require(u < 1000000 && v < 1000000, where + "vertex label too large");
    if (declared_n >= 0)
      require(u < declared_n && v < declared_n,
              where + "vertex beyond declared count " + std::to_string(declared_n));
    std::pair<int, int> key{(int)std::min(u, v), (int)std::max(u, v)};
    require(!first_seen.count(key), where + "duplicate edge " + std::to_string(key.first) +
                                        " " + std::to_string(key.second));
    first_seen[key] = lineno;
    edges.push_back(key);
    max_label = std::max({max_label, u, v});
  }
  long long n = declared_n >= 0 ? declared_n : max_label + 1;
  return Graph::from_edges((int)n, edges);
}

std::string format_weighting(const Graph& g, const EdgeWeighting& w) {
  ensure((int)w.w.size() == g.m(), "weight vector length mismatch");
  std::string out;
  for (int e = 0; e < g.m(); e++) {
    auto [u, v] = g.edges[e];
    out += std::to_string(u) + " " + std::to_string(v) + " " + std::to_string(w.w[e]) + "\n";
  }
  return out;
}

EdgeWeighting parse_weighting(const Graph& g, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  EdgeWeighting w;
  w.w.assign(g.m(), 0);
  std::vector<bool> got(g.m(), false);
  for (; std::getline(in, line); ) {
    lineno++;
    auto toks = tokens(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    std::string where = "line " + std::to_string(lineno) + ": ";
    require(toks.size() == 3, where + "expected 'u v weight'");
    long long u, v, x;
    require(parse_int(toks[0], u) && parse_int(toks[1], v) && parse_int(toks[2], x),
            where + "bad number");
    require(u >= 0 && u < g.n && v >= 0 && v < g.n && u != v, where + "bad endpoints");
    int e = g.edge_between((int)u, (int)v);
    require(e >= 0, where + "no such edge " + std::to_string(u) + " " + std::to_string(v));
    require(!got[e], where + "edge weighted twice");
    require(x >= 1, where + "weights start at 1");
    got[e] = true;
    w.w[e] = (int)x;
    w.k = std::max(w.k, (int)x);
  }
  for (int e = 0; e < g.m(); e++)
    require(got[e], "no weight for edge " + std::to_string(g.edges[e].first) + " " +
                        std::to_string(g.edges[e].second));
  return w;
}

std::vector<Component> components(const Graph& g) {
  std::vector<int> comp(g.n, -1);
  std::vector<Component> out;
  std::vector<int> queue;
  for (int s = 0; s < g.n; s++) {
    if (comp[s] >= 0) continue;
    int id = (int)out.size();
    queue.clear();
    queue.push_back(s);
    comp[s] = id;
    std::vector<int> verts{s};
    for (size_t qi = 0; qi < queue.size(); qi++) {
      int v = queue[qi];
      for (auto [u, e] : g.adj[v]) {
        (void)e;
        if (comp[u] < 0) {
          comp[u] = id;
          queue.push_back(u);
          verts.push_back(u);
        }
      }
    }
    std::sort(verts.begin(), verts.end());
    Component c;
    c.to_parent = verts;
    out.push_back(std::move(c));
  }
  std::vector<int> local(g.n, -1);
  for (auto& c : out)
    for (int i = 0; i < (int)c.to_parent.size(); i++) local[c.to_parent[i]] = i;
  std::vector<std::vector<std::pair<int, int>>> comp_edges(out.size());
  for (int e = 0; e < g.m(); e++) {
    auto [u, v] = g.edges[e];
    comp_edges[comp[u]].push_back({local[u], local[v]});
    out[comp[u]].edge_to_parent.push_back(e);
  }
  for (size_t i = 0; i < out.size(); i++)
    out[i].graph = Graph::from_edges((int)out[i].to_parent.size(), comp_edges[i]);
  return out;
}

EdgeSubgraph edge_subgraph(const Graph& g, const std::vector<int>& keep_edges) {
  EdgeSubgraph s;
  std::vector<std::pair<int, int>> es;
  for (int e : keep_edges) {
    ensure(e >= 0 && e < g.m(), "edge index out of range");
    es.push_back(g.edges[e]);
    s.edge_to_parent.push_back(e);
  }
  s.graph = Graph::from_edges(g.n, es);
  return s;
}

EdgeSubgraph remove_edges(const Graph& g, const std::vector<int>& drop_edges) {
  std::vector<bool> drop(g.m(), false);
  for (int e : drop_edges) {
    ensure(e >= 0 && e < g.m(), "edge index out of range");
    drop[e] = true;
  }
  std::vector<int> keep;
  for (int e = 0; e < g.m(); e++)
    if (!drop[e]) keep.push_back(e);
  return edge_subgraph(g, keep);
}

bool is_connected(const Graph& g) {
  if (g.n <= 1) return true;
  std::vector<bool> vis(g.n, false);
  std::vector<int> queue{0};
  vis[0] = true;
  int seen = 1;
  for (size_t qi = 0; qi < queue.size(); qi++)
    for (auto [u, e] : g.adj[queue[qi]]) {
      (void)e;
      if (!vis[u]) {
        vis[u] = true;
        seen++;
        queue.push_back(u);
      }
    }
  return seen == g.n;
}

bool is_nice(const Graph& g) {
  // a component that is a single edge = two degree-1 endpoints joined
  for (auto [u, v] : g.edges)
    if (g.degree(u) == 1 && g.degree(v) == 1) return false;
  return true;
}

bool is_star(const Graph& g) {
  return g.n >= 2 && g.m() == g.n - 1 && g.max_degree() == g.n - 1;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(g.n, -1);
  std::vector<int> queue;
  for (int s = 0; s < g.n; s++) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.clear();
    queue.push_back(s);
    for (size_t qi = 0; qi < queue.size(); qi++) {
      int v = queue[qi];
      for (auto [u, e] : g.adj[v]) {
        (void)e;
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          queue.push_back(u);
        } else if (side[u] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

}  // namespace nsdw
