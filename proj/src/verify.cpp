#include "nsdw/verify.hpp"

#include <algorithm>

#include "json.hpp"

namespace nsdw {

std::vector<int> check_distinguishing(const Graph& g, const EdgeWeighting& w) {
  auto s = sigma(g, w);
  std::vector<int> bad;
  for (int e = 0; e < g.m(); e++)
    if (s[g.edges[e].first] == s[g.edges[e].second]) bad.push_back(e);
  return bad;
}

std::vector<int> check_threshold(const Graph& g, const EdgeWeighting& w, int t) {
  require(t >= 1, "threshold must be positive");
  std::vector<int> bad;
  for (int v = 0; v < g.n; v++) {
    if (g.degree(v) < t) continue;
    bool mono = true;
    for (auto [u, e] : g.adj[v]) {
      (void)u;
      if (w.w[e] != w.w[g.adj[v][0].second]) mono = false;
    }
    if (mono) bad.push_back(v);
  }
  return bad;
}

RelaxedResult check_relaxed(const Graph& g, const EdgeWeighting& w, int d) {
  require(d >= 1, "relaxed bound must be positive");
  // degree of v in the subgraph of weight-c edges, scanned per vertex
  for (int v = 0; v < g.n; v++) {
    std::map<int, int> cnt;
    for (auto [u, e] : g.adj[v]) {
      (void)u;
      if (++cnt[w.w[e]] > d) return {false, v, w.w[e]};
    }
  }
  return {};
}

WeightingReport report(const Graph& g, const EdgeWeighting& w, int t, int d) {
  WeightingReport r;
  r.conflicts = check_distinguishing(g, w);
  r.proper = r.conflicts.empty();
  r.max_weight = w.w.empty() ? 0 : *std::max_element(w.w.begin(), w.w.end());
  r.t = t;
  if (t > 0) r.threshold_violations = check_threshold(g, w, t);
  r.d = d;
  if (d > 0) r.relaxed_ok = check_relaxed(g, w, d).ok;
  for (int v = 0; v < g.n; v++) {
    std::map<int, int> cnt;
    for (auto [u, e] : g.adj[v]) {
      (void)u;
      cnt[w.w[e]]++;
    }
    for (auto [c, k] : cnt) r.relaxed_degrees[c] = std::max(r.relaxed_degrees[c], k);
  }
  return r;
}

std::string report_json(const WeightingReport& r) {
  nlohmann::json j;
  j["proper"] = r.proper;
  j["conflicts"] = r.conflicts;
  j["max_weight"] = r.max_weight;
  j["t"] = r.t;
  j["threshold_violations"] = r.threshold_violations;
  j["d"] = r.d;
  j["relaxed_ok"] = r.relaxed_ok;
  nlohmann::json rd = nlohmann::json::object();
  for (auto [c, deg] : r.relaxed_degrees) rd[std::to_string(c)] = deg;
  j["relaxed_degrees"] = rd;
  return j.dump(2);
}

bool verify(const Graph& g, const EdgeWeighting& w, int k, int t) {
  if ((int)w.w.size() != g.m()) return false;
  for (int x : w.w)
    if (x < 1 || x > k) return false;
  if (!check_distinguishing(g, w).empty()) return false;
  if (t > 0 && !check_threshold(g, w, t).empty()) return false;
  return true;
}

}  // namespace nsdw
