#include "nsdw/general7.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nsdw/verify.hpp"

namespace nsdw {

SeedRow bootstrap_row(int ra, int rb) {
  require(ra >= 0 && ra < 6 && rb >= 0 && rb < 6 && ra % 2 == 0 && rb % 2 == 0,
          "seed residues must be 0, 2 or 4");
  switch (ra * 10 + rb) {
    case 0: return {7, 1, 2};
    case 2: return {7, 1, 1};
    case 20: return {7, 1, 1};
    case 4: return {5, 3, 1};
    case 40: return {5, 1, 3};
    case 22: return {5, 3, 1};
    case 24: return {6, 2, 4};
    case 42: return {6, 4, 2};
    case 44: return {2, 4, 3};
  }
  ensure(false, "unreachable seed key");
  return {};
}

namespace {

// lexicographically next c-subset of {0..p-1}
bool next_combination(std::vector<int>& comb, int p) {
  int c = (int)comb.size();
  for (int i = c - 1; i >= 0; i--)
    if (comb[i] < p - c + i) {
      comb[i]++;
      for (int j = i + 1; j < c; j++) comb[j] = comb[j - 1] + 1;
      return true;
    }
  return false;
}

struct Runner {
  const Graph& g;
  VertexOrdering ord;
  std::vector<int> w;
  std::vector<long long> sig;
  std::vector<long long> committed;
  RunTrace* trace;

  Runner(const Graph& g_, RunTrace* trace_)
      : g(g_), ord(good_ordering(g_)), w(g_.m(), 4), sig(g_.n), committed(g_.n, -1),
        trace(trace_) {
    for (int v = 0; v < g.n; v++) sig[v] = 4LL * g.degree(v);
  }

  void set_weight(int e, int nw) {
    ensure(nw >= 1 && nw <= 7, "weight out of range");
    auto [a, b] = g.edges[e];
    sig[a] += nw - w[e];
    sig[b] += nw - w[e];
    w[e] = nw;
  }

  bool has_later_neighbour(int u, int pos) const {
    for (auto [z, e] : g.adj[u]) {
      (void)e;
      if (ord.position[z] > pos) return true;
    }
    return false;
  }

  void bootstrap() {
    int v1 = ord.order[0], v2 = ord.order[1];
    int e12 = g.edge_between(v1, v2);
    ensure(e12 >= 0, "first two ordered vertices must be adjacent");
    auto first_successor_edge = [&](int v, int skip) {
      int best = -1, best_pos = g.n;
      for (auto [u, e] : g.adj[v])
        if (u != skip && ord.position[u] < best_pos) {
          best_pos = ord.position[u];
          best = e;
        }
      ensure(best >= 0, "seed vertex lacks a second neighbour");
      return best;
    };
    int e1 = first_successor_edge(v1, v2);
    int e2 = first_successor_edge(v2, v1);
    SeedRow row =
        bootstrap_row((4 * g.degree(v1)) % 6, (4 * g.degree(v2)) % 6);
    ensure(row.w12 != row.we1 && row.w12 != row.we1 + 3 && row.w12 != row.we2 &&
               row.w12 != row.we2 + 3,
           "seed edge collides with a first-successor edge");
    set_weight(e12, row.w12);
    set_weight(e1, row.we1);
    set_weight(e2, row.we2);
    committed[v1] = sig[v1];
    committed[v2] = sig[v2];
    ensure(committed[v1] % 6 <= 2 && committed[v2] % 6 <= 2 &&
               committed[v1] % 6 != committed[v2] % 6,
           "seed sums must land in distinct low residue classes");
    if (trace) {
      trace->v1 = v1;
      trace->v2 = v2;
      trace->seed = row;
      trace->w_v1 = committed[v1];
      trace->w_v2 = committed[v2];
    }
  }

  // weight shared by every predecessor edge after raising the chosen subset,
  // or -1 when they are mixed
  int mono_value(const std::vector<std::pair<int, int>>& preds,
                 const std::vector<char>& in_t) const {
    int val = -1;
    for (int i = 0; i < (int)preds.size(); i++) {
      int wv = w[preds[i].second] + (in_t[i] ? 3 : 0);
      if (val == -1) val = wv;
      else if (val != wv) return -1;
    }
    return val;
  }

  void apply(int v, const std::vector<std::pair<int, int>>& preds,
             const std::vector<int>& comb, int r, int eprime, long long s) {
    for (int idx : comb) set_weight(preds[idx].second, w[preds[idx].second] + 3);
    if (r > 0) set_weight(eprime, w[eprime] - r);
    ensure(sig[v] == s, "applied sum disagrees with the chosen candidate");
    committed[v] = sig[v];

    int pos_v = ord.position[v];
    bool vprime = eprime >= 0;
    if (vprime) {
      ensure(w[eprime] >= 1 && w[eprime] <= 4, "first-successor edge out of range");
      ensure(sig[v] % 6 <= 2, "sum left the low residue classes");
      for (auto& [u, e] : preds) {
        (void)e;
        ensure(sig[v] != committed[u], "sum collides with a committed predecessor");
      }
    } else {
      for (auto& [u, e] : preds) {
        (void)e;
        if (has_later_neighbour(u, pos_v))
          ensure(sig[v] != committed[u] && sig[v] != committed[u] + 3,
                 "sink sum collides with the movable predecessor");
        else
          ensure(sig[v] != sig[u], "sink sum collides with a finished predecessor");
      }
    }
    for (auto& [u, e] : preds) {
      (void)e;
      ensure(sig[u] == committed[u] || sig[u] == committed[u] + 3,
             "predecessor drifted off its committed pair");
    }
    if (g.degree(v) >= 6) {
      std::vector<char> none(preds.size(), 0);
      int mv = mono_value(preds, none);
      if (vprime) {
        if (mv != -1)
          ensure(mv != w[eprime] && mv != w[eprime] + 3,
                 "busy vertex may end up seeing a single weight");
      } else {
        ensure(mv == -1, "busy sink sees a single weight");
      }
    }
    if (trace) {
      StepRecord rec;
      rec.vertex = v;
      for (int idx : comb) rec.plus3_edges.push_back(preds[idx].second);
      std::sort(rec.plus3_edges.begin(), rec.plus3_edges.end());
      rec.r = r;
      rec.committed = committed[v];
      trace->steps.push_back(std::move(rec));
    }
  }

  void process(int v) {
    int pos_v = ord.position[v];
    std::vector<std::pair<int, int>> preds;  // (vertex, edge), position-ascending
    for (auto [u, e] : g.adj[v])
      if (ord.position[u] < pos_v) preds.push_back({u, e});
    std::sort(preds.begin(), preds.end(), [&](const auto& a, const auto& b) {
      return ord.position[a.first] < ord.position[b.first];
    });
    ensure(!preds.empty(), "ordered vertex without an earlier neighbour");
    const int np = (int)preds.size();

    // pull any predecessor riding three above its committed sum back down;
    // the edge into v is still untouched whenever that happens
    for (auto& [u, e] : preds) {
      if (sig[u] == committed[u] + 3) {
        ensure(w[e] == 4, "adjustment expected an untouched edge");
        set_weight(e, 1);
      }
      ensure(sig[u] == committed[u], "predecessor sum off its committed value");
    }

    int eprime = -1, best_pos = g.n;
    for (auto [u, e] : g.adj[v])
      if (ord.position[u] > pos_v && ord.position[u] < best_pos) {
        best_pos = ord.position[u];
        eprime = e;
      }
    bool vprime = eprime >= 0;
    if (vprime) ensure(w[eprime] == 4, "first-successor edge already touched");

    int j1 = -1;
    if (!vprime) {
      int movable = 0;
      for (int i = 0; i < np; i++)
        if (has_later_neighbour(preds[i].first, pos_v)) {
          movable++;
          j1 = i;
        }
      ensure(movable <= 1, "sink has two predecessors that can still move");
      if (movable == 0) j1 = 0;
    }

    long long alpha = sig[v];
    int deg = g.degree(v);
    int cmax = np;
    if (!vprime && deg > 20) cmax = std::min(np, 6);

    for (int c = 0; c <= cmax; c++) {
      if (vprime) {
        std::vector<int> good_r;
        for (int r = 0; r <= 3; r++) {
          long long s = alpha + 3LL * c - r;
          if (s % 6 > 2) continue;
          bool ok = true;
          for (auto& [u, e] : preds) {
            (void)e;
            if (s == committed[u]) {
              ok = false;
              break;
            }
          }
          if (ok) good_r.push_back(r);
        }
        if (good_r.empty()) continue;
        std::vector<int> comb(c);
        std::iota(comb.begin(), comb.end(), 0);
        do {
          std::vector<char> in_t(np, 0);
          for (int idx : comb) in_t[idx] = 1;
          for (int r : good_r) {
            if (deg >= 6) {
              int mv = mono_value(preds, in_t);
              if (mv != -1 && (mv == 4 - r || mv == 7 - r)) continue;
            }
            apply(v, preds, comb, r, eprime, alpha + 3LL * c - r);
            return;
          }
        } while (next_combination(comb, np));
      } else {
        long long s = alpha + 3LL * c;
        long long cj = committed[preds[j1].first];
        if (s == cj || s == cj + 3) continue;
        std::vector<int> comb(c);
        std::iota(comb.begin(), comb.end(), 0);
        do {
          std::vector<char> in_t(np, 0);
          for (int idx : comb) in_t[idx] = 1;
          bool ok = true;
          for (int i = 0; i < np && ok; i++) {
            if (i == j1) continue;
            if (s == committed[preds[i].first] + (in_t[i] ? 3 : 0)) ok = false;
          }
          if (ok && deg >= 6 && mono_value(preds, in_t) != -1) ok = false;
          if (ok) {
            apply(v, preds, comb, 0, eprime, s);
            return;
          }
        } while (next_combination(comb, np));
      }
    }
    throw std::logic_error("invariant violated: step search exhausted");
  }

  EdgeWeighting run() {
    bootstrap();
    for (int i = 2; i < g.n; i++) process(ord.order[i]);
    for (int u = 0; u < g.n; u++) {
      if (has_later_neighbour(u, ord.position[u]))
        ensure(sig[u] == committed[u] || sig[u] == committed[u] + 3,
               "final sum drifted off its committed pair");
      else
        ensure(sig[u] == committed[u], "finished vertex moved after its step");
    }
    return {w, 7};
  }
};

}  // namespace

EdgeWeighting run_general7(const Graph& g, RunTrace* trace) {
  require(is_connected(g), "graph must be connected");
  require(is_nice(g), "graph is a bare edge");
  if (trace) *trace = RunTrace{};
  if (g.n == 1) return {{}, 7};
  if (is_star(g)) {
    EdgeWeighting w;
    w.k = 7;
    w.w.assign(g.m(), 1);
    w.w[0] = 2;
    ensure(verify(g, w, 7, 6), "star weighting failed its check");
    return w;
  }
  Runner runner(g, trace);
  EdgeWeighting result = runner.run();
  ensure(verify(g, result, 7, 6), "weighting failed its final check");
  return result;
}

std::string trace_lines(const RunTrace& t) {
  std::ostringstream out;
  out << "seed v1=" << t.v1 << " v2=" << t.v2 << " w12=" << t.seed.w12
      << " we1=" << t.seed.we1 << " we2=" << t.seed.we2 << " w(v1)=" << t.w_v1
      << " w(v2)=" << t.w_v2 << "\n";
  for (const StepRecord& s : t.steps) {
    out << "v=" << s.vertex << " +3={";
    for (size_t i = 0; i < s.plus3_edges.size(); i++) {
      if (i) out << ',';
      out << s.plus3_edges[i];
    }
    out << "} r=" << s.r << " w=" << s.committed << "\n";
  }
  return out.str();
}

}  // namespace nsdw
