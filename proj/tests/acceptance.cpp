// Acceptance sweep: one line per criterion, optional argv picks a single one.
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "nsdw/bipartite.hpp"
#include "nsdw/degree_bounded.hpp"
#include "nsdw/dispatch.hpp"
#include "nsdw/general7.hpp"
#include "nsdw/generate.hpp"
#include "nsdw/graph.hpp"
#include "nsdw/oracle.hpp"
#include "nsdw/ordering.hpp"
#include "nsdw/polynomial.hpp"
#include "nsdw/verify.hpp"

using namespace nsdw;

namespace {

struct Outcome {
  bool pass = true;
  std::string details;
  std::uint64_t checked = 0;
  std::uint64_t extra = 0;
  void fail(const std::string& msg) {
    if (pass) {
      pass = false;
      details = msg;
    }
  }
  void merge(const Outcome& o) {
    checked += o.checked;
    extra += o.extra;
    if (pass && !o.pass) {
      pass = false;
      details = o.details;
    }
  }
};

std::string graph_id(int n, std::uint64_t mask) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "n=%d mask=0x%llx", n, (unsigned long long)mask);
  return buf;
}

// split [0, end) across worker threads; make() builds a per-thread body
template <class Make>
Outcome chunked(std::uint64_t end, const Make& make) {
  unsigned T = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t per = (end + T - 1) / T;
  if (per < 4096) {
    T = 1;
    per = end;
  }
  std::vector<Outcome> outs(T);
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < T; t++) {
    std::uint64_t lo = per * t, hi = std::min<std::uint64_t>(end, lo + per);
    if (lo >= hi) continue;
    threads.emplace_back([&outs, &make, lo, hi, t] {
      auto body = make();
      for (std::uint64_t mask = lo; mask < hi; mask++) body(mask, outs[t]);
    });
  }
  for (auto& th : threads) th.join();
  Outcome res;
  for (auto& o : outs) res.merge(o);
  return res;
}

// ---- criterion 1: dispatcher correct on every connected nice graph, n <= 7
Outcome criterion1() {
  Outcome all;
  for (int n = 1; n <= 7; n++) {
    Outcome res = chunked(labeled_graph_count(n), [n] {
      return [n, g = Graph{}](std::uint64_t mask, Outcome& o) mutable {
        assign_from_mask(g, n, mask);
        if (!is_connected(g) || !is_nice(g)) return;
        o.checked++;
        try {
          auto [w, cert] = auto_weight(g);
          if (!verify(g, w, cert.k, cert.t)) {
            o.fail(graph_id(n, mask) + " failed verify at its certificate");
            return;
          }
          int d = g.max_degree() - 1;
          if (g.m() > 0 && d >= 1 && !check_relaxed(g, w, d).ok)
            o.fail(graph_id(n, mask) + " violates the relaxed bound");
        } catch (const std::exception& e) {
          o.fail(graph_id(n, mask) + " threw: " + e.what());
        }
      };
    });
    all.merge(res);
  }
  if (all.pass) all.details = std::to_string(all.checked) + " connected nice graphs";
  return all;
}

// ---- criterion 2: degree-bounded palettes on every graph they cover, n <= 7
Outcome criterion2() {
  Outcome all;
  for (int n = 1; n <= 7; n++) {
    Outcome res = chunked(labeled_graph_count(n), [n] {
      return [n, g = Graph{}](std::uint64_t mask, Outcome& o) mutable {
        assign_from_mask(g, n, mask);
        if (!is_connected(g) || !is_nice(g)) return;
        int dm = g.max_degree();
        if (dm > 5) return;
        o.checked++;
        try {
          if (dm <= 4 && !verify(g, weight_max_deg4(g), 6, 2)) {
            o.fail(graph_id(n, mask) + " failed at palette 6");
            return;
          }
          if (!verify(g, weight_max_deg5(g), 7, 2))
            o.fail(graph_id(n, mask) + " failed at palette 7");
        } catch (const std::exception& e) {
          o.fail(graph_id(n, mask) + " threw: " + e.what());
        }
      };
    });
    all.merge(res);
  }
  if (all.pass) all.details = std::to_string(all.checked) + " bounded-degree graphs";
  return all;
}

// ---- criterion 3: the general construction on 500 random graphs
Outcome criterion3() {
  Outcome o;
  for (std::uint64_t seed = 1; seed <= 500; seed++) {
    int n = 3 + (int)((seed * 7919) % 38);
    int dmax = 2 + (int)(seed % 9);
    try {
      Graph g = gen_random_bounded_degree(n, dmax, seed);
      EdgeWeighting w = run_general7(g);
      o.checked++;
      if (!verify(g, w, 7, 6)) o.fail("seed " + std::to_string(seed) + " failed verify");
    } catch (const std::exception& e) {
      o.fail("seed " + std::to_string(seed) + " threw: " + e.what());
    }
  }
  if (o.pass) o.details = std::to_string(o.checked) + " random graphs at (7,6)";
  return o;
}

// ---- criterion 4: the seed table
Outcome criterion4() {
  Outcome o;
  struct Row {
    int ra, rb, w12, we1, we2;
  };
  const Row rows[] = {
      {0, 0, 7, 1, 2}, {0, 2, 7, 1, 1}, {2, 0, 7, 1, 1},
      {0, 4, 5, 3, 1}, {4, 0, 5, 1, 3}, {2, 2, 5, 3, 1},
      {2, 4, 6, 2, 4}, {4, 2, 6, 4, 2}, {4, 4, 2, 4, 3},
  };
  for (const Row& r : rows) {
    SeedRow e = bootstrap_row(r.ra, r.rb);
    o.checked++;
    if (e.w12 != r.w12 || e.we1 != r.we1 || e.we2 != r.we2)
      o.fail("row (" + std::to_string(r.ra) + "," + std::to_string(r.rb) + ") mismatch");
  }
  if (o.pass) o.details = "9 seed rows";
  return o;
}

// ---- criterion 5: polynomial coefficient anchors
Outcome criterion5() {
  Outcome o;
  auto check = [&](const std::vector<LinearFactor>& fs, const std::vector<int>& exps,
                   long long want, const char* name) {
    long long got = coefficient(expand(fs), exps);
    o.checked++;
    if (got != want)
      o.fail(std::string(name) + ": got " + std::to_string(got) + " want " +
             std::to_string(want));
  };
  check({{{1, 1}, 0}, {{1, 1}, 0}, {{1, -1}, 0}, {{1, 0}, 0}, {{0, 1}, 0}}, {3, 2}, 1,
        "two-var quadratic");
  check({{{1, 1}, 0}, {{1, 1}, 0}, {{1, 1}, 0}, {{1, -1}, 0}, {{1, 0}, 0}, {{0, 1}, 0}},
        {5, 1}, 1, "two-var cubic");
  {
    std::vector<LinearFactor> fs;
    for (int i = 0; i < 3; i++) fs.push_back({{1, 1, 0}, 0});
    for (int i = 0; i < 3; i++) fs.push_back({{1, 0, 1}, 0});
    for (int i = 0; i < 3; i++) fs.push_back({{0, 1, 1}, 0});
    fs.push_back({{1, -1, 0}, 0});
    fs.push_back({{1, 0, -1}, 0});
    fs.push_back({{0, 1, -1}, 0});
    check(fs, {5, 4, 3}, 2, "three-var symmetric");
  }
  std::vector<LinearFactor> f4 = {{{0, 1, 1, 1}, 0},
                                  {{1, 0, 1, 1}, 0},
                                  {{1, 1, 0, 1}, 0},
                                  {{1, 1, 1, 0}, 0},
                                  {{0, 0, 1, -1}, 0}};
  check(f4, {2, 1, 2, 0}, 4, "four-var product");
  std::vector<LinearFactor> f5;
  for (int skip = 0; skip < 5; skip++) {
    LinearFactor f{{1, 1, 1, 1, 1}, 0};
    f.coeff[skip] = 0;
    f5.push_back(f);
  }
  f5.push_back({{0, 0, 1, -1, 0}, 0});
  check(f5, {2, 2, 2, 0, 0}, 10, "five-var product");
  o.checked += 2;
  if (coefficient(expand(f4), {2, 1, 2, 0}) == 0) o.fail("four-var anchor vanished");
  if (coefficient(expand(f5), {2, 2, 2, 0, 0}) == 0) o.fail("five-var anchor vanished");
  if (o.pass) o.details = "5 anchors plus nonvanishing";
  return o;
}

// ---- criterion 6: every connected bipartite graph on 3..8 vertices
Outcome criterion6() {
  Outcome all;
  Graph g;
  for (int n = 3; n <= 8; n++) {
    std::vector<std::vector<int>> pidx(n, std::vector<int>(n, -1));
    {
      int bit = 0;
      for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) pidx[i][j] = bit++;
    }
    for (std::uint32_t side = 1; side < (1u << n); side += 2) {
      std::uint64_t allowed = 0;
      for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
          if (((side >> i) & 1u) != ((side >> j) & 1u)) allowed |= 1ull << pidx[i][j];
      int c0 = __builtin_popcount(side);
      bool even_side = c0 % 2 == 0 || (n - c0) % 2 == 0;
      std::uint64_t sub = allowed;
      while (true) {
        assign_from_mask(g, n, sub);
        if (is_connected(g) && g.m() >= 1) {
          all.checked++;
          try {
            auto [w3, cert3] = bip_three_weighting(g);
            (void)w3;
            EdgeWeighting w6 = bip_six(g);
            bool ok = verify(g, w6, 6, 2);
            auto s6 = sigma(g, w6);
            for (int v = 0; v < n && ok; v++)
              if (s6[v] % 3 != cert3.residue[v]) ok = false;
            if (!ok) all.fail(graph_id(n, sub) + " failed the six-weighting checks");
            if (even_side) {
              auto [w2, cert2] = bip_even_two(g);
              (void)w2;
              EdgeWeighting w4 = bip_four(g);
              bool ok4 = verify(g, w4, 4, 2);
              auto s4 = sigma(g, w4);
              for (int v = 0; v < n && ok4; v++)
                if (s4[v] % 2 != cert2.residue[v]) ok4 = false;
              if (ok4) all.extra++;
              else all.fail(graph_id(n, sub) + " failed the four-weighting checks");
            }
          } catch (const std::exception& e) {
            all.fail(graph_id(n, sub) + " threw: " + e.what());
          }
        }
        if (sub == 0) break;
        sub = (sub - 1) & allowed;
      }
    }
  }
  if (all.pass)
    all.details = std::to_string(all.checked) + " connected bipartite graphs, " +
                  std::to_string(all.extra) + " with an even side";
  return all;
}

// ---- criterion 7: orderings on every connected non-star graph, n <= 8
Outcome criterion7() {
  Outcome all;
  for (int n = 3; n <= 8; n++) {
    Outcome res = chunked(1ull << (n * (n - 1) / 2), [n] {
      return [n, g = Graph{}](std::uint64_t mask, Outcome& o) mutable {
        unsigned adj[8] = {0, 0, 0, 0, 0, 0, 0, 0};
        int bit = 0;
        for (int i = 0; i < n; i++)
          for (int j = i + 1; j < n; j++, bit++)
            if ((mask >> bit) & 1ull) {
              adj[i] |= 1u << j;
              adj[j] |= 1u << i;
            }
        unsigned vis = 1, frontier = 1, full = (1u << n) - 1;
        while (frontier) {
          unsigned nf = 0, f = frontier;
          while (f) {
            int v = __builtin_ctz(f);
            f &= f - 1;
            nf |= adj[v];
          }
          frontier = nf & ~vis;
          vis |= frontier;
        }
        if (vis != full) return;
        int m = __builtin_popcountll(mask), dmax = 0;
        for (int v = 0; v < n; v++) dmax = std::max(dmax, __builtin_popcount(adj[v]));
        if (m == n - 1 && dmax == n - 1) return;  // star
        o.checked++;
        assign_from_mask(g, n, mask);
        try {
          OrderingStats st;
          VertexOrdering ord = good_ordering(g, &st);
          if (!check_ordering(g, ord).empty()) {
            o.fail(graph_id(n, mask) + " ordering violates a condition");
            return;
          }
          if (st.repairs > 0) {
            o.extra++;
            for (size_t i = 1; i < st.b_sizes.size(); i++)
              if (st.b_sizes[i] >= st.b_sizes[i - 1]) {
                o.fail(graph_id(n, mask) + " repair sizes not strictly decreasing");
                return;
              }
          }
        } catch (const std::exception& e) {
          o.fail(graph_id(n, mask) + " threw: " + e.what());
        }
      };
    });
    all.merge(res);
  }
  if (all.pass)
    all.details = std::to_string(all.checked) + " connected non-star graphs, " +
                  std::to_string(all.extra) + " repaired";
  return all;
}

// ---- criterion 8: construction never beaten by more than the guarantee
Outcome criterion8() {
  Outcome all;
  for (int n = 2; n <= 6; n++) {
    Outcome res = chunked(labeled_graph_count(n), [n] {
      return [n, g = Graph{}](std::uint64_t mask, Outcome& o) mutable {
        assign_from_mask(g, n, mask);
        if (!is_connected(g) || !is_nice(g) || g.m() == 0) return;
        o.checked++;
        try {
          auto [w, cert] = auto_weight(g);
          (void)w;
          int d = std::max(1, g.max_degree() - 1);
          int exact = exact_min_k(g, ConstraintProfile::Mode::relaxed, d);
          if (exact > cert.k) {
            o.fail(graph_id(n, mask) + " exact " + std::to_string(exact) +
                   " beats certificate " + std::to_string(cert.k));
            return;
          }
          if (exact <= 4) o.extra++;
        } catch (const std::exception& e) {
          o.fail(graph_id(n, mask) + " threw: " + e.what());
        }
      };
    });
    all.merge(res);
  }
  if (all.pass)
    all.details = std::to_string(all.checked) + " graphs, exact <= 4 on " +
                  std::to_string(all.extra);
  return all;
}

// ---- criterion 9: the five-cycle special case
Outcome criterion9() {
  Outcome o;
  try {
    Graph c5 = gen_cycle(5);
    EdgeWeighting w = weight_subcubic(c5);
    o.checked = 1;
    bool ok = w.k == 5;
    for (int e = 0; e < c5.m(); e++)
      if (w.w[e] < 1 || w.w[e] > 5) ok = false;
    if (!check_threshold(c5, w, 2).empty()) ok = false;
    if (!verify(c5, w, 5, 2)) ok = false;
    if (!ok) o.fail("five-cycle weighting off its bound");
  } catch (const std::exception& e) {
    o.fail(std::string("threw: ") + e.what());
  }
  if (o.pass) o.details = "k=5 with both checks clean";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  int failures = 0;
  auto emit = [&](int idx, const Outcome& o) {
    std::printf("criterion %d: %s (%s)\n", idx, o.pass ? "PASS" : "FAIL",
                o.details.c_str());
    std::fflush(stdout);
    if (!o.pass) failures++;
  };
  auto want = [&](int idx) { return only == 0 || only == idx; };
  if (want(1)) emit(1, criterion1());
  if (want(2)) emit(2, criterion2());
  if (want(3)) emit(3, criterion3());
  if (want(4)) emit(4, criterion4());
  if (want(5)) emit(5, criterion5());
  if (want(6)) emit(6, criterion6());
  if (want(7)) emit(7, criterion7());
  if (want(8)) emit(8, criterion8());
  if (want(9)) emit(9, criterion9());
  return failures == 0 ? 0 : 1;
}
