#include "doctest.h"

#include "nsdw/degree_bounded.hpp"
#include "nsdw/generate.hpp"
#include "nsdw/graph.hpp"
#include "nsdw/verify.hpp"

#include <algorithm>

using namespace nsdw;

namespace {
int max_used(const EdgeWeighting& w) {
  return w.w.empty() ? 0 : *std::max_element(w.w.begin(), w.w.end());
}
}  // namespace

TEST_CASE("subcubic: triangle within 4") {
  Graph c3 = gen_cycle(3);
  EdgeWeighting w = weight_subcubic(c3);
  CHECK(max_used(w) <= 4);
  CHECK(verify(c3, w, 4, 2));
}

TEST_CASE("subcubic: five-cycle needs and gets 5") {
  Graph c5 = gen_cycle(5);
  EdgeWeighting w = weight_subcubic(c5);
  CHECK(w.k == 5);
  CHECK(max_used(w) <= 5);
  CHECK(verify(c5, w, 5, 2));
}

TEST_CASE("subcubic: C5 plus pendant is not special-cased") {
  Graph g = parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n");
  EdgeWeighting w = weight_subcubic(g);
  CHECK(w.k == 4);
  CHECK(verify(g, w, 4, 2));
}

TEST_CASE("subcubic: disconnected, including a C5 component") {
  Graph g = parse_edge_list("0 1\n1 2\n3 4\n4 5\n5 6\n6 7\n7 3\n");
  EdgeWeighting w = weight_subcubic(g);
  CHECK(w.k == 5);
  CHECK(verify(g, w, 5, 2));
}

TEST_CASE("cube graph within 4") {
  Graph q3 = parse_edge_list(
      "0 1\n0 2\n1 3\n2 3\n4 5\n4 6\n5 7\n6 7\n0 4\n1 5\n2 6\n3 7\n");
  EdgeWeighting w = weight_subcubic(q3);
  CHECK(verify(q3, w, 4, 2));
}

TEST_CASE("max degree 4: wheel on five vertices") {
  Graph w4 = parse_edge_list("0 1\n0 2\n0 3\n0 4\n1 2\n2 3\n3 4\n4 1\n");
  EdgeWeighting w = weight_max_deg4(w4);
  CHECK(w.k == 6);
  CHECK(verify(w4, w, 6, 2));
}

TEST_CASE("max degree 4: star with independent neighbourhood") {
  Graph s5 = gen_star(5);
  EdgeWeighting w = weight_max_deg4(s5);
  CHECK(verify(s5, w, 6, 2));
}

TEST_CASE("max degree 4: K5") {
  Graph k5 = gen_complete(5);
  EdgeWeighting w = weight_max_deg4(k5);
  CHECK(verify(k5, w, 6, 2));
}

TEST_CASE("max degree 5: K6 and K_{1,5}") {
  Graph k6 = gen_complete(6);
  EdgeWeighting w = weight_max_deg5(k6);
  CHECK(w.k == 7);
  CHECK(verify(k6, w, 7, 2));
  Graph s6 = gen_star(6);
  CHECK(verify(s6, weight_max_deg5(s6), 7, 2));
}

TEST_CASE("max degree 5: adjacent high/low degree pair") {
  // degree-5 hub with one low-degree neighbour adjacent to another neighbour
  Graph g = parse_edge_list("0 1\n0 2\n0 3\n0 4\n0 5\n1 2\n2 3\n3 4\n4 5\n2 6\n3 6\n");
  EdgeWeighting w = weight_max_deg5(g);
  CHECK(verify(g, w, 7, 2));
}

TEST_CASE("bounded families delegate downward") {
  Graph p5 = gen_path(5);
  CHECK(verify(p5, weight_max_deg4(p5), 6, 2));
  CHECK(verify(p5, weight_max_deg5(p5), 7, 2));
}

TEST_CASE("random graphs at each degree bound") {
  for (std::uint64_t s = 1; s <= 25; s++) {
    Graph g3 = gen_random_bounded_degree(4 + (int)(s % 10), 3, 1000 + s);
    CHECK(verify(g3, weight_subcubic(g3), 5, 2));
    Graph g4 = gen_random_bounded_degree(4 + (int)(s % 10), 4, 2000 + s);
    CHECK(verify(g4, weight_max_deg4(g4), 6, 2));
    Graph g5 = gen_random_bounded_degree(4 + (int)(s % 12), 5, 3000 + s);
    CHECK(verify(g5, weight_max_deg5(g5), 7, 2));
  }
}
