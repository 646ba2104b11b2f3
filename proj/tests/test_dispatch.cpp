#include "doctest.h"

#include "nsdw/dispatch.hpp"
#include "nsdw/generate.hpp"
#include "nsdw/graph.hpp"
#include "nsdw/survey.hpp"
#include "nsdw/verify.hpp"

#include <string>

using namespace nsdw;

TEST_CASE("method selection on landmark graphs") {
  auto m = [](const Graph& g) { return auto_weight(g).second.method; };
  CHECK(m(gen_path(3)) == Method::star);
  CHECK(m(gen_star(9)) == Method::star);
  CHECK(m(gen_cycle(4)) == Method::bip4);        // even side
  CHECK(m(gen_cycle(6)) == Method::bip6);        // both sides odd
  CHECK(m(gen_complete_bipartite(2, 3)) == Method::bip4);
  CHECK(m(gen_cycle(5)) == Method::subcubic);
  CHECK(m(gen_complete(4)) == Method::subcubic);  // max degree 3
  Graph w4 = parse_edge_list("0 1\n0 2\n0 3\n0 4\n1 2\n2 3\n3 4\n4 1\n");
  CHECK(m(w4) == Method::delta4);
  CHECK(m(gen_complete(6)) == Method::delta5);
  CHECK(m(gen_complete(7)) == Method::general7);
}

TEST_CASE("certificates carry the guarantee parameters") {
  auto [w5, c5] = auto_weight(gen_cycle(5));
  CHECK(c5.k == 5);
  CHECK(c5.t == 2);
  auto [w7, c7] = auto_weight(gen_complete(7));
  CHECK(c7.k == 7);
  CHECK(c7.t == 6);
  auto [ws, cs] = auto_weight(gen_star(5));
  CHECK(cs.k == 2);
  CHECK(cs.t == 2);
}

TEST_CASE("disconnected graphs merge per-component certificates") {
  // C4 (bip4) plus K6 (delta5) plus an isolated vertex
  Graph g = parse_edge_list(
      "n 11\n0 1\n1 2\n2 3\n3 0\n4 5\n4 6\n4 7\n4 8\n4 9\n5 6\n5 7\n5 8\n5 9\n"
      "6 7\n6 8\n6 9\n7 8\n7 9\n8 9\n");
  auto [w, cert] = auto_weight(g);
  REQUIRE(cert.parts.size() == 2);
  CHECK(cert.parts[0].method == Method::bip4);
  CHECK(cert.parts[1].method == Method::delta5);
  CHECK(cert.method == Method::delta5);
  CHECK(cert.k == 7);
  CHECK(cert.t == 2);
  CHECK(verify(g, w, cert.k, cert.t));
}

TEST_CASE("edgeless graphs get the trivial certificate") {
  auto [w, cert] = auto_weight(parse_edge_list("n 3\n"));
  CHECK(w.w.empty());
  CHECK(cert.parts.empty());
  CHECK(cert.method == Method::star);
  CHECK(cert.k == 2);
}

TEST_CASE("dispatcher rejects non-nice graphs") {
  CHECK_THROWS_AS(auto_weight(parse_edge_list("0 1\n")), structural_error);
  CHECK_THROWS_AS(auto_weight(parse_edge_list("0 1\n2 3\n3 4\n")), structural_error);
}

TEST_CASE("dispatcher results always verify at the certificate") {
  for (std::uint64_t s = 1; s <= 30; s++) {
    Graph g = gen_random_bounded_degree(3 + (int)(s % 12), 2 + (int)(s % 9), 500 + s);
    auto [w, cert] = auto_weight(g);
    CHECK(verify(g, w, cert.k, cert.t));
    auto rr = check_relaxed(g, w, std::max(1, g.max_degree() - 1));
    CHECK(rr.ok);
  }
}

TEST_CASE("method names are stable strings") {
  CHECK(std::string(method_name(Method::general7)) == "general7");
  CHECK(std::string(method_name(Method::bip4)) == "bip4");
  CHECK(std::string(method_name(Method::star)) == "star");
}

TEST_CASE("labeled stream counts") {
  CHECK(labeled_graph_count(3) == 8);
  LabeledGraphStream st(3);
  int count = 0, connected = 0;
  while (!st.done()) {
    Graph g = st.next();
    count++;
    if (is_connected(g)) connected++;
  }
  CHECK(count == 8);
  CHECK(connected == 4);  // 3 paths + triangle
}

TEST_CASE("generators") {
  CHECK(gen_path(5).m() == 4);
  CHECK(gen_cycle(5).m() == 5);
  CHECK(gen_star(6).m() == 5);
  CHECK(gen_complete(5).m() == 10);
  CHECK(gen_complete_bipartite(2, 3).m() == 6);
  Graph r = gen_random_bounded_degree(20, 4, 42);
  CHECK(is_connected(r));
  CHECK(r.max_degree() <= 4);
  Graph r2 = gen_random_bounded_degree(20, 4, 42);
  CHECK(r.edges == r2.edges);
  Graph b = gen_random_bipartite(4, 5, 0.5, 7);
  CHECK(bipartition(b).has_value());
}

TEST_CASE("edge list round trip") {
  Graph g = gen_random_bounded_degree(9, 3, 5);
  Graph h = parse_edge_list(format_edge_list(g));
  CHECK(g.n == h.n);
  CHECK(g.edges == h.edges);
}

TEST_CASE("survey on three vertices") {
  SurveyResult r = survey(3);
  REQUIRE(r.rows.size() == 4);  // three labelings of P3, one triangle
  int stars = 0, subcubic = 0;
  for (auto& row : r.rows) {
    if (row.method == Method::star) stars++;
    if (row.method == Method::subcubic) subcubic++;
    CHECK(row.exact_known);
    CHECK(row.exact <= row.k);
    CHECK(row.within4);
  }
  CHECK(stars == 3);
  CHECK(subcubic == 1);
  CHECK(r.within4_count == 4);
  std::string tsv = survey_tsv(r);
  CHECK(tsv.find("graph-id") != std::string::npos);
  CHECK(tsv.find("within-4") != std::string::npos);
}

TEST_CASE("survey guard") {
  CHECK_THROWS_AS(survey(9), structural_error);
  CHECK_NOTHROW(survey(4, false));
}
