#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nsdw/bipartite.hpp"
#include "nsdw/degree_bounded.hpp"
#include "nsdw/dispatch.hpp"
#include "nsdw/general7.hpp"
#include "nsdw/generate.hpp"
#include "nsdw/graph.hpp"
#include "nsdw/oracle.hpp"
#include "nsdw/survey.hpp"
#include "nsdw/verify.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw nsdw::structural_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw nsdw::structural_error("cannot open " + path + " for writing");
  out << text;
}

// run a single-component construction across every component of g
template <class F>
nsdw::EdgeWeighting per_component(const nsdw::Graph& g, int k, F&& fn) {
  nsdw::EdgeWeighting out;
  out.k = k;
  out.w.assign(g.m(), 0);
  for (auto& comp : nsdw::components(g)) {
    if (comp.graph.m() == 0) continue;
    nsdw::EdgeWeighting wc = fn(comp.graph);
    for (int e = 0; e < comp.graph.m(); e++) out.w[comp.edge_to_parent[e]] = wc.w[e];
  }
  return out;
}

int cmd_weight(const std::string& input, const std::string& method,
               const std::string& output, bool want_trace) {
  nsdw::Graph g = nsdw::parse_edge_list(slurp(input));
  nsdw::EdgeWeighting w;
  int t_claim = 0;
  std::string label = method;
  if (method == "auto") {
    auto [ww, cert] = nsdw::auto_weight(g);
    w = ww;
    t_claim = cert.t;
    label = nsdw::method_name(cert.method);
    std::cerr << "parts:";
    for (auto& part : cert.parts)
      std::cerr << " " << nsdw::method_name(part.method) << "(n=" << part.vertices.size()
                << ",k=" << part.k << ",t=" << part.t << ")";
    std::cerr << "\n";
  } else if (method == "subcubic") {
    w = nsdw::weight_subcubic(g);
    t_claim = 2;
  } else if (method == "delta4") {
    w = nsdw::weight_max_deg4(g);
    t_claim = 2;
  } else if (method == "delta5") {
    w = nsdw::weight_max_deg5(g);
    t_claim = 2;
  } else if (method == "general7") {
    w = per_component(g, 7, [&](const nsdw::Graph& c) {
      nsdw::RunTrace trace;
      nsdw::EdgeWeighting wc = nsdw::run_general7(c, &trace);
      if (want_trace) std::cerr << nsdw::trace_lines(trace);
      return wc;
    });
    t_claim = 6;
  } else if (method == "bip6") {
    w = nsdw::bip_six(g);
    t_claim = 2;
  } else if (method == "bip4") {
    w = per_component(g, 4, [](const nsdw::Graph& c) { return nsdw::bip_four(c); });
    t_claim = 2;
  } else if (method == "exact") {
    int k = nsdw::exact_min_k(g, nsdw::ConstraintProfile::Mode::none, 0);
    auto found = nsdw::exists_weighting(g, nsdw::ConstraintProfile::plain(k));
    nsdw::ensure(found.has_value(), "scan returned an unusable k");
    w = *found;
    t_claim = 0;
  } else {
    throw nsdw::structural_error("unknown method " + method);
  }
  nsdw::ensure(nsdw::verify(g, w, w.k, t_claim), "construction failed verification");
  emit(output, nsdw::format_weighting(g, w));
  std::cerr << "method=" << label << " n=" << g.n << " m=" << g.m() << " k=" << w.k
            << " t=" << t_claim << "\n";
  return 0;
}

int cmd_verify(const std::string& input, const std::string& weights, int t, int d) {
  nsdw::Graph g = nsdw::parse_edge_list(slurp(input));
  nsdw::EdgeWeighting w = nsdw::parse_weighting(g, slurp(weights));
  nsdw::WeightingReport rep = nsdw::report(g, w, t, d);
  std::cout << nsdw::report_json(rep) << "\n";
  bool ok = rep.proper && rep.threshold_violations.empty() && rep.relaxed_ok;
  return ok ? 0 : 1;
}

int cmd_exact(const std::string& input, int d, int max_k, int edge_cap) {
  nsdw::Graph g = nsdw::parse_edge_list(slurp(input));
  if (d <= 0) d = std::max(1, g.max_degree() - 1);
  int k = nsdw::exact_min_k(g, nsdw::ConstraintProfile::Mode::relaxed, d, edge_cap, max_k);
  auto w = nsdw::exists_weighting(g, nsdw::ConstraintProfile::relaxed(k, d));
  nsdw::ensure(w.has_value(), "scan returned an unusable k");
  std::cout << "k " << k << "\n" << nsdw::format_weighting(g, *w);
  std::cerr << "exact minimum at d=" << d << ": " << k << "\n";
  return 0;
}

int cmd_survey(int n, bool force) {
  nsdw::SurveyResult res = nsdw::survey(n, force);
  std::cout << nsdw::survey_tsv(res);
  std::cerr << "graphs=" << res.total << " within-4=" << res.within4_count
            << " exact-skipped=" << res.exact_skipped << "\n";
  return 0;
}

int cmd_gen(const std::string& kind, int n, int n1, int n2, double p, int dmax,
            std::uint64_t seed) {
  using nsdw::Graph;
  if (kind == "all_labeled") {
    nsdw::require(n >= 2 && n <= 6, "all_labeled supports 2 <= n <= 6");
    nsdw::LabeledGraphStream stream(n);
    std::uint64_t i = 0;
    while (!stream.done()) {
      Graph g = stream.next();
      std::cout << "# graph " << i++ << "\n" << nsdw::format_edge_list(g);
    }
    return 0;
  }
  Graph g;
  if (kind == "path") g = nsdw::gen_path(n);
  else if (kind == "cycle") g = nsdw::gen_cycle(n);
  else if (kind == "star") g = nsdw::gen_star(n);
  else if (kind == "complete") g = nsdw::gen_complete(n);
  else if (kind == "complete_bipartite") g = nsdw::gen_complete_bipartite(n1, n2);
  else if (kind == "random_bounded_degree") g = nsdw::gen_random_bounded_degree(n, dmax, seed);
  else if (kind == "random_bipartite") g = nsdw::gen_random_bipartite(n1, n2, p, seed);
  else throw nsdw::structural_error("unknown kind " + kind);
  std::cout << nsdw::format_edge_list(g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"neighbour-sum-distinguishing edge weightings"};
  app.require_subcommand(1);

  auto* weight = app.add_subcommand("weight", "construct a weighting");
  std::string w_input, w_output;
  std::string w_method = "auto";
  bool w_trace = false;
  weight->add_option("--input", w_input, "edge list file ('-' for stdin)")->required();
  weight->add_option("--method", w_method,
                     "auto|subcubic|delta4|delta5|general7|bip6|bip4|exact");
  weight->add_option("--output", w_output, "output file (default stdout)");
  weight->add_flag("--trace", w_trace, "print per-step trace to stderr");

  auto* verify = app.add_subcommand("verify", "check a weighting");
  std::string v_input, v_weights;
  int v_t = 0, v_d = 0;
  verify->add_option("--input", v_input, "edge list file")->required();
  verify->add_option("--weights", v_weights, "weighting file")->required();
  verify->add_option("--t", v_t, "threshold degree (0 skips)");
  verify->add_option("--d", v_d, "relaxed class-degree bound (0 skips)");

  auto* exact = app.add_subcommand("exact", "exact minimum k by exhaustive search");
  std::string e_input;
  int e_d = 0, e_maxk = 32, e_cap = 16;
  exact->add_option("--input", e_input, "edge list file")->required();
  exact->add_option("--d", e_d, "relaxed bound (default max degree - 1)");
  exact->add_option("--max-k", e_maxk, "largest k to try");
  exact->add_option("--edge-cap", e_cap, "refuse graphs with more edges");

  auto* survey = app.add_subcommand("survey", "construction vs exact minimum, small graphs");
  int s_n = 6;
  bool s_force = false;
  survey->add_option("--n", s_n, "largest vertex count (default 6)");
  survey->add_flag("--force", s_force, "allow n > 8");

  auto* gen = app.add_subcommand("gen", "generate a graph");
  std::string g_kind;
  int g_n = 5, g_n1 = 3, g_n2 = 3, g_dmax = 3;
  double g_p = 0.5;
  std::uint64_t g_seed = 1;
  gen->add_option("--kind", g_kind,
                  "path|cycle|star|complete|complete_bipartite|"
                  "random_bounded_degree|random_bipartite|all_labeled")
      ->required();
  gen->add_option("--n", g_n, "vertex count");
  gen->add_option("--n1", g_n1, "left side size");
  gen->add_option("--n2", g_n2, "right side size");
  gen->add_option("--p", g_p, "edge probability");
  gen->add_option("--dmax", g_dmax, "degree bound");
  gen->add_option("--seed", g_seed, "random seed");

  try {
    app.parse(argc, argv);
    if (*weight) return cmd_weight(w_input, w_method, w_output, w_trace);
    if (*verify) return cmd_verify(v_input, v_weights, v_t, v_d);
    if (*exact) return cmd_exact(e_input, e_d, e_maxk, e_cap);
    if (*survey) return cmd_survey(s_n, s_force);
    if (*gen) return cmd_gen(g_kind, g_n, g_n1, g_n2, g_p, g_dmax, g_seed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const nsdw::structural_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
