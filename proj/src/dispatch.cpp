#include "nsdw/dispatch.hpp"

#include <algorithm>

#include "nsdw/bipartite.hpp"
#include "nsdw/degree_bounded.hpp"
#include "nsdw/general7.hpp"
#include "nsdw/verify.hpp"

namespace nsdw {

const char* method_name(Method m) {
  switch (m) {
    case Method::subcubic: return "subcubic";
    case Method::delta4: return "delta4";
    case Method::delta5: return "delta5";
    case Method::general7: return "general7";
    case Method::bip6: return "bip6";
    case Method::bip4: return "bip4";
    case Method::star: return "star";
    case Method::oracle: return "oracle";
  }
  return "?";
}

EdgeWeighting weight_star(const Graph& g) {
  require(is_star(g), "graph is not a star");
  EdgeWeighting w;
  w.k = 2;
  w.w.assign(g.m(), 1);
  w.w[0] = 2;
  return w;
}

namespace {

struct Picked {
  Method method;
  EdgeWeighting w;
  int t;
};

Picked weight_component(const Graph& g) {
  if (is_star(g)) return {Method::star, weight_star(g), 2};
  auto side = bipartition(g);
  if (side.has_value()) {
    int count0 = 0;
    for (int v = 0; v < g.n; v++)
      if ((*side)[v] == 0) count0++;
    if (count0 % 2 == 0 || (g.n - count0) % 2 == 0)
      return {Method::bip4, bip_four(g), 2};
    return {Method::bip6, bip_six(g), 2};
  }
  int dmax = g.max_degree();
  if (dmax <= 3) return {Method::subcubic, weight_subcubic(g), 2};
  if (dmax == 4) return {Method::delta4, weight_max_deg4(g), 2};
  if (dmax == 5) return {Method::delta5, weight_max_deg5(g), 2};
  return {Method::general7, run_general7(g), 6};
}

}  // namespace

std::pair<EdgeWeighting, DispatchCertificate> auto_weight(const Graph& g) {
  require(is_nice(g), "graph has a bare-edge component");
  EdgeWeighting out;
  out.w.assign(g.m(), 0);
  DispatchCertificate cert;
  cert.method = Method::star;
  cert.k = 2;
  cert.t = 2;
  for (auto& comp : components(g)) {
    if (comp.graph.m() == 0) continue;
    Picked p = weight_component(comp.graph);
    for (int e = 0; e < comp.graph.m(); e++) out.w[comp.edge_to_parent[e]] = p.w.w[e];
    cert.parts.push_back({comp.to_parent, p.method, p.w.k, p.t});
  }
  cert.k = 2;
  cert.t = 2;
  for (auto& part : cert.parts) {
    cert.k = std::max(cert.k, part.k);
    cert.t = std::max(cert.t, part.t);
  }
  for (auto& part : cert.parts)
    if (part.k == cert.k && part.t == cert.t) {
      cert.method = part.method;
      break;
    }
  out.k = cert.k;
  ensure(verify(g, out, cert.k, cert.t), "dispatcher produced a bad weighting");
  return {out, cert};
}

}  // namespace nsdw
