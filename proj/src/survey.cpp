#include "nsdw/survey.hpp"

#include <algorithm>
#include <sstream>

#include "nsdw/dispatch.hpp"
#include "nsdw/generate.hpp"
#include "nsdw/oracle.hpp"

namespace nsdw {

SurveyResult survey(int n_max, bool override_guard) {
  require(n_max >= 2, "need n_max >= 2");
  if (!override_guard)
    require(n_max <= 8, "n_max > 8 takes very long; pass the override to force it");
  SurveyResult res;
  for (int n = 2; n <= n_max; n++) {
    Graph g;
    LabeledGraphStream stream(n);
    while (!stream.done()) {
      std::uint64_t mask = stream.next_mask++;
      assign_from_mask(g, n, mask);
      if (g.m() == 0 || !is_connected(g) || !is_nice(g)) continue;
      auto [w, cert] = auto_weight(g);
      SurveyRow row;
      {
        std::ostringstream id;
        id << "g" << n << "-0x" << std::hex << mask;
        row.id = id.str();
      }
      row.n = n;
      row.m = g.m();
      row.max_degree = g.max_degree();
      row.method = cert.method;
      row.k = cert.k;
      if (g.m() <= 16) {
        int d = std::max(1, g.max_degree() - 1);
        row.exact = exact_min_k(g, ConstraintProfile::Mode::relaxed, d);
        row.exact_known = true;
      } else {
        row.exact_known = false;
        row.exact = 0;
        res.exact_skipped++;
      }
      row.within4 = row.exact_known && row.exact <= 4;
      if (row.within4) res.within4_count++;
      res.total++;
      res.rows.push_back(std::move(row));
    }
  }
  return res;
}

std::string survey_tsv(const SurveyResult& res) {
  std::ostringstream out;
  out << "graph-id\tn\tm\tmax-deg\tmethod\tk\texact\twithin-4\n";
  for (auto& row : res.rows) {
    out << row.id << '\t' << row.n << '\t' << row.m << '\t' << row.max_degree << '\t'
        << method_name(row.method) << '\t' << row.k << '\t';
    if (row.exact_known) out << row.exact;
    else out << '-';
    out << '\t' << (row.within4 ? "yes" : "no") << '\n';
  }
  return out.str();
}

}  // namespace nsdw
