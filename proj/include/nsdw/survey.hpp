#pragma once
// Dispatcher-vs-exact sweep over small connected nice graphs. The final
// column records whether the exact minimum (monochromatic degree bound
// max_degree - 1) stays within 4; reported, never asserted.

#include <string>
#include <vector>

#include "nsdw/dispatch.hpp"
#include "nsdw/graph.hpp"

namespace nsdw {

struct SurveyRow {
  std::string id;  // g<n>-<edge mask in hex>
  int n = 0, m = 0, max_degree = 0;
  Method method;
  int k = 0;           // dispatcher certificate k
  bool exact_known = false;
  int exact = 0;       // minimum k under the relaxed bound, when computed
  bool within4 = false;
};

struct SurveyResult {
  std::vector<SurveyRow> rows;
  long long total = 0;
  long long within4_count = 0;
  long long exact_skipped = 0;  // graphs over the oracle edge cap
};

// Guard: n_max <= 8 unless overridden.
SurveyResult survey(int n_max, bool override_guard = false);
std::string survey_tsv(const SurveyResult& r);

}  // namespace nsdw
