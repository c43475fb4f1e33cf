#include "pcmrank/json_io.hpp"

namespace pcmrank {

using nlohmann::json;

json matrix_to_json(const PairwiseComparisonMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json triad_to_json(const Triad& t) { return json::array({t.t1, t.t2, t.t3}); }

json location_to_json(const TriadLocation& loc) {
  return {{"i", loc.i + 1}, {"j", loc.j + 1}, {"k", loc.k + 1},
          {"triad", triad_to_json(loc.triad)}};
}

json diagnostic_to_json(const TriadDiagnostic& d) {
  json out = location_to_json(d.location);
  out["ratio_score"] = d.ratio_score;
  out["kii"] = d.kii_contribution;
  return out;
}

json verdict_to_json(const AxiomVerdict& v) {
  json out = {{"axiom", to_string(v.axiom)},
              {"ranking", v.ranking},
              {"outcome", v.passed ? "pass" : "violation"},
              {"trials", v.trials}};
  if (v.passed) {
    out["detail"] = "no violation found";
  } else if (v.witness) {
    json matrices = json::array();
    for (const auto& m : v.witness->matrices) matrices.push_back(matrix_to_json(m));
    out["witness"] = {{"matrices", std::move(matrices)},
                      {"scores", v.witness->scores},
                      {"note", v.witness->note}};
  }
  return out;
}

json table_to_json(const IndependenceTable& t) {
  json rows = json::array();
  for (std::size_t r = 0; r < t.rankings.size(); ++r) {
    json cells = json::array();
    for (std::size_t c = 0; c < t.axioms.size(); ++c) {
      cells.push_back(verdict_to_json(t.cells[r][c]));
    }
    rows.push_back({{"ranking", t.rankings[r]}, {"cells", std::move(cells)}});
  }
  json mismatches = json::array();
  for (const auto& [rid, axiom] : t.mismatches()) {
    mismatches.push_back({{"ranking", rid}, {"axiom", to_string(axiom)}});
  }
  return {{"rows", std::move(rows)},
          {"matches_expected", t.matches_expected()},
          {"mismatches", std::move(mismatches)}};
}

json trace_to_json(const CanonicalTrace& t) {
  json steps = json::array();
  if (t.step_red) {
    json red = location_to_json(*t.step_red);
    red["step"] = "red";
    red["ratio_score"] = triad_ratio_score(t.step_red->triad);
    steps.push_back(std::move(red));
  }
  auto triad_step = [](const char* name, const Triad& triad) {
    return json{{"step", name},
                {"triad", triad_to_json(triad)},
                {"ratio_score", triad_ratio_score(triad)}};
  };
  steps.push_back(triad_step("si", t.step_si));
  steps.push_back(triad_step("hte", t.step_hte));
  steps.push_back(triad_step("iip", t.step_iip));
  json out = {{"steps", std::move(steps)}, {"canonical_value", t.canonical_value}};
  if (t.source) out["source"] = matrix_to_json(*t.source);
  return out;
}

}  // namespace pcmrank
