#pragma once

#include <json.hpp>

#include "pcmrank/axioms.hpp"
#include "pcmrank/indices.hpp"
#include "pcmrank/reduce.hpp"

// JSON renderings of the report types. Indices are 1-based here, matching the
// human-readable output; matrices serialize as nested row arrays.

namespace pcmrank {

nlohmann::json matrix_to_json(const PairwiseComparisonMatrix& m);
nlohmann::json triad_to_json(const Triad& t);
nlohmann::json location_to_json(const TriadLocation& loc);
nlohmann::json diagnostic_to_json(const TriadDiagnostic& d);
nlohmann::json verdict_to_json(const AxiomVerdict& v);
nlohmann::json table_to_json(const IndependenceTable& t);
nlohmann::json trace_to_json(const CanonicalTrace& t);

}  // namespace pcmrank
