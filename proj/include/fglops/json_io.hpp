#pragma once

// JSON schemas:
//
//   ring:    {"coeff": "Z" | "Z/2" | {"poly": {"base": "Z/2", "vars": ["a1","a2"]}},
//             "vars": [{"name":"t","trunc":5}, {"name":"z","trunc":3,"torsion":2}]}
//   series:  {"ring": <ring>, "terms": [{"exp":[1,0], "coef":"1"}, ...]}
//   report:  {"verdict": "unsatisfiable", "degree": 3, "truncation": {"z":3,"t":5},
//             "relations": [{"monomial":"z^2*t", "poly":"a1*a2+a3+a1"}, ...],
//             "failures": [{"candidate":[1,0,0], "monomial":"z*t^2"}, ...],
//             "witness": [1,0,0]}            // satisfiable only

#include <json.hpp>

#include "fglops/obstruction.hpp"

namespace fglops {

using Json = nlohmann::ordered_json;

Json coeff_ring_to_json(const RingDescriptor& ring);
RingPtr coeff_ring_from_json(const Json& j);

Json series_ring_to_json(const SeriesRing& ring);
SeriesRingPtr series_ring_from_json(const Json& j);

Json series_to_json(const Series& f);
/// Throws ParseError on schema violations.
Series series_from_json(const Json& j);

Json relations_to_json(const std::vector<Relation>& relations, const PowerOpContext& ctx);
Json report_to_json(const ObstructionReport& report, const PowerOpContext& ctx);

/// Reads back the documented fields.  Per-candidate values and the a1 = -1
/// spot check are not part of the schema and come back empty.
ObstructionReport report_from_json(const Json& j, const PowerOpContext& ctx);

} // namespace fglops
