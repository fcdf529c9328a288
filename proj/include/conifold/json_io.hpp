#pragma once

#include <string>

#include "json.hpp"

#include "conifold/cohomology.hpp"
#include "conifold/exocurve_atlas.hpp"
#include "conifold/resolution_graph.hpp"
#include "conifold/singular_locus.hpp"
#include "conifold/stratifier.hpp"

namespace conifold {

using Json = nlohmann::ordered_json;

Json to_json(const TransversalityReport& report);
// Coordinates are parsed in Q(zeta_k) with k = report["zeta_order"].
TransversalityReport report_from_json(const Json& j);

Json to_json(const StratifiedVariety& v);
Json to_json(const Atlas& atlas);
Json to_json(const GradedSpace& h);

// {"base_dims": [7 ints], "base_hodge": [[p,q,h],...], "n": int,
//  "classes": [[1-based node indices],...], "smooth_dims": [7 ints]}
ConifoldData conifold_data_from_json(const Json& j);
Json to_json(const ConifoldData& data);

Json to_json(const CohomologyReport& report, const KahlerReport& kahler);
Json to_json(const TransitionGraph& g);

// Parses text, mapping parse failures to InvalidArgument.
Json parse_json(const std::string& text);

}  // namespace conifold
