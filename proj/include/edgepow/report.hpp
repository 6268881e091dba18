#pragma once

// JSON and table renderings of engine results.

#include <string>
#include <vector>

#include "edgepow/ass_primes.hpp"
#include "edgepow/ears.hpp"
#include "edgepow/sbases.hpp"
#include "edgepow/socle_oracle.hpp"
#include "json.hpp"

namespace edgepow {

using Json = nlohmann::ordered_json;

Json to_json(VertexSet s);
Json to_json(const WeightVector& w);

/// {"ears":[[...],...],"weights":[...]}; components are listed in order.
Json to_json(const EarDecomposition& e);
/// Inverse of the above. A closed ear disjoint from everything before it
/// starts a new component. Throws InputError on malformed input.
EarDecomposition ear_decomposition_from_json(const Json& j);

Json to_json(const MuStarResult& r);
Json to_json(const AssResult& r);
Json to_json(const StabilityReport& r);
Json to_json(const SocleWitness& w);
Json to_json(const std::vector<SBase>& bases);

/// P_F as (x1,x2,...).
std::string prime_notation(VertexSet f);

std::string to_table(const AssResult& r);
std::string to_table(const StabilityReport& r);
std::string to_table(const MuStarResult& r);
std::string to_table(const std::vector<SBase>& bases);

}  // namespace edgepow
