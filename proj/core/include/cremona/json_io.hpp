#pragma once

#include <nlohmann/json.hpp>

#include "cremona/lattice.hpp"

// JSON forms. Multiplicities are always written expanded:
// {"degree":8,"mults":[4,4,4,2,2,2,1,1,1]}.
namespace cremona {

void to_json(nlohmann::json& j, const HomaloidalType& t);
void from_json(const nlohmann::json& j, HomaloidalType& t);

void to_json(nlohmann::json& j, const LatticeVector& v);

/// Row-major array of arrays.
void to_json(nlohmann::json& j, const IntegerMatrix& m);

/// Parses a JSON type object; ParseError on malformed input.
HomaloidalType homaloidal_type_from_json(const nlohmann::json& j);

}  // namespace cremona
