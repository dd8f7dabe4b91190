#pragma once

#include "torelli/braid.hpp"
#include "torelli/mcg.hpp"

#include <json.hpp>

#include <string>

namespace torelli {

// {"genus": 2, "boundary": "admissible", "images": {"x1": "x1", ...},
//  "inverse_images": {...}}   (inverse_images optional)
FreeEndo endo_from_json(const nlohmann::json& j);
nlohmann::json endo_to_json(const FreeEndo& f);

// Either {"strands": 3, "word": "A12 A13^-1", "framings": [0,0,0]} or
// {"strands": 3, "longitudes": [...], "inverse_longitudes": [...],
//  "framings": [...]}; framings and inverse longitudes optional.
PureBraid braid_from_json(const nlohmann::json& j);
nlohmann::json braid_to_json(const PureBraid& a);

// Reads either a file path or, when the argument starts with '{', a JSON
// literal.
nlohmann::json load_json_argument(const std::string& arg);

} // namespace torelli
