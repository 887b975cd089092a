#pragma once

#include <string>

#include <json.hpp>

#include "rsos/paths.hpp"
#include "rsos/qseries.hpp"

namespace rsos {

using Json = nlohmann::ordered_json;

// {"exp":"coef"} in ascending exponent order; throws std::logic_error on a fractional exponent
Json poly_to_json(const QuarterPoly& p);
QuarterPoly poly_from_json(const Json& j);

// {"p":..,"pp":..,"heights":[..],"boundary":{"c":..}} or boundary {"e":..,"f":..}
Json path_to_json(const Path& h);
// schema errors and path invariant violations throw std::invalid_argument
Path path_from_json(const Json& j);

Path load_path(const std::string& file);
std::string emit_path(const Path& h);

}  // namespace rsos
