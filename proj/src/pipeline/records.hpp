#pragma once

// JSON forms shared by the certificate writer and the grid-point cache.

#include <json.hpp>

#include "pipeline/pipeline.hpp"

namespace semilinear {

nlohmann::json interval_json(const Interval& x);
Interval interval_from_json(const nlohmann::json& j);

// Verified fields of a grid record; Newton data and lambda are excluded since
// they are not part of the cached computation.
nlohmann::json verified_json(const GridRecord& r);
void verified_from_json(const nlohmann::json& j, GridRecord& r);

nlohmann::json params_json(const ProblemParams& p);

}  // namespace semilinear
