#pragma once

#include <json.hpp>

#include "cayley/framework.hpp"

namespace cayley {

nlohmann::json to_json(const FuzzReport& r);
nlohmann::json to_json(const LinearityReport& r);
nlohmann::json to_json(const std::vector<QuadraticStat>& rows, GroupId g);
nlohmann::json to_json(const ProbeReport& r);
nlohmann::json to_json(const std::vector<NonQgRow>& rows);

// Inverse of to_json for linearity reports; throws nlohmann::json exceptions
// on schema mismatch.
LinearityReport linearity_from_json(const nlohmann::json& j);

}  // namespace cayley
