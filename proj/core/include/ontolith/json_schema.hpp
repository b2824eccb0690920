#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ontolith::jsonschema {

// Minimal JSON-schema checker covering the subset the pipelines emit:
// type (string or array of strings), properties, required, items, enum,
// minItems/maxItems, minLength, minimum/maximum, additionalProperties (bool).
// Returns one message per violation; empty means the instance conforms.
std::vector<std::string> check(const nlohmann::json& instance, const nlohmann::json& schema);

// True when `schema` is itself a structurally plausible schema object.
bool valid_schema(const nlohmann::json& schema);

} // namespace ontolith::jsonschema
