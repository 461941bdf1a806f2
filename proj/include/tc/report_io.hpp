#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tc/bounds.hpp"

namespace tc {

constexpr int report_schema_version = 1;

nlohmann::ordered_json report_to_json(const BoundsReport& rep);
BoundsReport report_from_json(const nlohmann::json& j);

// Stable "key: value" lines, one field per line.
std::string report_to_text(const BoundsReport& rep);

// Single table line per report, used by the grid command.
std::string report_table_row(const BoundsReport& rep);
std::string report_table_header();

} // namespace tc
