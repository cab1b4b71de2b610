#pragma once

#include "json.hpp"
#include "toric/sysfan.hpp"

#include <string>

/// Indented `key: value` rendering of a JSON value; object keys come out
/// sorted, so the text mirrors the JSON output line by line.
std::string render_text(const nlohmann::json& value);

/// One panel per chart; rank-2 systems only.
std::string svg_fan(const toric::SystemOfFans& s);
/// Hasse diagram of the orbit classes, one row per cone dimension.
std::string svg_poset(const toric::OrbitClassTable& t);
