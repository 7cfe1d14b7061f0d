#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "buckleopt/geometry.hpp"

namespace buckleopt::detail {

using nlohmann::json;

json to_json_value(const DomainSpec& d);
DomainSpec domain_from_json_value(const json& j);

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Typed field access raising FormatError with the field name.
double require_number(const json& j, const char* key);
Vec2 require_point(const json& j, const char* key);

}  // namespace buckleopt::detail
