#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

namespace ptm::util {

/// Minimal TOML reader covering the config surface this project uses:
/// comments, [tables], [[arrays of tables]], dotted table headers, and
/// key = value with strings, integers, floats, booleans, and flat arrays.
/// The document is returned as a JSON tree (tables become objects).
nlohmann::ordered_json parse_toml(const std::string& text,
                                  const std::string& source_name = "<toml>");

nlohmann::ordered_json load_toml(const std::filesystem::path& path);

}  // namespace ptm::util
