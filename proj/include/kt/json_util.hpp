#pragma once
#include <string>
#include <json.hpp>

namespace kt {

using ojson = nlohmann::ordered_json;

// Canonical serialization used for every document this library writes:
// insertion-ordered keys, two-space indent, trailing newline. Byte-stable.
std::string canonical_dump(const ojson& j);

ojson parse_json(const std::string& text);   // SchemaError on bad syntax
ojson load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace kt
