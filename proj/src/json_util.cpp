#include "kt/json_util.hpp"

#include <fstream>
#include <sstream>

#include "kt/errors.hpp"

namespace kt {

std::string canonical_dump(const ojson& j) { return j.dump(2) + "\n"; }

ojson parse_json(const std::string& text) {
  ojson j = ojson::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError("invalid JSON");
  return j;
}

ojson load_json_file(const std::string& path) {
  return parse_json(read_text_file(path));
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open for writing: " + path);
  f << text;
  if (!f) throw Error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace kt
