#include "rathom/complex_io.hpp"

#include <algorithm>
#include <climits>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "rathom/error.hpp"

namespace rathom {

namespace {

using nlohmann::json;

// Offsets into already-validated JSON text, used only for error positions.
class Locator {
 public:
  explicit Locator(std::string_view text) : text_(text) {}

  std::size_t root() const { return skip_ws(0); }

  std::optional<std::size_t> member(std::size_t object, std::string_view key) const {
    std::size_t pos = skip_ws(object + 1);
    while (pos < text_.size() && text_[pos] == '"') {
      const std::size_t key_end = skip_string(pos);
      const std::string_view name = text_.substr(pos + 1, key_end - pos - 2);
      pos = skip_ws(skip_ws(key_end) + 1);
      if (name == key) return pos;
      pos = skip_ws(skip_value(pos));
      if (pos < text_.size() && text_[pos] == ',') pos = skip_ws(pos + 1);
    }
    return std::nullopt;
  }

  std::size_t element(std::size_t array, std::size_t index) const {
    std::size_t pos = skip_ws(array + 1);
    for (std::size_t i = 0; i < index; ++i) {
      pos = skip_ws(skip_value(pos));
      if (pos < text_.size() && text_[pos] == ',') pos = skip_ws(pos + 1);
    }
    return pos;
  }

  std::string where(std::size_t offset) const {
    offset = std::min(offset, text_.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
  }

 private:
  std::size_t skip_ws(std::size_t pos) const {
    while (pos < text_.size() && (text_[pos] == ' ' || text_[pos] == '\t' || text_[pos] == '\n' ||
                                  text_[pos] == '\r')) {
      ++pos;
    }
    return pos;
  }

  std::size_t skip_string(std::size_t pos) const {
    for (++pos; pos < text_.size(); ++pos) {
      if (text_[pos] == '\\') {
        ++pos;
      } else if (text_[pos] == '"') {
        return pos + 1;
      }
    }
    return pos;
  }

  std::size_t skip_value(std::size_t pos) const {
    if (pos >= text_.size()) return pos;
    if (text_[pos] == '"') return skip_string(pos);
    if (text_[pos] == '[' || text_[pos] == '{') {
      int depth = 0;
      while (pos < text_.size()) {
        const char c = text_[pos];
        if (c == '"') {
          pos = skip_string(pos);
          continue;
        }
        if (c == '[' || c == '{') ++depth;
        if (c == ']' || c == '}') {
          if (--depth == 0) return pos + 1;
        }
        ++pos;
      }
      return pos;
    }
    while (pos < text_.size() && std::string_view(",]} \t\r\n").find(text_[pos]) == std::string_view::npos) {
      ++pos;
    }
    return pos;
  }

  std::string_view text_;
};

[[noreturn]] void fail(const Locator& loc, std::size_t offset, const std::string& what) {
  throw Error(ErrorCode::parse, loc.where(offset) + ": " + what);
}

}  // namespace

SimplicialComplex parse_complex(std::string_view text) {
  const Locator loc(text);
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    fail(loc, e.byte == 0 ? 0 : e.byte - 1, "malformed document: " + std::string(e.what()));
  }

  const std::size_t root = loc.root();
  if (!doc.is_object()) fail(loc, root, "expected an object with key \"maximal_simplices\"");

  std::string name;
  for (const auto& [key, value] : doc.items()) {
    if (key == "name") {
      if (!value.is_string()) fail(loc, *loc.member(root, key), "\"name\" must be a string");
      name = value.get<std::string>();
    } else if (key != "maximal_simplices") {
      fail(loc, *loc.member(root, key) , "unknown key \"" + key + "\"");
    }
  }

  if (!doc.contains("maximal_simplices")) fail(loc, root, "missing key \"maximal_simplices\"");
  const json& list = doc["maximal_simplices"];
  const std::size_t list_pos = *loc.member(root, "maximal_simplices");
  if (!list.is_array()) fail(loc, list_pos, "\"maximal_simplices\" must be a list of lists");
  if (list.empty()) fail(loc, list_pos, "empty simplex list");

  std::vector<Simplex> simplices;
  simplices.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& entry = list[i];
    const std::size_t entry_pos = loc.element(list_pos, i);
    if (!entry.is_array()) fail(loc, entry_pos, "simplex #" + std::to_string(i) + " is not a list");
    if (entry.empty()) fail(loc, entry_pos, "simplex #" + std::to_string(i) + " is empty");
    Simplex s;
    for (std::size_t j = 0; j < entry.size(); ++j) {
      const json& v = entry[j];
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > INT_MAX) {
        fail(loc, loc.element(entry_pos, j),
             "vertex labels must be nonnegative integers (simplex #" + std::to_string(i) + ")");
      }
      s.push_back(static_cast<Vertex>(v.get<std::int64_t>()));
    }
    Simplex sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
      fail(loc, entry_pos,
           "duplicate vertex " + std::to_string(*dup) + " in simplex #" + std::to_string(i));
    }
    simplices.push_back(std::move(s));
  }

  try {
    return SimplicialComplex::from_simplices(std::move(simplices), std::move(name));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::capacity) throw;
    fail(loc, list_pos, e.what());
  }
}

SimplicialComplex read_complex_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open complex file '" + path.string() + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    SimplicialComplex c = parse_complex(text);
    return c.name().empty() ? c.renamed(path.stem().string()) : c;
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string format_complex(const SimplicialComplex& complex) {
  json doc;
  if (!complex.name().empty()) doc["name"] = complex.name();
  doc["maximal_simplices"] = complex.maximal_simplices();
  return doc.dump();
}

}  // namespace rathom
