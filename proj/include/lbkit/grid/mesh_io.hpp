#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "lbkit/error.hpp"
#include "lbkit/grid/mesh.hpp"

namespace lbkit {

// Line-delimited JSON: a header {"nx","ny","nz","max_level"} followed by one
// cell object per line, in id order.

inline void save_mesh(const AmrMesh& mesh, std::ostream& out) {
  const Ijk dims = mesh.base_dims();
  nlohmann::ordered_json header{{"nx", dims[0]}, {"ny", dims[1]}, {"nz", dims[2]},
                                {"max_level", mesh.max_level()}};
  out << header.dump() << '\n';
  for (const Cell& c : mesh.cells()) {
    nlohmann::ordered_json rec{{"id", c.id},         {"level", int(c.level)},
                               {"i", c.ijk[0]},      {"j", c.ijk[1]},
                               {"k", c.ijk[2]},      {"weight", c.weight},
                               {"boundary", c.is_boundary}};
    out << rec.dump() << '\n';
  }
  if (!out) throw InvalidArgument("failed to write mesh");
}

inline void save_mesh(const AmrMesh& mesh, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot open " + path.string() + " for writing");
  save_mesh(mesh, out);
}

namespace detail {

template <class T>
T json_field(const nlohmann::json& obj, const char* key, std::size_t line) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(line, std::string("missing field '") + key + "'");
  try {
    if constexpr (std::is_same_v<T, bool>) {
      if (!it->is_boolean()) throw ParseError(line, std::string("'") + key + "' must be a bool");
      return it->template get<bool>();
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!it->is_number()) throw ParseError(line, std::string("'") + key + "' must be a number");
      return it->template get<T>();
    } else {
      if (!it->is_number_unsigned()) {
        throw ParseError(line, std::string("'") + key + "' must be a non-negative integer");
      }
      const auto v = it->template get<std::uint64_t>();
      if (v > std::numeric_limits<T>::max()) {
        throw ParseError(line, std::string("'") + key + "' is out of range");
      }
      return T(v);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace detail

/// Throws ParseError (with the 1-based line) on malformed records and
/// ValidationError when the cells do not form a valid leaf cover.
inline AmrMesh load_mesh(std::istream& in) {
  std::string text;
  std::size_t line = 0;
  bool have_header = false;
  Ijk dims{};
  int max_level = 0;
  std::vector<Cell> cells;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(line, e.what());
    }
    if (!obj.is_object()) throw ParseError(line, "record is not an object");
    if (!have_header) {
      dims = {detail::json_field<std::uint32_t>(obj, "nx", line),
              detail::json_field<std::uint32_t>(obj, "ny", line),
              detail::json_field<std::uint32_t>(obj, "nz", line)};
      max_level = int(detail::json_field<std::uint8_t>(obj, "max_level", line));
      if (dims[0] == 0 || dims[1] == 0 || dims[2] == 0) {
        throw ParseError(line, "base dimensions must be positive");
      }
      have_header = true;
      continue;
    }
    Cell c;
    c.id = detail::json_field<std::uint64_t>(obj, "id", line);
    c.level = detail::json_field<std::uint8_t>(obj, "level", line);
    c.ijk = {detail::json_field<std::uint32_t>(obj, "i", line),
             detail::json_field<std::uint32_t>(obj, "j", line),
             detail::json_field<std::uint32_t>(obj, "k", line)};
    c.weight = detail::json_field<double>(obj, "weight", line);
    if (!(c.weight >= 0.0)) throw ParseError(line, "weight must be non-negative");
    c.is_boundary = detail::json_field<bool>(obj, "boundary", line);
    cells.push_back(c);
  }
  if (!have_header) throw ParseError(line, "missing header record");
  try {
    return AmrMesh(dims, max_level, std::move(cells));
  } catch (const InvalidArgument& e) {
    throw ValidationError(e.what());
  }
}

inline AmrMesh load_mesh(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFound("cannot open " + path.string());
  return load_mesh(in);
}

}  // namespace lbkit
