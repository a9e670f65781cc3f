#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "lbkit/error.hpp"
#include "lbkit/grid/mesh.hpp"
#include "lbkit/sfc/curve_table.hpp"

namespace lbkit {

/// Part index per cell index (mesh order, i.e. ascending cell id) or per item.
struct PartitionAssignment {
  std::uint32_t n_parts = 1;
  std::vector<std::uint32_t> part;

  std::size_t size() const { return part.size(); }
  std::uint32_t operator[](std::size_t i) const { return part[i]; }

  void validate(std::size_t n_items) const {
    if (n_parts < 1) throw ValidationError("assignment needs at least one part");
    if (part.size() != n_items) {
      throw ValidationError("assignment covers " + std::to_string(part.size()) + " of " +
                            std::to_string(n_items) + " items");
    }
    for (std::uint32_t p : part) {
      if (p >= n_parts) throw ValidationError("part index " + std::to_string(p) + " out of range");
    }
  }

  std::vector<double> part_weights(std::span<const double> weights) const {
    std::vector<double> w(n_parts, 0.0);
    for (std::size_t i = 0; i < part.size(); ++i) w[part[i]] += weights[i];
    return w;
  }

  friend bool operator==(const PartitionAssignment&, const PartitionAssignment&) = default;
};

struct PartitionerParams {
  /// Imbalance tolerance on the final partition.
  double delta = 0.02;
  /// Multilevel: coarsening stops at this many vertices.
  std::size_t stop_size = 100;
  /// Refinement passes (HSFC bin refinement, FM).
  int pass_limit = 20;
  std::uint64_t seed = 0;
  /// HSFC curve: a catalogue name or "morton".
  std::string curve = "beta";
  /// HSFC key order; 0 picks the smallest order that resolves every cell.
  int order = 0;
  AxisPermutation axes{};
  /// RCB: only cut between distinct coordinate planes.
  bool rectilinear = false;
  std::function<void(const std::string&)> on_warning;

  void validate() const {
    if (!(delta > 0.0)) throw InvalidArgument("delta must be > 0");
    if (stop_size < 2) throw InvalidArgument("stop size must be >= 2");
    if (pass_limit < 0) throw InvalidArgument("pass limit must be >= 0");
    if (order < 0) throw InvalidArgument("curve order must be >= 0");
  }

  void warn(const std::string& message) const {
    if (on_warning) on_warning(message);
  }
};

/// CSV `cell_id,part` with header, one row per cell in mesh order.
inline void write_assignment(const AmrMesh& mesh, const PartitionAssignment& a, std::ostream& out) {
  a.validate(mesh.size());
  out << "cell_id,part\n";
  for (std::size_t c = 0; c < mesh.size(); ++c) out << mesh.cell(c).id << ',' << a.part[c] << '\n';
}

/// Reads an assignment CSV; `n_parts` is one more than the largest part seen
/// unless given.
inline PartitionAssignment read_assignment(const AmrMesh& mesh, std::istream& in,
                                           std::uint32_t n_parts = 0) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "cell_id,part") throw ParseError(1, "expected header 'cell_id,part'");
  PartitionAssignment a;
  a.part.assign(mesh.size(), 0);
  std::vector<char> seen(mesh.size(), 0);
  std::uint32_t max_part = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::uint64_t id = 0;
    std::uint64_t part = 0;
    char comma = 0;
    if (!(row >> id >> comma >> part) || comma != ',' || !row.eof() || part > UINT32_MAX) {
      throw ParseError(lineno, "malformed row '" + line + "'");
    }
    const auto index = mesh.index_of(id);
    if (!index) throw ParseError(lineno, "unknown cell id " + std::to_string(id));
    if (seen[*index]) throw ParseError(lineno, "duplicate cell id " + std::to_string(id));
    seen[*index] = 1;
    a.part[*index] = std::uint32_t(part);
    max_part = std::max(max_part, std::uint32_t(part));
  }
  for (std::size_t c = 0; c < mesh.size(); ++c) {
    if (!seen[c]) throw ValidationError("cell " + std::to_string(mesh.cell(c).id) + " is unassigned");
  }
  a.n_parts = n_parts ? n_parts : max_part + 1;
  a.validate(mesh.size());
  return a;
}

}  // namespace lbkit
