#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lbkit/error.hpp"
#include "lbkit/geometry.hpp"

namespace lbkit {

inline constexpr int kMaxLevel = 12;
inline constexpr std::uint32_t kMaxFineExtent = 1u << 20;

struct Cell {
  std::uint64_t id = 0;
  std::uint8_t level = 0;
  Ijk ijk{};
  double weight = 1.0;
  bool is_boundary = false;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Canonical id of the octree node at (level, ijk). Ordering by key is
/// (level, i, j, k) lexicographic.
constexpr std::uint64_t cell_key(int level, const Ijk& ijk) {
  return (std::uint64_t(level) << 60) | (std::uint64_t(ijk[0]) << 40) |
         (std::uint64_t(ijk[1]) << 20) | std::uint64_t(ijk[2]);
}

namespace detail {

// Pointer-free octree over the leaves. Nodes [0, nx*ny*nz) are the base cells.
class OctreeIndex {
 public:
  struct Node {
    std::int32_t first_child = -1;
    std::int32_t leaf = -1;
  };

  OctreeIndex(const Ijk& base, int max_level, std::span<const Cell> cells)
      : base_(base), max_level_(max_level) {
    nodes_.resize(std::size_t(base[0]) * base[1] * base[2]);
    std::uint64_t volume = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const Cell& cell = cells[c];
      const int shift = cell.level;
      Ijk root{cell.ijk[0] >> shift, cell.ijk[1] >> shift, cell.ijk[2] >> shift};
      std::int64_t node = base_index(root);
      for (int l = 1; l <= cell.level; ++l) {
        if (nodes_[node].leaf >= 0) overlap(cell);
        if (nodes_[node].first_child < 0) {
          nodes_[node].first_child = static_cast<std::int32_t>(nodes_.size());
          nodes_.resize(nodes_.size() + 8);
        }
        const int b = cell.level - l;
        const int child = int((cell.ijk[0] >> b) & 1) << 2 |
                          int((cell.ijk[1] >> b) & 1) << 1 | int((cell.ijk[2] >> b) & 1);
        node = nodes_[node].first_child + child;
      }
      if (nodes_[node].leaf >= 0 || nodes_[node].first_child >= 0) overlap(cell);
      nodes_[node].leaf = static_cast<std::int32_t>(c);
      volume += std::uint64_t(1) << (3 * (max_level - cell.level));
    }
    const std::uint64_t expected = std::uint64_t(base[0]) * base[1] * base[2]
                                   << (3 * max_level);
    if (volume != expected) {
      throw ValidationError("leaf cover violated: leaves cover " + std::to_string(volume) +
                            " of " + std::to_string(expected) + " finest units");
    }
  }

  /// Visits every leaf at a level in [min_level, max_level] whose box overlaps `box`.
  template <class Visit>
  void visit(const FineBox& box, int min_level, int max_level, std::span<const Cell> cells,
             Visit&& visit_leaf) const {
    const std::int64_t w0 = std::int64_t(1) << max_level_;
    std::array<std::int64_t, 3> lo{}, hi{};
    for (int d = 0; d < 3; ++d) {
      lo[d] = std::max<std::int64_t>(0, floor_div(box.lo[d], w0));
      hi[d] = std::min<std::int64_t>(base_[d], floor_div(box.hi[d] - 1, w0) + 1);
      if (lo[d] >= hi[d]) return;
    }
    for (std::int64_t i = lo[0]; i < hi[0]; ++i)
      for (std::int64_t j = lo[1]; j < hi[1]; ++j)
        for (std::int64_t k = lo[2]; k < hi[2]; ++k) {
          const Ijk root{std::uint32_t(i), std::uint32_t(j), std::uint32_t(k)};
          descend(base_index(root), 0, {i, j, k}, box, min_level, max_level, cells, visit_leaf);
        }
  }

  std::optional<std::size_t> find(int level, const Ijk& ijk) const {
    for (int d = 0; d < 3; ++d) {
      if ((ijk[d] >> level) >= base_[d]) return std::nullopt;
    }
    std::int64_t node =
        base_index({ijk[0] >> level, ijk[1] >> level, ijk[2] >> level});
    for (int l = 1; l <= level; ++l) {
      if (nodes_[node].first_child < 0) return std::nullopt;
      const int b = level - l;
      const int child = int((ijk[0] >> b) & 1) << 2 | int((ijk[1] >> b) & 1) << 1 |
                        int((ijk[2] >> b) & 1);
      node = nodes_[node].first_child + child;
    }
    if (nodes_[node].leaf < 0) return std::nullopt;
    return std::size_t(nodes_[node].leaf);
  }

 private:
  static std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    return a >= 0 ? a / b : -((-a + b - 1) / b);
  }

  std::int64_t base_index(const Ijk& ijk) const {
    return (std::int64_t(ijk[0]) * base_[1] + ijk[1]) * base_[2] + ijk[2];
  }

  [[noreturn]] static void overlap(const Cell& cell) {
    throw ValidationError("leaf cover violated: cell " + std::to_string(cell.id) +
                          " overlaps another leaf");
  }

  template <class Visit>
  void descend(std::int64_t node, int level, std::array<std::int64_t, 3> ijk,
               const FineBox& box, int min_level, int max_level,
               std::span<const Cell> cells, Visit& visit_leaf) const {
    const std::int64_t w = std::int64_t(1) << (max_level_ - level);
    FineBox mine;
    for (int d = 0; d < 3; ++d) {
      mine.lo[d] = ijk[d] * w;
      mine.hi[d] = mine.lo[d] + w;
    }
    if (!mine.overlaps(box)) return;
    const Node& n = nodes_[node];
    if (n.leaf >= 0) {
      if (level >= min_level && level <= max_level) visit_leaf(std::size_t(n.leaf));
      return;
    }
    if (n.first_child < 0 || level >= max_level) return;
    for (int c = 0; c < 8; ++c) {
      descend(n.first_child + c, level + 1,
              {2 * ijk[0] + ((c >> 2) & 1), 2 * ijk[1] + ((c >> 1) & 1), 2 * ijk[2] + (c & 1)},
              box, min_level, max_level, cells, visit_leaf);
    }
  }

  Ijk base_;
  int max_level_;
  std::vector<Node> nodes_;
};

}  // namespace detail

/// Octree-refined cover of an nx*ny*nz base grid by leaf cells.
///
/// Cells are kept sorted by id. Construction validates every invariant
/// (ranges, unique ids, non-negative weights, exact leaf cover) and throws
/// ValidationError on the first violation. Instances are immutable.
class AmrMesh {
 public:
  AmrMesh(Ijk base_dims, int max_level, std::vector<Cell> cells)
      : base_(base_dims), max_level_(max_level), cells_(std::move(cells)) {
    for (int d = 0; d < 3; ++d) {
      if (base_[d] < 1) throw InvalidArgument("base dimensions must be positive");
    }
    if (max_level_ < 0 || max_level_ > kMaxLevel) {
      throw InvalidArgument("max_level must be in [0, " + std::to_string(kMaxLevel) + "]");
    }
    for (int d = 0; d < 3; ++d) {
      if ((std::uint64_t(base_[d]) << max_level_) > kMaxFineExtent) {
        throw InvalidArgument("grid too large for 20-bit fine coordinates");
      }
    }
    std::sort(cells_.begin(), cells_.end(),
              [](const Cell& a, const Cell& b) { return a.id < b.id; });
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      const Cell& cell = cells_[c];
      if (c > 0 && cells_[c - 1].id == cell.id) {
        throw ValidationError("duplicate cell id " + std::to_string(cell.id));
      }
      if (cell.level > max_level_) {
        throw ValidationError("cell " + std::to_string(cell.id) + " exceeds max_level");
      }
      for (int d = 0; d < 3; ++d) {
        if (cell.ijk[d] >= (base_[d] << cell.level)) {
          throw ValidationError("cell " + std::to_string(cell.id) + " lies outside the domain");
        }
      }
      if (!(cell.weight >= 0.0)) {
        throw ValidationError("cell " + std::to_string(cell.id) + " has a negative weight");
      }
    }
    index_ = std::make_shared<const detail::OctreeIndex>(base_, max_level_, cells_);
  }

  const Ijk& base_dims() const { return base_; }
  int max_level() const { return max_level_; }
  std::size_t size() const { return cells_.size(); }
  std::span<const Cell> cells() const { return cells_; }
  const Cell& cell(std::size_t index) const { return cells_[index]; }

  std::optional<std::size_t> index_of(std::uint64_t id) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), id,
                               [](const Cell& c, std::uint64_t v) { return c.id < v; });
    if (it == cells_.end() || it->id != id) return std::nullopt;
    return std::size_t(it - cells_.begin());
  }

  /// Leaf at exactly (level, ijk), if any.
  std::optional<std::size_t> find(int level, const Ijk& ijk) const {
    if (level < 0 || level > max_level_) return std::nullopt;
    return index_->find(level, ijk);
  }

  /// Edge length of a level-`level` cell in finest units.
  std::int64_t width(int level) const { return std::int64_t(1) << (max_level_ - level); }

  Ijk fine_dims() const {
    return {base_[0] << max_level_, base_[1] << max_level_, base_[2] << max_level_};
  }

  FineBox box(std::size_t index) const {
    const Cell& c = cells_[index];
    const std::int64_t w = width(c.level);
    FineBox b;
    for (int d = 0; d < 3; ++d) {
      b.lo[d] = std::int64_t(c.ijk[d]) * w;
      b.hi[d] = b.lo[d] + w;
    }
    return b;
  }

  /// Cell center in base-level units.
  Vec3 center(std::size_t index) const { return center_of(cells_[index]); }

  static Vec3 center_of(const Cell& c) {
    const double s = 1.0 / double(std::uint64_t(1) << c.level);
    return {(c.ijk[0] + 0.5) * s, (c.ijk[1] + 0.5) * s, (c.ijk[2] + 0.5) * s};
  }

  double total_weight() const {
    double w = 0.0;
    for (const Cell& c : cells_) w += c.weight;
    return w;
  }

  std::vector<double> weights() const {
    std::vector<double> w(cells_.size());
    for (std::size_t c = 0; c < cells_.size(); ++c) w[c] = cells_[c].weight;
    return w;
  }

  /// Leaves with level in [min_level, max_level] overlapping `box` (finest units).
  template <class Visit>
  void visit_overlapping(const FineBox& box, int min_level, int max_level, Visit&& visit) const {
    index_->visit(box, min_level, max_level, cells_, visit);
  }

  /// Same geometry with new per-cell weights and boundary flags.
  AmrMesh reweighted(std::span<const double> weights, std::span<const bool> boundary) const {
    if (weights.size() != cells_.size() || boundary.size() != cells_.size()) {
      throw InvalidArgument("weight/boundary arrays must match the cell count");
    }
    AmrMesh copy = *this;
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      if (!(weights[c] >= 0.0)) throw InvalidArgument("weights must be non-negative");
      copy.cells_[c].weight = weights[c];
      copy.cells_[c].is_boundary = boundary[c];
    }
    return copy;
  }

  std::vector<std::size_t> level_histogram() const {
    std::vector<std::size_t> h(std::size_t(max_level_) + 1, 0);
    for (const Cell& c : cells_) ++h[c.level];
    return h;
  }

  friend bool operator==(const AmrMesh& a, const AmrMesh& b) {
    return a.base_ == b.base_ && a.max_level_ == b.max_level_ && a.cells_ == b.cells_;
  }

 private:
  Ijk base_;
  int max_level_;
  std::vector<Cell> cells_;
  std::shared_ptr<const detail::OctreeIndex> index_;
};

/// Mesh whose leaves are the nx*ny*nz level-0 cells, all with weight 1.
inline AmrMesh build_uniform(int nx, int ny, int nz, int max_level) {
  if (nx < 1 || ny < 1 || nz < 1) throw InvalidArgument("dimensions must be >= 1");
  if (max_level < 0) throw InvalidArgument("max_level must be >= 0");
  std::vector<Cell> cells;
  cells.reserve(std::size_t(nx) * ny * nz);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      for (int k = 0; k < nz; ++k) {
        const Ijk ijk{std::uint32_t(i), std::uint32_t(j), std::uint32_t(k)};
        cells.push_back(Cell{cell_key(0, ijk), 0, ijk, 1.0, false});
      }
  return AmrMesh({std::uint32_t(nx), std::uint32_t(ny), std::uint32_t(nz)}, max_level,
                 std::move(cells));
}

/// Splits every leaf whose center (base units) satisfies `region` into its
/// eight children, repeatedly, until no leaf below `target_level` qualifies.
/// Children inherit weight and boundary flag; ids follow cell_key.
template <class Region>
AmrMesh refine(const AmrMesh& mesh, Region&& region, int target_level) {
  if (target_level > mesh.max_level()) {
    throw InvalidArgument("target_level " + std::to_string(target_level) +
                          " exceeds max_level " + std::to_string(mesh.max_level()));
  }
  std::vector<Cell> out;
  out.reserve(mesh.size());
  std::vector<Cell> stack;
  for (const Cell& leaf : mesh.cells()) {
    stack.push_back(leaf);
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      if (c.level < target_level && region(AmrMesh::center_of(c))) {
        for (int child = 7; child >= 0; --child) {
          Cell k = c;
          k.level = std::uint8_t(c.level + 1);
          k.ijk = {2 * c.ijk[0] + ((child >> 2) & 1), 2 * c.ijk[1] + ((child >> 1) & 1),
                   2 * c.ijk[2] + (child & 1)};
          k.id = cell_key(k.level, k.ijk);
          stack.push_back(k);
        }
      } else {
        out.push_back(c);
      }
    }
  }
  return AmrMesh(mesh.base_dims(), mesh.max_level(), std::move(out));
}

}  // namespace lbkit
