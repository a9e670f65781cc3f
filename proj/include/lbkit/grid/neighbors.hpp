#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "lbkit/error.hpp"
#include "lbkit/grid/mesh.hpp"

namespace lbkit {

/// Which cell's width sets the stencil reach between two leaves of different
/// levels. `coarser` is the symmetric closure of "v intersects u's box grown by
/// `radius` widths of u"; `finer` keeps only mutual pairs.
enum class StencilResolution { coarser, finer };

struct Stencil {
  int radius = 2;
  StencilResolution resolution = StencilResolution::coarser;
};

/// u and v (u != v) are neighbors iff their per-axis gap is below
/// radius * width, width chosen by `resolution`.
inline bool are_neighbors(const AmrMesh& mesh, std::size_t u, std::size_t v,
                          const Stencil& stencil = {}) {
  if (u == v) return false;
  const std::int64_t wu = mesh.width(mesh.cell(u).level);
  const std::int64_t wv = mesh.width(mesh.cell(v).level);
  const std::int64_t w = stencil.resolution == StencilResolution::coarser ? std::max(wu, wv)
                                                                          : std::min(wu, wv);
  return chebyshev_gap(mesh.box(u), mesh.box(v)) < stencil.radius * w;
}

/// Sorted neighbor indices of the leaf at `index`.
inline std::vector<std::uint32_t> neighbor_indices(const AmrMesh& mesh, std::size_t index,
                                                   const Stencil& stencil = {}) {
  std::vector<std::uint32_t> out;
  const int lu = mesh.cell(index).level;
  const FineBox mine = mesh.box(index);
  for (int l = 0; l <= mesh.max_level(); ++l) {
    const std::int64_t w = stencil.resolution == StencilResolution::coarser
                               ? mesh.width(std::min(l, lu))
                               : mesh.width(std::max(l, lu));
    mesh.visit_overlapping(mine.expanded(stencil.radius * w), l, l, [&](std::size_t v) {
      if (v != index) out.push_back(std::uint32_t(v));
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Neighbors of `cell` as cells. Throws NotFound if `cell` is not a leaf of `mesh`.
inline std::vector<Cell> neighbors(const AmrMesh& mesh, const Cell& cell,
                                   const Stencil& stencil = {}) {
  const auto index = mesh.index_of(cell.id);
  if (!index || mesh.cell(*index).level != cell.level || mesh.cell(*index).ijk != cell.ijk) {
    throw NotFound("cell " + std::to_string(cell.id) + " is not a leaf of the mesh");
  }
  std::vector<Cell> out;
  for (std::uint32_t v : neighbor_indices(mesh, *index, stencil)) out.push_back(mesh.cell(v));
  return out;
}

/// All neighbor lists in compressed-row form.
class NeighborTable {
 public:
  NeighborTable() = default;

  NeighborTable(const AmrMesh& mesh, const Stencil& stencil = {}) : stencil_(stencil) {
    offsets_.reserve(mesh.size() + 1);
    offsets_.push_back(0);
    for (std::size_t u = 0; u < mesh.size(); ++u) {
      const auto row = neighbor_indices(mesh, u, stencil);
      indices_.insert(indices_.end(), row.begin(), row.end());
      offsets_.push_back(indices_.size());
    }
    indices_.shrink_to_fit();
  }

  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }

  std::span<const std::uint32_t> operator[](std::size_t u) const {
    return {indices_.data() + offsets_[u], indices_.data() + offsets_[u + 1]};
  }

  std::size_t total_entries() const { return indices_.size(); }
  const Stencil& stencil() const { return stencil_; }

 private:
  Stencil stencil_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> indices_;
};

}  // namespace lbkit
