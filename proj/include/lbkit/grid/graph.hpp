#pragma once

#include <cstdint>
#include <vector>

#include "lbkit/grid/mesh.hpp"
#include "lbkit/grid/neighbors.hpp"
#include "lbkit/hypergraph.hpp"

namespace lbkit {

/// Communication graph: one undirected edge per neighbor pair, weighted by
/// w_u + w_v. Boundary cells are not treated specially.
inline Hypergraph build_graph(const AmrMesh& mesh, const NeighborTable& nbrs) {
  Hypergraph g(mesh.weights());
  g.reserve_edges(nbrs.total_entries() / 2);
  for (std::uint32_t u = 0; u < mesh.size(); ++u) {
    for (std::uint32_t v : nbrs[u]) {
      if (v > u) g.add_edge(u, v, mesh.cell(u).weight + mesh.cell(v).weight);
    }
  }
  return g;
}

inline Hypergraph build_graph(const AmrMesh& mesh, const Stencil& stencil = {}) {
  return build_graph(mesh, NeighborTable(mesh, stencil));
}

/// One hyperedge per cell: the cell plus its neighbors, weighted by the cell's weight.
inline Hypergraph build_hypergraph(const AmrMesh& mesh, const NeighborTable& nbrs) {
  Hypergraph h(mesh.weights());
  h.reserve_pins(mesh.size(), nbrs.total_entries() + mesh.size());
  std::vector<std::uint32_t> pins;
  for (std::uint32_t u = 0; u < mesh.size(); ++u) {
    const auto row = nbrs[u];
    pins.clear();
    auto it = row.begin();
    while (it != row.end() && *it < u) pins.push_back(*it++);
    pins.push_back(u);
    pins.insert(pins.end(), it, row.end());
    h.add_hyperedge(pins, mesh.cell(u).weight);
  }
  return h;
}

inline Hypergraph build_hypergraph(const AmrMesh& mesh, const Stencil& stencil = {}) {
  return build_hypergraph(mesh, NeighborTable(mesh, stencil));
}

}  // namespace lbkit
