#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "lbkit/error.hpp"
#include "lbkit/grid/graph.hpp"
#include "lbkit/grid/mesh.hpp"
#include "lbkit/grid/neighbors.hpp"
#include "lbkit/hypergraph.hpp"
#include "lbkit/partition/assignment.hpp"

namespace lbkit {

/// max_i(w_i) / (W / n) - 1 over all n parts, empty ones included.
inline double epsilon(const PartitionAssignment& a, std::span<const double> weights) {
  a.validate(weights.size());
  double total = 0.0;
  for (double w : weights) total += w;
  if (!(total > 0.0)) throw UndefinedMetric("imbalance is undefined for zero total weight");
  const auto load = a.part_weights(weights);
  return *std::max_element(load.begin(), load.end()) / (total / double(a.n_parts)) - 1.0;
}

/// Sum of pairwise-edge weights whose endpoints lie in different parts.
inline double edge_cut(const Hypergraph& graph, const PartitionAssignment& a) {
  a.validate(graph.num_vertices());
  double cut = 0.0;
  for (const Edge& e : graph.edges()) {
    if (a.part[e.u] != a.part[e.v]) cut += e.weight;
  }
  return cut;
}

namespace detail {

/// Calls f(e, lambda_e) for every hyperedge.
template <class F>
void for_each_connectivity(const Hypergraph& hg, const PartitionAssignment& a, F&& f) {
  a.validate(hg.num_vertices());
  std::vector<std::size_t> stamp(a.n_parts, std::size_t(-1));
  for (std::size_t e = 0; e < hg.num_hyperedges(); ++e) {
    std::size_t lambda = 0;
    for (std::uint32_t p : hg.pins(e)) {
      if (stamp[a.part[p]] != e) {
        stamp[a.part[p]] = e;
        ++lambda;
      }
    }
    f(e, lambda);
  }
}

}  // namespace detail

/// Sum over hyperedges of w_e * (lambda_e - 1).
inline double connectivity_cut(const Hypergraph& hg, const PartitionAssignment& a) {
  double cut = 0.0;
  detail::for_each_connectivity(hg, a, [&](std::size_t e, std::size_t lambda) {
    cut += hg.hyperedge_weight(e) * double(lambda - 1);
  });
  return cut;
}

/// Sum of weights of hyperedges spanning more than one part.
inline double cut_net(const Hypergraph& hg, const PartitionAssignment& a) {
  double cut = 0.0;
  detail::for_each_connectivity(hg, a, [&](std::size_t e, std::size_t lambda) {
    if (lambda > 1) cut += hg.hyperedge_weight(e);
  });
  return cut;
}

struct GhostStats {
  std::size_t cells = 0;
  double weight = 0.0;

  friend bool operator==(const GhostStats&, const GhostStats&) = default;
};

/// Per part: the distinct cells outside it that neighbor one of its cells.
inline std::vector<GhostStats> ghost_stats(const AmrMesh& mesh, const PartitionAssignment& a,
                                           const NeighborTable& nbrs) {
  a.validate(mesh.size());
  std::vector<std::uint32_t> order(mesh.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t x, std::uint32_t y) { return a.part[x] < a.part[y]; });
  std::vector<std::uint32_t> mark(mesh.size(), std::uint32_t(-1));
  std::vector<std::vector<std::uint32_t>> ghosts(a.n_parts);
  for (std::uint32_t u : order) {
    const std::uint32_t p = a.part[u];
    for (std::uint32_t v : nbrs[u]) {
      if (a.part[v] != p && mark[v] != p) {
        mark[v] = p;
        ghosts[p].push_back(v);
      }
    }
  }
  std::vector<GhostStats> out(a.n_parts);
  for (std::uint32_t p = 0; p < a.n_parts; ++p) {
    // Sum in cell order so the result does not depend on traversal order.
    std::sort(ghosts[p].begin(), ghosts[p].end());
    out[p].cells = ghosts[p].size();
    for (std::uint32_t v : ghosts[p]) out[p].weight += mesh.cell(v).weight;
  }
  return out;
}

inline std::vector<GhostStats> ghost_stats(const AmrMesh& mesh, const PartitionAssignment& a,
                                           const Stencil& stencil = {}) {
  return ghost_stats(mesh, a, NeighborTable(mesh, stencil));
}

struct PartStats {
  double weight = 0.0;
  std::size_t cells = 0;
  std::size_t ghost_cells = 0;
  double ghost_weight = 0.0;
};

struct MetricsReport {
  std::uint32_t n_parts = 0;
  double total_weight = 0.0;
  std::size_t total_cells = 0;
  double epsilon = 0.0;
  double edge_cut = 0.0;
  double connectivity_cut = 0.0;
  double cut_net = 0.0;
  std::vector<PartStats> per_part;

  double max_ghost_weight() const {
    double m = 0.0;
    for (const PartStats& p : per_part) m = std::max(m, p.ghost_weight);
    return m;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["n_parts"] = n_parts;
    j["total_weight"] = total_weight;
    j["total_cells"] = total_cells;
    j["epsilon"] = epsilon;
    j["edge_cut"] = edge_cut;
    j["connectivity_cut"] = connectivity_cut;
    j["cut_net"] = cut_net;
    j["max_ghost_weight"] = max_ghost_weight();
    auto& parts = j["per_part"] = nlohmann::ordered_json::array();
    for (std::size_t p = 0; p < per_part.size(); ++p) {
      parts.push_back({{"part", p},
                       {"weight", per_part[p].weight},
                       {"cells", per_part[p].cells},
                       {"ghost_cells", per_part[p].ghost_cells},
                       {"ghost_weight", per_part[p].ghost_weight}});
    }
    return j;
  }
};

/// Report from explicit graph (edge view) and hypergraph models. The
/// neighbor table defines ghosts.
inline MetricsReport full_report(const AmrMesh& mesh, const NeighborTable& nbrs, const Hypergraph& graph,
                                 const Hypergraph& hypergraph, const PartitionAssignment& a) {
  a.validate(mesh.size());
  MetricsReport r;
  r.n_parts = a.n_parts;
  r.total_cells = mesh.size();
  const auto w = mesh.weights();
  r.total_weight = mesh.total_weight();
  r.epsilon = epsilon(a, w);
  r.edge_cut = edge_cut(graph, a);
  r.connectivity_cut = connectivity_cut(hypergraph, a);
  r.cut_net = cut_net(hypergraph, a);
  r.per_part.resize(a.n_parts);
  for (std::size_t c = 0; c < mesh.size(); ++c) {
    r.per_part[a.part[c]].weight += w[c];
    ++r.per_part[a.part[c]].cells;
  }
  const auto ghosts = ghost_stats(mesh, a, nbrs);
  for (std::uint32_t p = 0; p < a.n_parts; ++p) {
    r.per_part[p].ghost_cells = ghosts[p].cells;
    r.per_part[p].ghost_weight = ghosts[p].weight;
  }
  return r;
}

/// Report using the default stencil for graph, hypergraph and ghosts.
inline MetricsReport full_report(const AmrMesh& mesh, const PartitionAssignment& a) {
  const NeighborTable nbrs(mesh);
  return full_report(mesh, nbrs, build_graph(mesh, nbrs), build_hypergraph(mesh, nbrs), a);
}

/// Long-form CSV `metric,part,value`; global metrics use part -1.
inline void write_report_csv(const MetricsReport& r, std::ostream& out) {
  char buf[64];
  auto row = [&](const char* metric, long part, double value) {
    std::snprintf(buf, sizeof buf, "%.17g", value);
    out << metric << ',' << part << ',' << buf << '\n';
  };
  out << "metric,part,value\n";
  row("epsilon", -1, r.epsilon);
  row("edge_cut", -1, r.edge_cut);
  row("connectivity_cut", -1, r.connectivity_cut);
  row("cut_net", -1, r.cut_net);
  row("total_weight", -1, r.total_weight);
  row("max_ghost_weight", -1, r.max_ghost_weight());
  for (std::size_t p = 0; p < r.per_part.size(); ++p) {
    row("weight", long(p), r.per_part[p].weight);
    row("cells", long(p), double(r.per_part[p].cells));
    row("ghost_cells", long(p), double(r.per_part[p].ghost_cells));
    row("ghost_weight", long(p), r.per_part[p].ghost_weight);
  }
}

}  // namespace lbkit
