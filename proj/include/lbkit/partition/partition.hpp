#pragma once

#include <string>
#include <string_view>

#include "lbkit/error.hpp"
#include "lbkit/grid/graph.hpp"
#include "lbkit/grid/mesh.hpp"
#include "lbkit/partition/assignment.hpp"
#include "lbkit/partition/bisection.hpp"
#include "lbkit/partition/hsfc.hpp"
#include "lbkit/partition/multilevel.hpp"
#include "lbkit/partition/number.hpp"

namespace lbkit {

enum class MethodFamily { greedy, lpt, rcb, rib, hsfc, graph, hypergraph };

struct Method {
  MethodFamily family = MethodFamily::rcb;
  /// Curve name for hsfc, empty otherwise.
  std::string curve;

  std::string to_string() const {
    switch (family) {
      case MethodFamily::greedy: return "greedy";
      case MethodFamily::lpt: return "lpt";
      case MethodFamily::rcb: return "rcb";
      case MethodFamily::rib: return "rib";
      case MethodFamily::hsfc: return "hsfc:" + curve;
      case MethodFamily::graph: return "graph";
      case MethodFamily::hypergraph: return "hypergraph";
    }
    return "";
  }
};

/// Parses greedy, lpt, rcb, rib, hsfc:<curve>, graph or hypergraph. The curve
/// name is checked against the catalogue (plus "morton").
inline Method parse_method(std::string_view text) {
  Method m;
  if (text == "greedy") {
    m.family = MethodFamily::greedy;
  } else if (text == "lpt") {
    m.family = MethodFamily::lpt;
  } else if (text == "rcb") {
    m.family = MethodFamily::rcb;
  } else if (text == "rib") {
    m.family = MethodFamily::rib;
  } else if (text == "graph") {
    m.family = MethodFamily::graph;
  } else if (text == "hypergraph") {
    m.family = MethodFamily::hypergraph;
  } else if (text.substr(0, 5) == "hsfc:" && text.size() > 5) {
    m.family = MethodFamily::hsfc;
    m.curve = std::string(text.substr(5));
    try {
      resolve_curve(m.curve);
    } catch (const NotFound&) {
      throw InvalidArgument("unknown curve '" + m.curve + "'");
    }
  } else {
    throw InvalidArgument("unknown method '" + std::string(text) + "'");
  }
  return m;
}

/// Runs one partitioner on a mesh. Graph and hypergraph methods build the
/// default stencil communication model.
inline PartitionAssignment partition_mesh(const AmrMesh& mesh, const Method& method, int n,
                                          PartitionerParams params = {}) {
  switch (method.family) {
    case MethodFamily::greedy:
    case MethodFamily::lpt: {
      const auto w = mesh.weights();
      return number_partition(w, n, method.family == MethodFamily::lpt);
    }
    case MethodFamily::rcb: return rcb(mesh, n, params);
    case MethodFamily::rib: return rib(mesh, n, params);
    case MethodFamily::hsfc:
      params.curve = method.curve;
      return hsfc(mesh, n, params);
    case MethodFamily::graph:
      return multilevel_bisection(build_graph(mesh), n, params, MultilevelMode::graph);
    case MethodFamily::hypergraph:
      return multilevel_bisection(build_hypergraph(mesh), n, params, MultilevelMode::hypergraph);
  }
  throw InvalidArgument("unknown method");
}

inline PartitionAssignment partition_mesh(const AmrMesh& mesh, std::string_view method, int n,
                                          const PartitionerParams& params = {}) {
  return partition_mesh(mesh, parse_method(method), n, params);
}

}  // namespace lbkit
