#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lbkit/error.hpp"

namespace lbkit {

struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  double weight = 0.0;
};

/// Weighted vertices plus weighted pin lists, with an optional pairwise-edge
/// view. A graph is the special case where only the edge view is filled.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::vector<double> vertex_weights)
      : vertex_weights_(std::move(vertex_weights)) {
    for (double w : vertex_weights_) {
      if (!(w >= 0.0)) throw InvalidArgument("vertex weights must be non-negative");
    }
  }

  std::size_t num_vertices() const { return vertex_weights_.size(); }
  std::span<const double> vertex_weights() const { return vertex_weights_; }
  double vertex_weight(std::size_t v) const { return vertex_weights_[v]; }

  double total_vertex_weight() const {
    double w = 0.0;
    for (double x : vertex_weights_) w += x;
    return w;
  }

  void reserve_pins(std::size_t hyperedges, std::size_t pins) {
    offsets_.reserve(hyperedges + 1);
    weights_.reserve(hyperedges);
    pins_.reserve(pins);
  }

  void add_hyperedge(std::span<const std::uint32_t> pins, double weight) {
    if (pins.empty()) throw InvalidArgument("hyperedge must have at least one pin");
    if (!(weight >= 0.0)) throw InvalidArgument("hyperedge weight must be non-negative");
    for (std::uint32_t p : pins) {
      if (p >= vertex_weights_.size()) {
        throw InvalidArgument("pin " + std::to_string(p) + " refers to a missing vertex");
      }
    }
    if (offsets_.empty()) offsets_.push_back(0);
    pins_.insert(pins_.end(), pins.begin(), pins.end());
    offsets_.push_back(pins_.size());
    weights_.push_back(weight);
  }

  std::size_t num_hyperedges() const { return weights_.size(); }
  std::size_t num_pins() const { return pins_.size(); }

  std::span<const std::uint32_t> pins(std::size_t e) const {
    return {pins_.data() + offsets_[e], pins_.data() + offsets_[e + 1]};
  }

  double hyperedge_weight(std::size_t e) const { return weights_[e]; }

  void reserve_edges(std::size_t n) { edges_.reserve(n); }

  void add_edge(std::uint32_t u, std::uint32_t v, double weight) {
    if (u == v) throw InvalidArgument("self loops are not allowed");
    if (u >= vertex_weights_.size() || v >= vertex_weights_.size()) {
      throw InvalidArgument("edge endpoint refers to a missing vertex");
    }
    if (!(weight >= 0.0)) throw InvalidArgument("edge weight must be non-negative");
    edges_.push_back({u, v, weight});
  }

  bool has_edge_view() const { return !edges_.empty(); }
  std::span<const Edge> edges() const { return edges_; }

  /// Full invariant check, including at most one edge per unordered pair.
  void validate() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;
    seen.reserve(edges_.size());
    for (const Edge& e : edges_) seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      throw ValidationError("duplicate pairwise edge");
    }
  }

 private:
  std::vector<double> vertex_weights_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> pins_;
  std::vector<double> weights_;
  std::vector<Edge> edges_;
};

}  // namespace lbkit
