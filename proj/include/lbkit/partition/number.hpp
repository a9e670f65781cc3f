#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "lbkit/error.hpp"
#include "lbkit/partition/assignment.hpp"

namespace lbkit {

/// List scheduling: each item goes to the currently lightest part (lowest
/// index on ties). With `sorted_first` items are visited by descending weight
/// (stable), which is LPT.
inline PartitionAssignment number_partition(std::span<const double> weights, int n,
                                            bool sorted_first) {
  if (n < 1) throw InvalidArgument("number of parts must be >= 1");
  if (weights.empty()) throw InvalidArgument("need at least one weight");
  for (double w : weights) {
    if (!(w >= 0.0)) throw InvalidArgument("weights must be non-negative");
  }
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), std::size_t(0));
  if (sorted_first) {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return weights[a] > weights[b]; });
  }
  PartitionAssignment a{std::uint32_t(n), std::vector<std::uint32_t>(weights.size(), 0)};
  std::vector<double> load(std::size_t(n), 0.0);
  for (std::size_t i : order) {
    const auto p = std::size_t(std::min_element(load.begin(), load.end()) - load.begin());
    a.part[i] = std::uint32_t(p);
    load[p] += weights[i];
  }
  return a;
}

}  // namespace lbkit
