#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lbkit/error.hpp"
#include "lbkit/grid/mesh.hpp"
#include "lbkit/partition/assignment.hpp"
#include "lbkit/sfc/catalogue.hpp"
#include "lbkit/sfc/codec.hpp"

namespace lbkit {

/// Catalogue curve or "morton".
inline CurveTable3 resolve_curve(std::string_view name) {
  if (name == "morton") return morton_table();
  return curve_table(name);
}

/// Smallest order whose lattice resolves every finest-level cell.
inline int hsfc_min_order(const AmrMesh& mesh) {
  const Ijk base = mesh.base_dims();
  const std::uint32_t big = std::max({base[0], base[1], base[2]});
  return std::max(1, mesh.max_level() + int(std::bit_width(big - 1)));
}

/// Greedy binning of weights already in key order: bin b takes cells until its
/// sum exceeds W/n; the cell that crosses the target stays in bin b. The last
/// bin takes the rest.
inline std::vector<std::uint32_t> hsfc_greedy_bins(std::span<const double> w, std::uint32_t n) {
  double total = 0.0;
  for (double x : w) total += x;
  const double target = total / double(n);
  std::vector<std::uint32_t> bin(w.size(), 0);
  std::uint32_t b = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bin[i] = b;
    sum += w[i];
    if (sum > target && b + 1 < n) {
      ++b;
      sum = 0.0;
    }
  }
  return bin;
}

/// Moves single cells across neighbouring bin boundaries; bins stay contiguous
/// nonempty runs in key order. Boundary b moves by one cell when that brings
/// the weight in front of it strictly closer to (b + 1) W / n. Each pass visits
/// the boundaries right to left, then left to right. The greedy bins are kept
/// if refinement would raise the heaviest bin. Returns the passes run.
inline int hsfc_refine_bins(std::span<const double> w, std::vector<std::uint32_t>& bin,
                            std::uint32_t n, int pass_limit) {
  if (w.empty() || n < 2) return 0;
  std::vector<double> prefix(w.size() + 1, 0.0);
  for (std::size_t i = 0; i < w.size(); ++i) prefix[i + 1] = prefix[i] + w[i];
  const double total = prefix.back();
  // start[b] .. start[b+1] is bin b.
  std::vector<std::size_t> start(n + 1, w.size());
  for (std::size_t i = w.size(); i-- > 0;) start[bin[i]] = i;
  for (std::uint32_t b = n; b-- > 0;) start[b] = std::min(start[b], start[b + 1]);
  start[0] = 0;

  auto heaviest = [&](const std::vector<std::size_t>& st) {
    double m = 0.0;
    for (std::uint32_t b = 0; b < n; ++b) m = std::max(m, prefix[st[b + 1]] - prefix[st[b]]);
    return m;
  };
  const std::vector<std::size_t> greedy = start;

  auto try_boundary = [&](std::uint32_t b) {
    const double target = total * double(b + 1) / double(n);
    const std::size_t cut = start[b + 1];
    const double err = std::abs(prefix[cut] - target);
    if (cut > start[b] + 1 && std::abs(prefix[cut - 1] - target) < err) {
      --start[b + 1];
      return true;
    }
    if (cut + 1 < start[b + 2] && std::abs(prefix[cut + 1] - target) < err) {
      ++start[b + 1];
      return true;
    }
    return false;
  };

  int passes = 0;
  for (; passes < pass_limit; ++passes) {
    bool moved = false;
    for (std::uint32_t b = n - 1; b-- > 0;) moved |= try_boundary(b);
    for (std::uint32_t b = 0; b + 1 < n; ++b) moved |= try_boundary(b);
    if (!moved) break;
  }
  if (heaviest(start) > heaviest(greedy)) start = greedy;
  for (std::uint32_t b = 0; b < n; ++b)
    for (std::size_t i = start[b]; i < start[b + 1]; ++i) bin[i] = b;
  return passes;
}

/// Curve key of every cell: its center snapped to the order-`order` lattice.
/// Keys collide only when the order cannot resolve the finest cells.
inline std::vector<std::uint64_t> hsfc_keys(const AmrMesh& mesh, const CurveTable3& table,
                                            int order, const AxisPermutation& axes = {}) {
  const int needed = hsfc_min_order(mesh);
  const int shift = std::max(0, needed - order);
  std::vector<std::uint64_t> keys(mesh.size());
  for (std::size_t c = 0; c < mesh.size(); ++c) {
    const FineBox b = mesh.box(c);
    std::array<std::uint32_t, 3> p{};
    for (int d = 0; d < 3; ++d) {
      const std::int64_t w = b.hi[d] - b.lo[d];
      std::int64_t x = b.lo[d] + w / 2;
      if (needed < order) x <<= (order - needed);
      p[d] = std::uint32_t(x >> shift);
    }
    keys[c] = sfc_encode(table, p, order, axes).value;
  }
  return keys;
}

/// Space-filling-curve partitioning: sort cells by curve key (ties by cell
/// id), bin greedily, then refine the bins.
inline PartitionAssignment hsfc(const AmrMesh& mesh, int n, const PartitionerParams& params = {}) {
  params.validate();
  if (n < 1) throw InvalidArgument("number of parts must be >= 1");
  const CurveTable3 table = resolve_curve(params.curve);
  const int order = params.order > 0 ? params.order : hsfc_min_order(mesh);
  if (order > max_curve_order<3>()) throw InvalidArgument("curve order too large");
  const auto keys = hsfc_keys(mesh, table, order, params.axes);

  std::vector<std::pair<std::uint64_t, std::uint32_t>> sorted(mesh.size());
  for (std::size_t c = 0; c < mesh.size(); ++c) sorted[c] = {keys[c], std::uint32_t(c)};
  std::sort(sorted.begin(), sorted.end());
  std::size_t duplicates = 0;
  for (std::size_t i = 1; i < sorted.size(); ++i) duplicates += sorted[i - 1].first == sorted[i].first;
  if (duplicates > 0) {
    params.warn(std::to_string(duplicates) + " duplicate curve keys at order " +
                std::to_string(order) + "; ordered by cell id");
  }

  std::vector<double> w(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) w[i] = mesh.cell(sorted[i].second).weight;
  std::vector<std::uint32_t> bin = hsfc_greedy_bins(w, std::uint32_t(n));
  hsfc_refine_bins(w, bin, std::uint32_t(n), params.pass_limit);

  PartitionAssignment out{std::uint32_t(n), std::vector<std::uint32_t>(mesh.size(), 0)};
  for (std::size_t i = 0; i < sorted.size(); ++i) out.part[sorted[i].second] = bin[i];
  return out;
}

}  // namespace lbkit
