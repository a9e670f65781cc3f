#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "lbkit/error.hpp"
#include "lbkit/sfc/catalogue.hpp"
#include "lbkit/sfc/curve_table.hpp"

namespace lbkit {

enum class DilationNorm { l1, l2, linf };

inline std::string to_string(DilationNorm p) {
  switch (p) {
    case DilationNorm::l1: return "1";
    case DilationNorm::l2: return "2";
    case DilationNorm::linf: return "inf";
  }
  return "?";
}

inline DilationNorm parse_dilation_norm(std::string_view s) {
  if (s == "1") return DilationNorm::l1;
  if (s == "2") return DilationNorm::l2;
  if (s == "inf" || s == "Inf" || s == "infinity") return DilationNorm::linf;
  throw InvalidArgument("unsupported p '" + std::string(s) + "' (expected 1, 2 or inf)");
}

/// Where the sample point of key i sits.
/// `gate`: the curve point at parameter i/8^k, i.e. the entrance of cell i
/// (plus the exit point of the whole curve). Every order-k sample is also an
/// order-(k+1) sample, so estimates are exact lower bounds of WL_p and
/// monotone in k.
/// `cell_center`: the cell center (decode(i) + 0.5) / 2^k.
enum class DilationAnchor { gate, cell_center };

struct DilationEstimate {
  std::string curve;
  DilationNorm p = DilationNorm::l1;
  int order = 0;
  double wl_p = 0.0;
  double cube_root = 0.0;
};

struct DilationOptions {
  DilationAnchor anchor = DilationAnchor::gate;
  /// Threads for the pair scan; the result does not depend on it.
  int workers = 1;
};

inline constexpr int kMaxDilationOrder = 7;

/// Entrance and exit point of every state's sub-curve, in unit-cube coordinates.
struct CurveGates {
  std::vector<std::array<double, 3>> entry;
  std::vector<std::array<double, 3>> exit;
};

inline CurveGates curve_gates(const CurveTable3& table) {
  const std::size_t n = table.n_states();
  CurveGates g{std::vector<std::array<double, 3>>(n, {0.5, 0.5, 0.5}),
               std::vector<std::array<double, 3>>(n, {0.5, 0.5, 0.5})};
  // Each gate is the fixed point of "descend into the first (last) child";
  // the map halves distances, so 64 rounds reach double precision.
  for (int it = 0; it < 64; ++it) {
    auto entry = g.entry;
    auto exit = g.exit;
    for (std::size_t s = 0; s < n; ++s) {
      const CurveEntry& first = table.state(s)[0];
      const CurveEntry& last = table.state(s)[7];
      for (int d = 0; d < 3; ++d) {
        entry[s][d] = (double((first.subcube >> (2 - d)) & 1u) + g.entry[first.next][d]) / 2;
        exit[s][d] = (double((last.subcube >> (2 - d)) & 1u) + g.exit[last.next][d]) / 2;
      }
    }
    g.entry = std::move(entry);
    g.exit = std::move(exit);
  }
  return g;
}

namespace detail {

struct DilationBox {
  std::array<double, 3> lo, hi;
};

class DilationSearch {
 public:
  DilationSearch(std::vector<std::array<double, 3>> points, int order, DilationNorm p)
      : points_(std::move(points)), order_(order), p_(p) {
    levels_.resize(std::size_t(order) + 1);
    const std::size_t blocks = std::size_t(1) << (3 * order);
    levels_[order].resize(blocks);
    for (std::size_t i = 0; i < blocks; ++i) levels_[order][i] = {points_[i], points_[i]};
    for (int m = order - 1; m >= 0; --m) {
      levels_[m].resize(levels_[m + 1].size() / 8);
      for (std::size_t b = 0; b < levels_[m].size(); ++b) {
        DilationBox box = levels_[m + 1][8 * b];
        for (int c = 1; c < 8; ++c) {
          const DilationBox& o = levels_[m + 1][8 * b + c];
          for (int d = 0; d < 3; ++d) {
            box.lo[d] = std::min(box.lo[d], o.lo[d]);
            box.hi[d] = std::max(box.hi[d], o.hi[d]);
          }
        }
        levels_[m][b] = box;
      }
    }
  }

  double norm_cubed(double a, double b, double c) const {
    switch (p_) {
      case DilationNorm::l1: {
        const double s = a + b + c;
        return s * s * s;
      }
      case DilationNorm::l2: {
        const double s = a * a + b * b + c * c;
        return s * std::sqrt(s);
      }
      case DilationNorm::linf: {
        const double m = std::max(a, std::max(b, c));
        return m * m * m;
      }
    }
    return 0.0;
  }

  double ratio(std::size_t i, std::size_t j) const {
    const auto& a = points_[i];
    const auto& b = points_[j];
    return norm_cubed(std::abs(a[0] - b[0]), std::abs(a[1] - b[1]), std::abs(a[2] - b[2])) /
           double(j - i);
  }

  /// Max over pairs drawn from the coarse subset of every 8^(order-3)-th point
  /// and from the trailing points beyond the block grid.
  double seed_bound() const {
    double best = 0.0;
    const std::size_t stride = std::size_t(1) << (3 * std::max(0, order_ - 3));
    for (std::size_t i = 0; i < points_.size(); i += stride)
      for (std::size_t j = i + stride; j < points_.size(); j += stride) best = std::max(best, ratio(i, j));
    const std::size_t blocks = levels_[order_].size();
    for (std::size_t j = blocks; j < points_.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) best = std::max(best, ratio(i, j));
    return best;
  }

  /// Exact max over block pairs (a, b) at level 1 listed in `roots`.
  double search(const std::vector<std::pair<std::size_t, std::size_t>>& roots, double best) const {
    for (const auto& [a, b] : roots) recurse(1, a, b, best);
    return best;
  }

  std::size_t n_points() const { return points_.size(); }

 private:
  double upper(int m, std::size_t a, std::size_t b) const {
    const DilationBox& x = levels_[m][a];
    const DilationBox& y = levels_[m][b];
    std::array<double, 3> d{};
    for (int k = 0; k < 3; ++k) d[k] = std::max(y.hi[k] - x.lo[k], x.hi[k] - y.lo[k]);
    const std::size_t size = std::size_t(1) << (3 * (order_ - m));
    return norm_cubed(d[0], d[1], d[2]) / double((b - a - 1) * size + 1);
  }

  void recurse(int m, std::size_t a, std::size_t b, double& best) const {
    if (m == order_) {
      if (a != b) best = std::max(best, ratio(a, b));
      return;
    }
    if (a != b && upper(m, a, b) <= best) return;
    std::array<std::pair<double, std::pair<std::size_t, std::size_t>>, 64> kids;
    int n = 0;
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        if (a == b && j < i) continue;
        const std::size_t ca = 8 * a + i, cb = 8 * b + j;
        kids[n++] = {ca == cb ? HUGE_VAL : upper(m + 1, ca, cb), {ca, cb}};
      }
    std::sort(kids.begin(), kids.begin() + n, [](const auto& x, const auto& y) {
      return x.first > y.first || (x.first == y.first && x.second < y.second);
    });
    for (int k = 0; k < n; ++k) {
      if (kids[k].first <= best) break;
      recurse(m + 1, kids[k].second.first, kids[k].second.second, best);
    }
  }

  std::vector<std::array<double, 3>> points_;
  int order_;
  DilationNorm p_;
  std::vector<std::vector<DilationBox>> levels_;
};

inline std::vector<std::array<double, 3>> dilation_points(const CurveTable3& table, int order,
                                                          DilationAnchor anchor) {
  const std::size_t n = std::size_t(1) << (3 * order);
  std::vector<std::array<double, 3>> pts;
  pts.reserve(n + 1);
  const CurveGates gates = curve_gates(table);
  // Depth-first walk of the traversal, emitting cells in key order.
  struct Frame {
    std::uint32_t state;
    std::array<std::uint64_t, 3> origin;
    int level;
  };
  std::vector<Frame> stack{{0, {0, 0, 0}, 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.level == order) {
      std::array<double, 3> p{};
      for (int d = 0; d < 3; ++d) {
        p[d] = double(f.origin[d]) +
               (anchor == DilationAnchor::gate ? gates.entry[f.state][d] : 0.5);
      }
      pts.push_back(p);
      continue;
    }
    for (int pos = 7; pos >= 0; --pos) {
      const CurveEntry& e = table.state(f.state)[pos];
      Frame child{e.next, f.origin, f.level + 1};
      for (int d = 0; d < 3; ++d) child.origin[d] = 2 * f.origin[d] + ((e.subcube >> (2 - d)) & 1u);
      stack.push_back(child);
    }
  }
  if (anchor == DilationAnchor::gate) {
    const double side = double(std::uint64_t(1) << order);
    pts.push_back({side * gates.exit[0][0], side * gates.exit[0][1], side * gates.exit[0][2]});
  }
  return pts;
}

}  // namespace detail

/// Largest D_p(τ(i), τ(j))^3 / (a(j) - a(i)) over all sample pairs i < j of an
/// order-`order` traversal, found by branch and bound over the nested
/// bounding boxes of key blocks (exact, not a sampled maximum).
inline DilationEstimate discrete_dilation(const CurveTable3& table, int order, DilationNorm p,
                                          const DilationOptions& options = {}) {
  if (order < 1 || order > kMaxDilationOrder) {
    throw InvalidArgument("dilation order must be in [1, " + std::to_string(kMaxDilationOrder) +
                          "]");
  }
  if (options.workers < 1) throw InvalidArgument("workers must be >= 1");
  const detail::DilationSearch search(detail::dilation_points(table, order, options.anchor), order,
                                      p);
  const double seed = search.seed_bound();
  std::vector<std::pair<std::size_t, std::size_t>> roots;
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = a; b < 8; ++b) roots.emplace_back(a, b);

  double best = seed;
  const int workers = std::min<int>(options.workers, int(roots.size()));
  if (workers == 1) {
    best = search.search(roots, seed);
  } else {
    std::vector<double> partial(std::size_t(workers), seed);
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        std::vector<std::pair<std::size_t, std::size_t>> mine;
        for (std::size_t r = std::size_t(w); r < roots.size(); r += std::size_t(workers)) {
          mine.push_back(roots[r]);
        }
        partial[std::size_t(w)] = search.search(mine, seed);
      });
    }
    for (auto& t : threads) t.join();
    for (double v : partial) best = std::max(best, v);
  }
  return {table.name(), p, order, best, std::cbrt(best)};
}

/// Published cube roots of WL_1, WL_2 and WL_inf for the six named curves.
inline std::optional<double> table1_reference(std::string_view curve, DilationNorm p) {
  struct Row {
    std::string_view name;
    std::array<double, 3> v;
  };
  static constexpr std::array<Row, 6> rows{{{"butz", {4.62, 2.97, 2.89}},
                                            {"alfa", {4.64, 2.84, 2.32}},
                                            {"harmonious", {4.63, 3.07, 3.04}},
                                            {"sasburg", {4.58, 3.00, 2.66}},
                                            {"basecamp", {5.27, 3.21, 3.04}},
                                            {"beta", {4.48, 2.65, 2.41}}}};
  for (const Row& r : rows) {
    if (r.name == curve) return r.v[std::size_t(p)];
  }
  return std::nullopt;
}

/// Estimates for the six fingerprinted curves x {1, 2, inf} x `orders`.
inline std::vector<DilationEstimate> fingerprint_report(const std::vector<int>& orders,
                                                        const DilationOptions& options = {}) {
  std::vector<DilationEstimate> out;
  for (const std::string& name : fingerprinted_curve_names()) {
    const CurveTable3 table = curve_table(name);
    for (DilationNorm p : {DilationNorm::l1, DilationNorm::l2, DilationNorm::linf}) {
      for (int order : orders) out.push_back(discrete_dilation(table, order, p, options));
    }
  }
  return out;
}

inline void write_dilation_csv(const std::vector<DilationEstimate>& rows, std::ostream& out) {
  out << "curve,p,order,wl_p,cube_root,table1_reference,deviation\n";
  char buf[64];
  for (const DilationEstimate& e : rows) {
    out << e.curve << ',' << to_string(e.p) << ',' << e.order << ',';
    std::snprintf(buf, sizeof buf, "%.6f,%.6f,", e.wl_p, e.cube_root);
    out << buf;
    if (const auto ref = table1_reference(e.curve, e.p)) {
      std::snprintf(buf, sizeof buf, "%.2f,%.6f", *ref, (e.cube_root - *ref) / *ref);
      out << buf;
    } else {
      out << ',';
    }
    out << '\n';
  }
}

}  // namespace lbkit
