#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "lbkit/error.hpp"
#include "lbkit/grid/mesh.hpp"
#include "lbkit/partition/assignment.hpp"

namespace lbkit {

/// Symmetric 3x3 eigen-decomposition by cyclic Jacobi rotations. Eigenvalues
/// ascending; column k of `vectors` belongs to value k.
struct SymmetricEigen {
  std::array<double, 3> values{};
  std::array<std::array<double, 3>, 3> vectors{};
};

inline SymmetricEigen jacobi_eigen(std::array<std::array<double, 3>, 3> a) {
  std::array<std::array<double, 3>, 3> v{};
  for (int i = 0; i < 3; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0, scale = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) (i == j ? scale : off) += a[i][j] * a[i][j];
    if (off <= 1e-30 * std::max(scale, 1e-300)) break;
    for (int p = 0; p < 2; ++p)
      for (int q = p + 1; q < 3; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < 3; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 3; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < 3; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
  }
  std::array<int, 3> idx{0, 1, 2};
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return a[x][x] < a[y][y]; });
  SymmetricEigen out;
  for (int k = 0; k < 3; ++k) {
    out.values[k] = a[idx[k]][idx[k]];
    for (int i = 0; i < 3; ++i) out.vectors[i][k] = v[i][idx[k]];
  }
  return out;
}

/// Direction of least inertia. When the smallest eigenvalue is repeated the
/// coordinate axis (x, then y, then z) best represented in its eigenspace is
/// projected onto that space.
inline Vec3 min_inertia_axis(const std::array<std::array<double, 3>, 3>& tensor) {
  const SymmetricEigen e = jacobi_eigen(tensor);
  const double spread = std::max(std::abs(e.values[2]), std::abs(e.values[0]));
  const double tol = 1e-9 * std::max(spread, 1e-300);
  int dim = 1;
  while (dim < 3 && e.values[dim] - e.values[0] <= tol) ++dim;
  Vec3 best{};
  double best_norm = -1.0;
  for (int axis = 0; axis < 3; ++axis) {
    Vec3 proj{};
    for (int k = 0; k < dim; ++k) {
      const double c = e.vectors[axis][k];
      for (int i = 0; i < 3; ++i) proj[i] += c * e.vectors[i][k];
    }
    const double n = norm(proj);
    if (n > best_norm + 1e-9) {
      best_norm = n;
      best = proj;
    }
  }
  const double n = norm(best);
  for (double& x : best) x /= n;
  // Canonical sign: largest component positive (first on ties).
  int big = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(best[i]) > std::abs(best[big]) + 1e-12) big = i;
  }
  if (best[big] < 0) {
    for (double& x : best) x = -x;
  }
  return best;
}

namespace detail {

/// Index k in [lo, hi] (cells [0, k) go left) whose prefix weight is closest to
/// `target`; the smallest such k wins ties. `allowed(k)` filters cut positions.
template <class Allowed>
std::size_t closest_prefix(std::span<const double> sorted_weights, double target, std::size_t lo,
                           std::size_t hi, Allowed&& allowed) {
  double prefix = 0.0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  double best_err = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k <= hi; ++k) {
    if (k >= lo && allowed(k)) {
      const double err = std::abs(prefix - target);
      if (err < best_err) {
        best_err = err;
        best = k;
      }
    }
    if (k < sorted_weights.size()) prefix += sorted_weights[k];
  }
  return best;
}

struct BisectionContext {
  const AmrMesh& mesh;
  const PartitionerParams& params;
  PartitionAssignment& out;
  bool inertial;
};

inline void recursive_bisect(BisectionContext& ctx, std::vector<std::uint32_t>& cells,
                             std::uint32_t n, std::uint32_t first_part) {
  if (n == 1) {
    for (std::uint32_t c : cells) ctx.out.part[c] = first_part;
    return;
  }
  if (cells.size() < n) {
    throw DegenerateSplit("subdomain with " + std::to_string(cells.size()) + " cells cannot hold " +
                          std::to_string(n) + " parts");
  }
  const AmrMesh& mesh = ctx.mesh;
  const std::uint32_t nl = (n + 1) / 2, nr = n / 2;
  double total = 0.0;
  for (std::uint32_t c : cells) total += mesh.cell(c).weight;
  const double target = total * double(nl) / double(n);

  // Candidate directions, in the order they are tried.
  std::vector<Vec3> directions;
  if (ctx.inertial) {
    Vec3 com{};
    double wsum = 0.0;
    for (std::uint32_t c : cells) {
      const Vec3 p = mesh.center(c);
      const double w = total > 0.0 ? mesh.cell(c).weight : 1.0;
      for (int d = 0; d < 3; ++d) com[d] += w * p[d];
      wsum += w;
    }
    for (double& x : com) x /= wsum;
    std::array<std::array<double, 3>, 3> inertia{};
    for (std::uint32_t c : cells) {
      const Vec3 r = mesh.center(c) - com;
      const double w = total > 0.0 ? mesh.cell(c).weight : 1.0;
      const double rr = dot(r, r);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) inertia[i][j] += w * ((i == j ? rr : 0.0) - r[i] * r[j]);
    }
    directions.push_back(min_inertia_axis(inertia));
  } else {
    std::array<std::int64_t, 3> lo{}, hi{};
    lo.fill(std::numeric_limits<std::int64_t>::max());
    hi.fill(std::numeric_limits<std::int64_t>::min());
    for (std::uint32_t c : cells) {
      const FineBox b = mesh.box(c);
      for (int d = 0; d < 3; ++d) {
        lo[d] = std::min(lo[d], b.lo[d]);
        hi[d] = std::max(hi[d], b.hi[d]);
      }
    }
    std::array<int, 3> axes{0, 1, 2};
    std::stable_sort(axes.begin(), axes.end(),
                     [&](int a, int b) { return hi[a] - lo[a] > hi[b] - lo[b]; });
    const int tries = ctx.params.rectilinear ? 3 : 1;
    for (int t = 0; t < tries; ++t) {
      Vec3 dir{};
      dir[axes[t]] = 1.0;
      directions.push_back(dir);
    }
  }

  std::vector<std::pair<double, std::uint32_t>> keyed(cells.size());
  std::vector<double> sorted_w(cells.size());
  for (const Vec3& dir : directions) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      keyed[i] = {dot(mesh.center(cells[i]), dir), cells[i]};
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i < keyed.size(); ++i) sorted_w[i] = mesh.cell(keyed[i].second).weight;
    const bool planes = ctx.params.rectilinear && !ctx.inertial;
    const std::size_t k = closest_prefix(sorted_w, target, nl, cells.size() - nr, [&](std::size_t k) {
      return !planes || keyed[k - 1].first < keyed[k].first;
    });
    if (k == std::numeric_limits<std::size_t>::max()) continue;
    std::vector<std::uint32_t> left(k), right(cells.size() - k);
    for (std::size_t i = 0; i < k; ++i) left[i] = keyed[i].second;
    for (std::size_t i = k; i < keyed.size(); ++i) right[i - k] = keyed[i].second;
    cells.clear();
    cells.shrink_to_fit();
    recursive_bisect(ctx, left, nl, first_part);
    recursive_bisect(ctx, right, nr, first_part + nl);
    return;
  }
  throw DegenerateSplit("no coordinate plane separates the subdomain into " + std::to_string(nl) +
                        " and " + std::to_string(nr) + " parts");
}

inline PartitionAssignment geometric_bisection(const AmrMesh& mesh, int n,
                                               const PartitionerParams& params, bool inertial) {
  params.validate();
  if (n < 1) throw InvalidArgument("number of parts must be >= 1");
  PartitionAssignment out{std::uint32_t(n), std::vector<std::uint32_t>(mesh.size(), 0)};
  std::vector<std::uint32_t> cells(mesh.size());
  std::iota(cells.begin(), cells.end(), 0u);
  BisectionContext ctx{mesh, params, out, inertial};
  recursive_bisect(ctx, cells, std::uint32_t(n), 0);
  return out;
}

}  // namespace detail

/// Recursive coordinate bisection: cut the longest bounding-box axis (x before
/// y before z on ties) at the cell prefix closest to the proportional target.
inline PartitionAssignment rcb(const AmrMesh& mesh, int n, const PartitionerParams& params = {}) {
  return detail::geometric_bisection(mesh, n, params, false);
}

/// Recursive inertial bisection: cells are ordered by their projection on the
/// axis of least inertia of the weighted cell centers and split by prefix weight.
inline PartitionAssignment rib(const AmrMesh& mesh, int n, const PartitionerParams& params = {}) {
  return detail::geometric_bisection(mesh, n, params, true);
}

}  // namespace lbkit
