#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lbkit/error.hpp"
#include "lbkit/grid/mesh.hpp"
#include "lbkit/grid/weights.hpp"

namespace lbkit {

/// Ellipsoid (or ellipsoidal shell when inner_scale > 0) refined to `level`.
struct RefinementRegion {
  Vec3 center{};
  Vec3 semi_axes{1.0, 1.0, 1.0};
  int level = 1;
  double inner_scale = 0.0;

  bool contains(const Vec3& p) const {
    double q = 0.0;
    for (int d = 0; d < 3; ++d) {
      const double t = (p[d] - center[d]) / semi_axes[d];
      q += t * t;
    }
    return q <= 1.0 && (inner_scale <= 0.0 || q >= inner_scale * inner_scale);
  }
};

enum class BoundaryModel { none, domain_faces };

struct SyntheticConfig {
  Ijk base_dims{4, 4, 4};
  int max_level = 0;
  /// Background, fixed bumps, boundary factor and dynamic-range target.
  WeightFieldSpec field{};
  std::vector<RefinementRegion> regions;
  int random_bumps = 0;
  double random_bump_radius_min = 2.0;
  double random_bump_radius_max = 6.0;
  BoundaryModel boundary = BoundaryModel::none;
  double boundary_thickness = 1.0;
};

/// Reference level shares and leaf count of the small production run the
/// S-like preset imitates. Reported next to generated meshes, never asserted.
inline constexpr std::array<double, 4> kRunSLevelShares{0.264, 0.123, 0.365, 0.248};
inline constexpr std::size_t kRunSCellCount = 285972;

namespace detail {

// Platform-independent uniform double in [0, 1).
inline double uniform01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

}  // namespace detail

/// Deterministic in (config, seed). Bump amplitudes are rescaled so that the
/// max/min weight ratio over non-boundary cells equals the dynamic-range target.
inline AmrMesh generate_synthetic(const SyntheticConfig& config, std::uint64_t seed) {
  for (int d = 0; d < 3; ++d) {
    if (config.base_dims[d] < 1) throw InvalidArgument("base dimensions must be positive");
  }
  if (config.max_level < 0) throw InvalidArgument("max_level must be >= 0");
  if (config.random_bumps < 0 ||
      !(config.random_bump_radius_min > 0.0 &&
        config.random_bump_radius_max >= config.random_bump_radius_min)) {
    throw InvalidArgument("invalid random bump settings");
  }
  std::vector<RefinementRegion> regions = config.regions;
  for (const RefinementRegion& r : regions) {
    if (r.level < 1 || r.level > config.max_level) {
      throw InvalidArgument("refinement level must be in [1, max_level]");
    }
    for (double a : r.semi_axes) {
      if (!(a > 0.0)) throw InvalidArgument("refinement semi-axes must be positive");
    }
  }
  std::stable_sort(regions.begin(), regions.end(),
                   [](const auto& a, const auto& b) { return a.level < b.level; });

  AmrMesh mesh = build_uniform(int(config.base_dims[0]), int(config.base_dims[1]),
                               int(config.base_dims[2]), config.max_level);
  for (const RefinementRegion& r : regions) {
    mesh = refine(mesh, [&r](const Vec3& p) { return r.contains(p); }, r.level);
  }

  std::mt19937_64 rng(seed);
  std::vector<Bump> bumps = config.field.bumps();
  for (int b = 0; b < config.random_bumps; ++b) {
    Bump bump;
    for (int d = 0; d < 3; ++d) bump.center[d] = detail::uniform(rng, 0.0, config.base_dims[d]);
    bump.radius =
        detail::uniform(rng, config.random_bump_radius_min, config.random_bump_radius_max);
    bump.amplitude = detail::uniform(rng, 0.5, 1.0);
    bumps.push_back(bump);
  }

  const auto is_boundary = [&config](const AmrMesh& m, std::size_t c) {
    return config.boundary == BoundaryModel::domain_faces &&
           DomainFaces{config.boundary_thickness}(m, c);
  };

  const double background = config.field.background();
  const double target = config.field.dynamic_range_target();
  double scale = 1.0;
  if (!bumps.empty()) {
    const WeightFieldSpec raw(background, bumps, config.field.boundary_factor(), target);
    double lo = 0.0, hi = 0.0;
    bool any = false;
    for (int pass = 0; pass < 2 && !any; ++pass) {
      for (std::size_t c = 0; c < mesh.size(); ++c) {
        if (pass == 0 && is_boundary(mesh, c)) continue;
        const double b = raw(mesh.center(c)) - background;
        if (!any) lo = hi = b;
        lo = std::min(lo, b);
        hi = std::max(hi, b);
        any = true;
      }
    }
    if (target > 1.0) {
      const double denom = hi - target * lo;
      if (!(denom > 0.0)) {
        throw InvalidArgument("bumps cannot reach the dynamic-range target on this mesh");
      }
      scale = background * (target - 1.0) / denom;
    } else {
      scale = 0.0;
    }
  }
  std::vector<Bump> scaled;
  for (Bump b : bumps) {
    b.amplitude *= scale;
    if (b.amplitude > 0.0) scaled.push_back(b);
  }
  const WeightFieldSpec field(background, scaled, config.field.boundary_factor(), target);
  return assign_weights(mesh, field, is_boundary);
}

/// Named configurations: "trivial" (4^3, uniform weights), "small" (16^3, two
/// refinement levels) and "s-like" (51x40x40 base, three levels).
inline SyntheticConfig synthetic_preset(std::string_view name) {
  SyntheticConfig c;
  if (name == "trivial") {
    c.field = WeightFieldSpec(1.0, {}, 1.0 / 6.0, 1.0);
    return c;
  }
  if (name == "small") {
    c.base_dims = {16, 16, 16};
    c.max_level = 2;
    c.field = WeightFieldSpec(1.0, {Bump{{10.0, 8.0, 8.0}, 3.0, 1.0}}, 1.0 / 6.0, 100.0);
    c.regions = {RefinementRegion{{9.0, 8.0, 8.0}, {5.0, 4.0, 4.0}, 1},
                 RefinementRegion{{10.0, 8.0, 8.0}, {2.0, 2.0, 2.0}, 2}};
    c.random_bumps = 3;
    c.random_bump_radius_min = 1.5;
    c.random_bump_radius_max = 3.0;
    c.boundary = BoundaryModel::domain_faces;
    return c;
  }
  if (name == "s-like") {
    c.base_dims = {51, 40, 40};
    c.max_level = 3;
    const Vec3 body{33.0, 20.0, 20.0};
    c.field = WeightFieldSpec(1.0,
                              {Bump{{39.0, 20.0, 20.0}, 6.0, 1.0},
                               Bump{{24.0, 20.0, 20.0}, 8.0, 0.6}},
                              1.0 / 6.0, 100.0);
    c.regions = {RefinementRegion{{29.0, 20.0, 20.0}, {16.0, 9.6, 9.6}, 1},
                 RefinementRegion{{31.0, 20.0, 20.0}, {10.0, 6.5, 6.5}, 2},
                 RefinementRegion{body, {4.0, 2.9, 2.9}, 3}};
    c.random_bumps = 8;
    c.random_bump_radius_min = 2.0;
    c.random_bump_radius_max = 6.0;
    c.boundary = BoundaryModel::domain_faces;
    return c;
  }
  throw NotFound("unknown synthetic preset '" + std::string(name) + "'");
}

}  // namespace lbkit
