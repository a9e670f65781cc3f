#pragma once

#include <cmath>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "lbkit/error.hpp"
#include "lbkit/grid/mesh.hpp"

namespace lbkit {

/// Gaussian bump `amplitude * exp(-(d / radius)^2)`, positions in base-grid units.
struct Bump {
  Vec3 center{};
  double radius = 1.0;
  double amplitude = 1.0;

  double operator()(const Vec3& p) const {
    const double d = norm(p - center) / radius;
    return amplitude * std::exp(-d * d);
  }
};

/// Per-cell work model: constant background plus bumps; boundary cells are
/// scaled by `boundary_factor`. Validated on construction.
class WeightFieldSpec {
 public:
  explicit WeightFieldSpec(double background = 1.0, std::vector<Bump> bumps = {},
                           double boundary_factor = 1.0 / 6.0,
                           double dynamic_range_target = 100.0)
      : background_(background),
        bumps_(std::move(bumps)),
        boundary_factor_(boundary_factor),
        dynamic_range_target_(dynamic_range_target) {
    if (!(background_ > 0.0)) throw InvalidArgument("background must be positive");
    if (!(boundary_factor_ > 0.0 && boundary_factor_ <= 1.0)) {
      throw InvalidArgument("boundary_factor must lie in (0, 1]");
    }
    if (!(dynamic_range_target_ >= 1.0)) {
      throw InvalidArgument("dynamic_range_target must be >= 1");
    }
    for (const Bump& b : bumps_) {
      if (!(b.radius > 0.0) || !(b.amplitude > 0.0)) {
        throw InvalidArgument("bump radius and amplitude must be positive");
      }
    }
  }

  double background() const { return background_; }
  const std::vector<Bump>& bumps() const { return bumps_; }
  double boundary_factor() const { return boundary_factor_; }
  double dynamic_range_target() const { return dynamic_range_target_; }

  /// Field value before the boundary factor.
  double operator()(const Vec3& p) const {
    double w = background_;
    for (const Bump& b : bumps_) w += b(p);
    return w;
  }

 private:
  double background_;
  std::vector<Bump> bumps_;
  double boundary_factor_;
  double dynamic_range_target_;
};

struct NoBoundary {
  bool operator()(const AmrMesh&, std::size_t) const { return false; }
};

/// Cells whose box lies within `thickness` base cells of an outer domain face.
struct DomainFaces {
  double thickness = 1.0;

  bool operator()(const AmrMesh& mesh, std::size_t c) const {
    const FineBox b = mesh.box(c);
    const auto fine = mesh.fine_dims();
    const double t = thickness * double(mesh.width(0));
    for (int d = 0; d < 3; ++d) {
      if (double(b.lo[d]) < t || double(b.hi[d]) > double(fine[d]) - t) return true;
    }
    return false;
  }
};

/// Weights from the field at cell centers; cells matching `is_boundary`
/// are flagged and scaled by the boundary factor.
template <class BoundaryPredicate = NoBoundary>
AmrMesh assign_weights(const AmrMesh& mesh, const WeightFieldSpec& spec,
                       BoundaryPredicate&& is_boundary = {}) {
  std::vector<double> w(mesh.size());
  auto flags = std::make_unique<bool[]>(mesh.size());
  for (std::size_t c = 0; c < mesh.size(); ++c) {
    w[c] = spec(mesh.center(c));
    flags[c] = is_boundary(mesh, c);
    if (flags[c]) w[c] *= spec.boundary_factor();
  }
  return mesh.reweighted(w, std::span<const bool>(flags.get(), mesh.size()));
}

}  // namespace lbkit
