#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace lbkit {

using Vec3 = std::array<double, 3>;
using Ijk = std::array<std::uint32_t, 3>;

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

/// Half-open integer box [lo, hi) in finest-level units.
struct FineBox {
  std::array<std::int64_t, 3> lo{};
  std::array<std::int64_t, 3> hi{};

  bool overlaps(const FineBox& o) const {
    for (int d = 0; d < 3; ++d) {
      if (!(lo[d] < o.hi[d] && o.lo[d] < hi[d])) return false;
    }
    return true;
  }

  FineBox expanded(std::int64_t by) const {
    FineBox b = *this;
    for (int d = 0; d < 3; ++d) {
      b.lo[d] -= by;
      b.hi[d] += by;
    }
    return b;
  }
};

/// Largest per-axis separation between two boxes (0 when they touch or overlap).
inline std::int64_t chebyshev_gap(const FineBox& a, const FineBox& b) {
  std::int64_t g = 0;
  for (int d = 0; d < 3; ++d) {
    std::int64_t s = 0;
    if (b.lo[d] >= a.hi[d]) s = b.lo[d] - a.hi[d];
    else if (a.lo[d] >= b.hi[d]) s = a.lo[d] - b.hi[d];
    if (s > g) g = s;
  }
  return g;
}

}  // namespace lbkit
