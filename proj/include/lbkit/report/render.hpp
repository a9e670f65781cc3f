#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "lbkit/error.hpp"
#include "lbkit/grid/mesh.hpp"
#include "lbkit/partition/assignment.hpp"

namespace lbkit {

using Rgb = std::array<std::uint8_t, 3>;

/// Fixed 64-entry palette. Entry k scrambles k to s = (29 k) mod 64 and reads
/// the base-4 digits of s as red, green and blue levels 40 + 70 d, so
/// consecutive parts get clearly different colors.
inline Rgb palette_color(std::uint32_t part) {
  const std::uint32_t s = (29u * (part % 64u)) % 64u;
  auto level = [](std::uint32_t d) { return std::uint8_t(40 + 70 * d); };
  return {level(s & 3u), level((s >> 2) & 3u), level((s >> 4) & 3u)};
}

/// Raster of the plane `axis` = index (finest-level units) through the mesh.
/// The two remaining axes, in increasing order, are the image columns and
/// rows; row 0 is the top of the image and holds the largest coordinate.
struct SliceImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<Rgb> pixels;

  void write_ppm(std::ostream& out) const {
    out << "P6\n" << width << ' ' << height << "\n255\n";
    for (const Rgb& p : pixels) out.write(reinterpret_cast<const char*>(p.data()), 3);
  }
};

inline SliceImage render_slice(const AmrMesh& mesh, const PartitionAssignment& a, int axis,
                               std::int64_t index) {
  a.validate(mesh.size());
  if (axis < 0 || axis > 2) throw InvalidArgument("slice axis must be 0, 1 or 2");
  const Ijk dims = mesh.fine_dims();
  if (index < 0 || index >= std::int64_t(dims[std::size_t(axis)])) {
    throw InvalidArgument("slice index " + std::to_string(index) + " outside [0, " +
                          std::to_string(dims[std::size_t(axis)]) + ")");
  }
  const int u = axis == 0 ? 1 : 0;
  const int v = axis == 2 ? 1 : 2;
  SliceImage img;
  img.width = dims[std::size_t(u)];
  img.height = dims[std::size_t(v)];
  img.pixels.assign(img.width * img.height, Rgb{0, 0, 0});
  for (std::size_t c = 0; c < mesh.size(); ++c) {
    const FineBox b = mesh.box(c);
    if (b.lo[axis] > index || b.hi[axis] <= index) continue;
    const Rgb color = palette_color(a.part[c]);
    for (std::int64_t y = b.lo[v]; y < b.hi[v]; ++y) {
      const std::size_t row = img.height - 1 - std::size_t(y);
      for (std::int64_t x = b.lo[u]; x < b.hi[u]; ++x) img.pixels[row * img.width + std::size_t(x)] = color;
    }
  }
  return img;
}

inline void render_slice(const AmrMesh& mesh, const PartitionAssignment& a, int axis,
                         std::int64_t index, const std::filesystem::path& path) {
  const SliceImage img = render_slice(mesh, a, axis, index);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  img.write_ppm(out);
}

}  // namespace lbkit
