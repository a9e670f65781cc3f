#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <type_traits>

#include "lbkit/error.hpp"
#include "lbkit/sfc/curve_table.hpp"

namespace lbkit {

struct CurveKey {
  std::uint64_t value = 0;
  int order = 1;

  friend bool operator==(const CurveKey&, const CurveKey&) = default;
};

template <int D>
constexpr int max_curve_order() {
  return 63 / D;
}

namespace detail {

template <int D>
void check_order(int order) {
  if (order < 1 || order > max_curve_order<D>()) {
    throw InvalidArgument("order must be in [1, " + std::to_string(max_curve_order<D>()) + "]");
  }
}

template <int D>
void check_coords(const std::array<std::uint32_t, D>& c, int order) {
  for (int d = 0; d < D; ++d) {
    if ((std::uint64_t(c[d]) >> order) != 0) {
      throw InvalidArgument("coordinate " + std::to_string(c[d]) + " outside [0, 2^" +
                            std::to_string(order) + ")");
    }
  }
}

template <int D>
void check_key(const CurveKey& key) {
  check_order<D>(key.order);
  if ((key.value >> (D * key.order)) != 0) throw InvalidArgument("key out of range for order");
}

}  // namespace detail

/// Walk-based encode; coordinates are mapped through `axes` first.
template <int D>
CurveKey sfc_encode(const CurveTable<D>& table,
                    const std::type_identity_t<std::array<std::uint32_t, D>>& coords, int order,
                    const std::type_identity_t<AxisMap<D>>& axes = {}) {
  detail::check_order<D>(order);
  detail::check_coords<D>(coords, order);
  const auto w = axes.apply(coords, order);
  std::uint64_t key = 0;
  std::uint32_t s = 0;
  for (int level = order - 1; level >= 0; --level) {
    unsigned code = 0;
    for (int d = 0; d < D; ++d) code = (code << 1) | ((w[d] >> level) & 1u);
    const std::uint8_t pos = table.position(s, code);
    if (pos == CurveTable<D>::kMissing) {
      throw ValidationError("state " + std::to_string(s) + " of curve '" + table.name() +
                            "' has no subcube " + std::to_string(code));
    }
    key = (key << D) | pos;
    s = table.state(s)[pos].next;
  }
  return {key, order};
}

template <int D>
std::array<std::uint32_t, D> sfc_decode(const CurveTable<D>& table, const CurveKey& key,
                                        const std::type_identity_t<AxisMap<D>>& axes = {}) {
  detail::check_key<D>(key);
  std::array<std::uint32_t, D> w{};
  std::uint32_t s = 0;
  constexpr unsigned mask = (1u << D) - 1;
  for (int level = key.order - 1; level >= 0; --level) {
    const unsigned pos = unsigned(key.value >> (D * level)) & mask;
    const CurveEntry& e = table.state(s)[pos];
    for (int d = 0; d < D; ++d) w[d] = (w[d] << 1) | ((e.subcube >> (D - 1 - d)) & 1u);
    s = e.next;
  }
  return axes.invert(w, key.order);
}

/// Bit interleaving, x most significant within each 3-bit group.
inline CurveKey morton_key(const std::array<std::uint32_t, 3>& coords, int order) {
  detail::check_order<3>(order);
  detail::check_coords<3>(coords, order);
  std::uint64_t key = 0;
  for (int level = order - 1; level >= 0; --level) {
    for (int d = 0; d < 3; ++d) key = (key << 1) | ((coords[d] >> level) & 1u);
  }
  return {key, order};
}

inline std::array<std::uint32_t, 3> morton_decode(const CurveKey& key) {
  detail::check_key<3>(key);
  std::array<std::uint32_t, 3> c{};
  for (int level = key.order - 1; level >= 0; --level) {
    for (int d = 0; d < 3; ++d) c[d] = (c[d] << 1) | unsigned((key.value >> (3 * level + 2 - d)) & 1u);
  }
  return c;
}

/// Morton order as a one-state table (discontinuous, for contrast).
inline CurveTable3 morton_table() {
  CurveTable3::State st{};
  for (int p = 0; p < 8; ++p) st[p] = {std::uint8_t(p), 0};
  return CurveTable3("morton", {st});
}

}  // namespace lbkit
