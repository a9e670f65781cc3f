#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lbkit/error.hpp"
#include "lbkit/sfc/curve_table.hpp"

namespace lbkit {

/// Symmetry of the unit cube: q[d] = flip_d ? 1 - p[perm[d]] : p[perm[d]],
/// where flip_d is bit d of `flip`.
template <int D>
struct CubeSymmetry {
  std::array<int, D> perm{};
  unsigned flip = 0;

  static CubeSymmetry identity() {
    CubeSymmetry s;
    for (int d = 0; d < D; ++d) s.perm[d] = d;
    return s;
  }

  unsigned apply_code(unsigned code) const {
    unsigned out = 0;
    for (int d = 0; d < D; ++d) {
      const unsigned bit = ((code >> (D - 1 - perm[d])) & 1u) ^ ((flip >> d) & 1u);
      out |= bit << (D - 1 - d);
    }
    return out;
  }

  /// this ∘ g
  CubeSymmetry then_inner(const CubeSymmetry& g) const {
    CubeSymmetry c;
    c.flip = 0;
    for (int d = 0; d < D; ++d) {
      c.perm[d] = g.perm[perm[d]];
      c.flip |= (((flip >> d) & 1u) ^ ((g.flip >> perm[d]) & 1u)) << d;
    }
    return c;
  }

  friend auto operator<=>(const CubeSymmetry&, const CubeSymmetry&) = default;
};

/// How the sub-curve in one child of the base pattern is obtained from the
/// whole curve: a cube symmetry, optionally traversed backwards.
template <int D>
struct ChildTransform {
  CubeSymmetry<D> symmetry = CubeSymmetry<D>::identity();
  bool reversed = false;
};

/// Self-similar curve over the reflected Gray-code base pattern
/// (subcube codes 0,1,3,2,6,7,5,4 in 3D), one transform per child.
template <int D>
using CurveSpec = std::array<ChildTransform<D>, (1 << D)>;

constexpr unsigned gray_code(unsigned i) { return i ^ (i >> 1); }

namespace detail {

template <int D>
std::vector<typename CurveTable<D>::State> minimize_states(
    const std::vector<typename CurveTable<D>::State>& states) {
  constexpr int N = 1 << D;
  const std::size_t n = states.size();
  std::vector<std::uint32_t> cls(n);
  {
    std::map<std::array<std::uint8_t, N>, std::uint32_t> ids;
    for (std::size_t s = 0; s < n; ++s) {
      std::array<std::uint8_t, N> key{};
      for (int p = 0; p < N; ++p) key[p] = states[s][p].subcube;
      cls[s] = ids.emplace(key, std::uint32_t(ids.size())).first->second;
    }
  }
  std::size_t n_classes = 0;
  for (std::uint32_t c : cls) n_classes = std::max<std::size_t>(n_classes, c + 1);
  for (;;) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::uint32_t> next(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::uint32_t> key{cls[s]};
      for (int p = 0; p < N; ++p) key.push_back(cls[states[s][p].next]);
      next[s] = ids.emplace(std::move(key), std::uint32_t(ids.size())).first->second;
    }
    cls = std::move(next);
    if (ids.size() == n_classes) break;
    n_classes = ids.size();
  }
  // Renumber classes in breadth-first order from the root.
  std::vector<std::int64_t> order_of(n, -1);
  std::vector<std::size_t> rep;
  std::vector<std::size_t> queue{0};
  order_of[cls[0]] = 0;
  rep.push_back(0);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const CurveEntry& e : states[queue[q]]) {
      if (order_of[cls[e.next]] < 0) {
        order_of[cls[e.next]] = std::int64_t(rep.size());
        rep.push_back(e.next);
        queue.push_back(e.next);
      }
    }
  }
  std::vector<typename CurveTable<D>::State> out(rep.size());
  for (std::size_t r = 0; r < rep.size(); ++r) {
    for (int p = 0; p < N; ++p) {
      out[r][p] = {states[rep[r]][p].subcube, std::uint32_t(order_of[cls[states[rep[r]][p].next]])};
    }
  }
  return out;
}

}  // namespace detail

/// State table of the curve defined by `spec`. States are the reachable
/// (symmetry, direction) pairs, merged when they traverse identically.
template <int D>
CurveTable<D> generate_curve_table(std::string name, const CurveSpec<D>& spec) {
  constexpr int N = 1 << D;
  for (const auto& t : spec) {
    std::array<bool, D> seen{};
    for (int d = 0; d < D; ++d) {
      if (t.symmetry.perm[d] < 0 || t.symmetry.perm[d] >= D || seen[t.symmetry.perm[d]]) {
        throw InvalidArgument("child transform is not an axis permutation");
      }
      seen[t.symmetry.perm[d]] = true;
    }
    if (t.symmetry.flip >= (1u << D)) throw InvalidArgument("flip mask out of range");
  }
  using Key = std::pair<CubeSymmetry<D>, bool>;
  std::map<Key, std::uint32_t> ids;
  std::vector<Key> keys{{CubeSymmetry<D>::identity(), false}};
  ids.emplace(keys[0], 0);
  std::vector<typename CurveTable<D>::State> states;
  for (std::size_t s = 0; s < keys.size(); ++s) {
    const auto [g, reversed] = keys[s];
    typename CurveTable<D>::State st{};
    for (int pos = 0; pos < N; ++pos) {
      const int cp = reversed ? N - 1 - pos : pos;
      const Key child{g.then_inner(spec[cp].symmetry), reversed != spec[cp].reversed};
      auto [it, inserted] = ids.emplace(child, std::uint32_t(keys.size()));
      if (inserted) keys.push_back(child);
      st[pos] = {std::uint8_t(g.apply_code(gray_code(unsigned(cp)))), it->second};
    }
    states.push_back(st);
  }
  return CurveTable<D>(std::move(name), detail::minimize_states<D>(states));
}

}  // namespace lbkit
