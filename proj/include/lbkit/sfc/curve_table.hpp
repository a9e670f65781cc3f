#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lbkit/error.hpp"

namespace lbkit {

struct CurveEntry {
  std::uint8_t subcube = 0;
  std::uint32_t next = 0;

  friend bool operator==(const CurveEntry&, const CurveEntry&) = default;
};

/// Finite-state description of a D-dimensional curve. State s lists, in
/// traversal order, the 2^D subcubes (codes with the x bit most significant)
/// and the state used inside each. State 0 is the root.
///
/// Construction checks only what encode/decode need to stay in bounds; curve
/// properties (permutation, adjacency, continuity) are checked by
/// validate_curve_table.
template <int D>
class CurveTable {
 public:
  static constexpr int kDim = D;
  static constexpr int kChildren = 1 << D;
  using State = std::array<CurveEntry, kChildren>;

  CurveTable(std::string name, std::vector<State> states)
      : name_(std::move(name)), states_(std::move(states)) {
    if (states_.empty()) throw InvalidArgument("curve table needs at least one state");
    position_.resize(states_.size());
    for (std::size_t s = 0; s < states_.size(); ++s) {
      position_[s].fill(kMissing);
      for (int p = kChildren - 1; p >= 0; --p) {
        const CurveEntry& e = states_[s][p];
        if (e.subcube >= kChildren) throw InvalidArgument("subcube code out of range");
        if (e.next >= states_.size()) throw InvalidArgument("next state out of range");
        position_[s][e.subcube] = std::uint8_t(p);
      }
    }
  }

  const std::string& name() const { return name_; }
  std::size_t n_states() const { return states_.size(); }
  const std::vector<State>& states() const { return states_; }
  const State& state(std::size_t s) const { return states_[s]; }

  /// Position of `subcube` in state `s`, or kMissing.
  std::uint8_t position(std::size_t s, unsigned subcube) const { return position_[s][subcube]; }

  static constexpr std::uint8_t kMissing = 0xff;

  friend bool operator==(const CurveTable& a, const CurveTable& b) {
    return a.states_ == b.states_;
  }

 private:
  std::string name_;
  std::vector<State> states_;
  std::vector<std::array<std::uint8_t, kChildren>> position_;
};

using CurveTable3 = CurveTable<3>;
using CurveTable2 = CurveTable<2>;

/// Text dump, one line per state: `state s: (subcube,next) ...`.
template <int D>
void dump_curve_table(const CurveTable<D>& table, std::ostream& out) {
  for (std::size_t s = 0; s < table.n_states(); ++s) {
    out << "state " << s << ':';
    for (const CurveEntry& e : table.state(s)) {
      out << " (" << int(e.subcube) << ',' << e.next << ')';
    }
    out << '\n';
  }
}

template <int D>
std::string dump_curve_table(const CurveTable<D>& table) {
  std::ostringstream out;
  dump_curve_table(table, out);
  return out.str();
}

/// Coordinate transform applied before a curve walk: optional reflection of
/// each input axis, then permutation. Walk coordinate d reads input axis
/// `perm[d]`.
template <int D>
struct AxisMap {
  std::array<int, D> perm{};
  std::array<bool, D> reflect{};

  AxisMap() {
    for (int d = 0; d < D; ++d) perm[d] = d;
  }
  AxisMap(std::array<int, D> p, std::array<bool, D> r = {}) : perm(p), reflect(r) {
    std::array<bool, D> seen{};
    for (int d = 0; d < D; ++d) {
      if (perm[d] < 0 || perm[d] >= D || seen[perm[d]]) {
        throw InvalidArgument("axis permutation is not a bijection");
      }
      seen[perm[d]] = true;
    }
  }

  bool is_identity() const {
    for (int d = 0; d < D; ++d) {
      if (perm[d] != d || reflect[d]) return false;
    }
    return true;
  }

  /// Maps input coordinates in [0, 2^order) to walk coordinates.
  std::array<std::uint32_t, D> apply(const std::array<std::uint32_t, D>& c, int order) const {
    const std::uint32_t top = (std::uint32_t(1) << order) - 1;
    std::array<std::uint32_t, D> out{};
    for (int d = 0; d < D; ++d) {
      const int a = perm[d];
      out[d] = reflect[a] ? top - c[a] : c[a];
    }
    return out;
  }

  std::array<std::uint32_t, D> invert(const std::array<std::uint32_t, D>& w, int order) const {
    const std::uint32_t top = (std::uint32_t(1) << order) - 1;
    std::array<std::uint32_t, D> out{};
    for (int d = 0; d < D; ++d) {
      const int a = perm[d];
      out[a] = reflect[a] ? top - w[d] : w[d];
    }
    return out;
  }

  /// Same map acting on one subcube code (one bit per axis, x most significant).
  unsigned apply_code(unsigned code) const {
    unsigned out = 0;
    for (int d = 0; d < D; ++d) {
      const int a = perm[d];
      const unsigned bit = ((code >> (D - 1 - a)) & 1u) ^ unsigned(reflect[a]);
      out |= bit << (D - 1 - d);
    }
    return out;
  }
};

using AxisPermutation = AxisMap<3>;

/// Table whose plain walk equals the walk of `table` under `axes`.
template <int D>
CurveTable<D> permuted(const CurveTable<D>& table, const AxisMap<D>& axes, std::string name) {
  // New subcube u must map to the old code: axes.apply_code(u) == old.
  std::array<std::uint8_t, (1 << D)> inverse{};
  for (unsigned u = 0; u < (1u << D); ++u) inverse[axes.apply_code(u)] = std::uint8_t(u);
  auto states = table.states();
  for (auto& st : states)
    for (CurveEntry& e : st) e.subcube = inverse[e.subcube];
  return CurveTable<D>(std::move(name), std::move(states));
}

}  // namespace lbkit
