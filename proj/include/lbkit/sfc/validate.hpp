#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "lbkit/sfc/codec.hpp"
#include "lbkit/sfc/curve_table.hpp"

namespace lbkit {

enum class CurveViolationKind { permutation, adjacency, continuity };

struct CurveViolation {
  CurveViolationKind kind;
  std::uint32_t state = 0;  // permutation / adjacency
  int order = 0;            // continuity
  std::uint64_t key = 0;    // continuity: step key -> key + 1
  std::string message;
};

struct CurveValidationReport {
  std::vector<CurveViolation> violations;

  bool ok() const { return violations.empty(); }

  std::size_t count(CurveViolationKind kind) const {
    std::size_t n = 0;
    for (const auto& v : violations) n += v.kind == kind;
    return n;
  }
};

/// Checks every state for a subcube permutation and face-adjacent steps, then
/// decodes all keys at orders 1..max_order and reports every consecutive pair
/// whose cells are not at L1 distance 1. Violations are collected, not thrown.
template <int D>
CurveValidationReport validate_curve_table(const CurveTable<D>& table, int max_order = 4) {
  constexpr int N = 1 << D;
  CurveValidationReport report;
  for (std::size_t s = 0; s < table.n_states(); ++s) {
    const auto& st = table.state(s);
    std::array<int, N> seen{};
    for (const CurveEntry& e : st) ++seen[e.subcube];
    for (int c = 0; c < N; ++c) {
      if (seen[c] != 1) {
        report.violations.push_back(
            {CurveViolationKind::permutation, std::uint32_t(s), 0, 0,
             "state " + std::to_string(s) + ": subcube " + std::to_string(c) + " appears " +
                 std::to_string(seen[c]) + " times"});
      }
    }
    for (int p = 0; p + 1 < N; ++p) {
      const unsigned diff = unsigned(st[p].subcube ^ st[p + 1].subcube);
      if (std::popcount(diff) != 1) {
        report.violations.push_back(
            {CurveViolationKind::adjacency, std::uint32_t(s), 0, 0,
             "state " + std::to_string(s) + ": positions " + std::to_string(p) + "," +
                 std::to_string(p + 1) + " are not face-adjacent"});
      }
    }
  }
  for (int order = 1; order <= max_order; ++order) {
    const std::uint64_t n = std::uint64_t(1) << (D * order);
    auto prev = sfc_decode(table, CurveKey{0, order});
    for (std::uint64_t k = 1; k < n; ++k) {
      const auto cur = sfc_decode(table, CurveKey{k, order});
      long dist = 0;
      for (int d = 0; d < D; ++d) dist += std::labs(long(cur[d]) - long(prev[d]));
      if (dist != 1) {
        report.violations.push_back({CurveViolationKind::continuity, 0, order, k - 1,
                                     "order " + std::to_string(order) + ": step " +
                                         std::to_string(k - 1) + " has L1 length " +
                                         std::to_string(dist)});
      }
      prev = cur;
    }
  }
  return report;
}

}  // namespace lbkit
