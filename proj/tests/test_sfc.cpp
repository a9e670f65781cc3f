#include <cstdlib>
#include <set>

#include <gtest/gtest.h>

#include "lbkit/sfc/catalogue.hpp"
#include "lbkit/sfc/codec.hpp"
#include "lbkit/sfc/validate.hpp"

using namespace lbkit;

namespace {

using C3 = std::array<std::uint32_t, 3>;

int l1(const C3& a, const C3& b) {
  int s = 0;
  for (int d = 0; d < 3; ++d) s += std::abs(int(a[d]) - int(b[d]));
  return s;
}

bool is_corner(const C3& c, int order) {
  const std::uint32_t top = (1u << order) - 1;
  for (auto v : c) {
    if (v != 0 && v != top) return false;
  }
  return true;
}

}  // namespace

TEST(Catalogue, AllTablesValidate) {
  for (const auto& name : curve_names()) {
    const CurveTable3 t = curve_table(name);
    const auto report = validate_curve_table(t, 4);
    EXPECT_TRUE(report.ok()) << name << ": " << report.violations.front().message;
  }
}

TEST(Catalogue, RootStateIsGrayPattern) {
  const CurveTable3 t = curve_table("butz");
  const std::array<int, 8> gray{0, 1, 3, 2, 6, 7, 5, 4};
  for (int p = 0; p < 8; ++p) EXPECT_EQ(t.state(0)[p].subcube, gray[p]);
}

TEST(Catalogue, UnknownName) {
  EXPECT_THROW(curve_table("foo"), NotFound);
  EXPECT_THROW(curve_spec("morton"), NotFound);
}

TEST(Catalogue, OctreeOrderIsButzWithSwappedAxes) {
  const CurveTable3 butz = curve_table("butz");
  const CurveTable3 oct = curve_table("octree_order");
  EXPECT_NE(butz, oct);
  for (std::uint32_t x = 0; x < 8; ++x)
    for (std::uint32_t y = 0; y < 8; ++y)
      for (std::uint32_t z = 0; z < 8; ++z) {
        EXPECT_EQ(sfc_encode(oct, C3{x, y, z}, 3),
                  sfc_encode(butz, C3{x, y, z}, 3, kOctreeOrderAxes));
      }
}

TEST(Catalogue, DumpFormat) {
  const std::string dump = dump_curve_table(curve_table("butz"));
  EXPECT_EQ(dump.rfind("state 0: (0,", 0), 0u);
  std::size_t lines = 0;
  for (char c : dump) lines += c == '\n';
  EXPECT_EQ(lines, curve_table("butz").n_states());
}

TEST(Codec, RoundTripAllCurves) {
  for (const auto& name : curve_names()) {
    const CurveTable3 t = curve_table(name);
    for (int order = 1; order <= 4; ++order) {
      const std::uint64_t n = std::uint64_t(1) << (3 * order);
      std::set<C3> seen;
      for (std::uint64_t k = 0; k < n; ++k) {
        const C3 c = sfc_decode(t, CurveKey{k, order});
        ASSERT_EQ(sfc_encode(t, c, order).value, k) << name;
        seen.insert(c);
      }
      EXPECT_EQ(seen.size(), n);
    }
  }
}

TEST(Codec, ButzOrderOneFaceAdjacent) {
  const CurveTable3 t = curve_table("butz");
  for (std::uint64_t k = 0; k + 1 < 8; ++k) {
    EXPECT_EQ(l1(sfc_decode(t, CurveKey{k, 1}), sfc_decode(t, CurveKey{k + 1, 1})), 1);
  }
}

TEST(Codec, EndpointsAreCorners) {
  for (const auto& name : curve_names()) {
    const CurveTable3 t = curve_table(name);
    for (int order = 1; order <= 4; ++order) {
      const std::uint64_t last = (std::uint64_t(1) << (3 * order)) - 1;
      EXPECT_TRUE(is_corner(sfc_decode(t, CurveKey{0, order}), order)) << name;
      EXPECT_TRUE(is_corner(sfc_decode(t, CurveKey{last, order}), order)) << name;
    }
  }
}

TEST(Codec, SelfSimilarFirstOctant) {
  for (const auto& name : curve_names()) {
    const CurveTable3 t = curve_table(name);
    const int order = 3;
    const C3 first = sfc_decode(t, CurveKey{0, order});
    for (std::uint64_t k = 0; k < 64; ++k) {
      const C3 c = sfc_decode(t, CurveKey{k, order});
      for (int d = 0; d < 3; ++d) EXPECT_EQ(c[d] >> 2, first[d] >> 2) << name;
    }
  }
}

TEST(Codec, AxisPermutationEquivariance) {
  const CurveTable3 t = curve_table("butz");
  const AxisPermutation axes(std::array<int, 3>{1, 2, 0}, {true, false, false});
  const int order = 3;
  for (std::uint32_t x = 0; x < 8; ++x)
    for (std::uint32_t y = 0; y < 8; ++y)
      for (std::uint32_t z = 0; z < 8; ++z) {
        const C3 c{x, y, z};
        const CurveKey k = sfc_encode(t, c, order, axes);
        EXPECT_EQ(k, sfc_encode(t, axes.apply(c, order), order));
        EXPECT_EQ(sfc_decode(t, k, axes), c);
      }
  EXPECT_THROW(AxisPermutation(std::array<int, 3>{0, 0, 1}), InvalidArgument);
}

TEST(Codec, RangeErrors) {
  const CurveTable3 t = curve_table("butz");
  EXPECT_THROW(sfc_encode(t, C3{8, 0, 0}, 3), InvalidArgument);
  EXPECT_THROW(sfc_decode(t, CurveKey{512, 3}), InvalidArgument);
  EXPECT_THROW(sfc_encode(t, C3{0, 0, 0}, 0), InvalidArgument);
  EXPECT_THROW(sfc_encode(t, C3{0, 0, 0}, 22), InvalidArgument);
  EXPECT_NO_THROW(sfc_encode(t, C3{(1u << 21) - 1, 0, 5}, 21));
}

TEST(Morton, BitLayoutAndJump) {
  EXPECT_EQ(morton_key(C3{1, 0, 0}, 1).value, 4u);
  EXPECT_EQ(morton_key(C3{0, 1, 0}, 1).value, 2u);
  EXPECT_EQ(morton_key(C3{0, 0, 1}, 1).value, 1u);
  const C3 a = morton_decode(CurveKey{3, 1});
  const C3 b = morton_decode(CurveKey{4, 1});
  EXPECT_EQ(a, (C3{0, 1, 1}));
  EXPECT_EQ(b, (C3{1, 0, 0}));
  EXPECT_EQ(l1(a, b), 3);
  EXPECT_THROW(morton_key(C3{2, 0, 0}, 1), InvalidArgument);
  EXPECT_THROW(morton_decode(CurveKey{8, 1}), InvalidArgument);
}

TEST(Morton, RoundTripAndTableAgree) {
  const CurveTable3 z = morton_table();
  for (std::uint32_t x = 0; x < 8; ++x)
    for (std::uint32_t y = 0; y < 8; ++y)
      for (std::uint32_t w = 0; w < 8; ++w) {
        const C3 c{x, y, w};
        const CurveKey k = morton_key(c, 3);
        EXPECT_EQ(morton_decode(k), c);
        EXPECT_EQ(sfc_encode(z, c, 3), k);
      }
}

TEST(Validation, MortonHasContinuityViolations) {
  const auto report = validate_curve_table(morton_table(), 4);
  EXPECT_GT(report.count(CurveViolationKind::continuity), 0u);
  EXPECT_EQ(report.count(CurveViolationKind::permutation), 0u);
}

TEST(Validation, DuplicatedSubcube) {
  auto states = curve_table("butz").states();
  states[0][3].subcube = states[0][2].subcube;
  const CurveTable3 broken("broken", states);
  EXPECT_GT(validate_curve_table(broken, 2).count(CurveViolationKind::permutation), 0u);
}

TEST(Validation, Hilbert2d) {
  const CurveTable2 h = hilbert2d_table();
  EXPECT_EQ(h.n_states(), 4u);
  EXPECT_TRUE(validate_curve_table(h, 6).ok());
}

TEST(Generator, RejectsBadTransforms) {
  CurveSpec<3> spec = curve_spec("butz");
  spec[2].symmetry.perm = {0, 0, 2};
  EXPECT_THROW(generate_curve_table<3>("x", spec), InvalidArgument);
}
