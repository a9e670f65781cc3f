#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "lbkit/grid/graph.hpp"
#include "lbkit/grid/mesh.hpp"
#include "lbkit/partition/partition.hpp"
#include "lbkit/sfc/catalogue.hpp"

using namespace lbkit;

namespace {

// ---- independent oracles ----

double max_load(const std::vector<double>& w, const PartitionAssignment& a) {
  std::vector<double> load(a.n_parts, 0.0);
  for (std::size_t i = 0; i < w.size(); ++i) load[a.part[i]] += w[i];
  return *std::max_element(load.begin(), load.end());
}

double brute_makespan(const std::vector<double>& w, int n) {
  std::size_t combos = 1;
  for (std::size_t i = 0; i < w.size(); ++i) combos *= std::size_t(n);
  double best = HUGE_VAL;
  for (std::size_t code = 0; code < combos; ++code) {
    std::vector<double> load(std::size_t(n), 0.0);
    std::size_t c = code;
    for (double x : w) {
      load[c % std::size_t(n)] += x;
      c /= std::size_t(n);
    }
    best = std::min(best, *std::max_element(load.begin(), load.end()));
  }
  return best;
}

double eps_of(const std::vector<double>& w, const PartitionAssignment& a) {
  double total = 0.0;
  for (double x : w) total += x;
  return max_load(w, a) / (total / double(a.n_parts)) - 1.0;
}

struct SmallGraph {
  int n = 0;
  std::vector<std::array<double, 3>> edges;  // u, v, w

  Hypergraph hypergraph() const {
    Hypergraph g(std::vector<double>(std::size_t(n), 1.0));
    for (const auto& e : edges) g.add_edge(std::uint32_t(e[0]), std::uint32_t(e[1]), e[2]);
    return g;
  }
};

double cut_of(const SmallGraph& g, const std::vector<std::uint32_t>& part) {
  double cut = 0.0;
  for (const auto& e : g.edges) {
    if (part[std::size_t(e[0])] != part[std::size_t(e[1])]) cut += e[2];
  }
  return cut;
}

// Minimum cut over all two-way splits of unit vertices with sides of
// floor(n/2) and ceil(n/2) vertices.
double brute_bisection(const SmallGraph& g) {
  double best = HUGE_VAL;
  std::vector<std::uint32_t> part(std::size_t(g.n));
  for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
    const int ones = std::popcount(mask);
    if (ones != g.n / 2 && ones != (g.n + 1) / 2) continue;
    for (int v = 0; v < g.n; ++v) part[std::size_t(v)] = (mask >> v) & 1u;
    best = std::min(best, cut_of(g, part));
  }
  return best;
}

SmallGraph path(int n) {
  SmallGraph g{n, {}};
  for (int v = 0; v + 1 < n; ++v) g.edges.push_back({double(v), double(v + 1), 1.0});
  return g;
}

SmallGraph cycle(int n) {
  SmallGraph g = path(n);
  g.edges.push_back({double(n - 1), 0.0, 1.0});
  return g;
}

SmallGraph two_cliques(int k, double bridge) {
  SmallGraph g{2 * k, {}};
  for (int side = 0; side < 2; ++side)
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) g.edges.push_back({double(side * k + a), double(side * k + b), 1.0});
  g.edges.push_back({double(k - 1), double(k), bridge});
  return g;
}

AmrMesh with_weights(const AmrMesh& mesh, const std::vector<double>& w) {
  auto flags = std::make_unique<bool[]>(mesh.size());
  for (std::size_t c = 0; c < mesh.size(); ++c) flags[c] = mesh.cell(c).is_boundary;
  return mesh.reweighted(w, std::span<const bool>(flags.get(), mesh.size()));
}

// Oracle for a single RCB cut along x: cells ordered by (center x, index), the
// prefix in [1, n-1] closest to half the weight, first on ties.
std::size_t rcb_first_cut_oracle(const AmrMesh& mesh, std::vector<std::size_t>& order) {
  order.resize(mesh.size());
  for (std::size_t c = 0; c < mesh.size(); ++c) order[c] = c;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return mesh.center(a)[0] < mesh.center(b)[0];
  });
  const double target = mesh.total_weight() / 2.0;
  double prefix = 0.0, best_err = HUGE_VAL;
  std::size_t best = 0;
  for (std::size_t k = 0; k < mesh.size(); ++k) {
    if (k >= 1) {
      const double err = std::abs(prefix - target);
      if (err < best_err) {
        best_err = err;
        best = k;
      }
    }
    prefix += mesh.cell(order[k]).weight;
  }
  return best;
}

}  // namespace

// ---- number partitioning ----

TEST(NumberPartition, EqualWeightsTieBreak) {
  const std::vector<double> w{2, 2, 2};
  const auto a = number_partition(w, 2, false);
  EXPECT_EQ(a.part, (std::vector<std::uint32_t>{0, 1, 0}));
  EXPECT_DOUBLE_EQ(max_load(w, a), 4.0);
  EXPECT_DOUBLE_EQ(brute_makespan(w, 2), 4.0);
}

TEST(NumberPartition, GreedyUnsortedExample) {
  const std::vector<double> w{1, 1, 2};
  const auto a = number_partition(w, 2, false);
  EXPECT_DOUBLE_EQ(max_load(w, a), 3.0);
  EXPECT_DOUBLE_EQ(brute_makespan(w, 2), 2.0);
}

TEST(NumberPartition, LptExample) {
  const std::vector<double> w{3, 3, 2, 2, 2};
  const auto a = number_partition(w, 2, true);
  EXPECT_DOUBLE_EQ(max_load(w, a), 7.0);
  EXPECT_DOUBLE_EQ(brute_makespan(w, 2), 6.0);
}

TEST(NumberPartition, ApproximationBoundsOnRandomInstances) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int items = 1 + int(rng() % 9);
    const int n = 2 + int(rng() % 3);
    std::vector<double> w{};
    w.resize(std::size_t(items));
    for (double& x : w) x = double(1 + rng() % 20);
    const double opt = brute_makespan(w, n);
    EXPECT_LE(max_load(w, number_partition(w, n, false)), 2.0 * opt + 1e-9);
    EXPECT_LE(max_load(w, number_partition(w, n, true)), 4.0 / 3.0 * opt + 1e-9);
  }
}

TEST(NumberPartition, Errors) {
  const std::vector<double> w{1.0};
  EXPECT_THROW(number_partition(w, 0, false), InvalidArgument);
  EXPECT_THROW(number_partition({}, 2, false), InvalidArgument);
}

// ---- RCB / RIB ----

TEST(Rcb, UniformCubeHalves) {
  const AmrMesh mesh = build_uniform(4, 4, 4, 0);
  const auto a = rcb(mesh, 2);
  for (std::size_t c = 0; c < mesh.size(); ++c) {
    EXPECT_EQ(a.part[c], mesh.cell(c).ijk[0] < 2 ? 0u : 1u);
  }
}

TEST(Rcb, UniformCubeOctants) {
  const AmrMesh mesh = build_uniform(4, 4, 4, 0);
  const auto a = rcb(mesh, 8);
  std::vector<std::set<std::uint32_t>> octant_parts(8);
  std::vector<int> counts(8, 0);
  for (std::size_t c = 0; c < mesh.size(); ++c) {
    const Ijk ijk = mesh.cell(c).ijk;
    octant_parts[(ijk[0] / 2) * 4 + (ijk[1] / 2) * 2 + ijk[2] / 2].insert(a.part[c]);
    ++counts[a.part[c]];
  }
  std::set<std::uint32_t> used;
  for (const auto& s : octant_parts) {
    ASSERT_EQ(s.size(), 1u);
    used.insert(*s.begin());
  }
  EXPECT_EQ(used.size(), 8u);
  for (int n : counts) EXPECT_EQ(n, 8);
}

TEST(Rcb, HeavyCellMatchesPrefixOracle) {
  const AmrMesh base = build_uniform(4, 4, 4, 0);
  for (std::size_t heavy : {std::size_t(0), std::size_t(21), std::size_t(42), std::size_t(63)}) {
    std::vector<double> w(base.size(), 1.0);
    w[heavy] = 100.0;
    const AmrMesh mesh = with_weights(base, w);
    const auto a = rcb(mesh, 2);
    std::vector<std::size_t> order;
    const std::size_t k = rcb_first_cut_oracle(mesh, order);
    for (std::size_t i = 0; i < order.size(); ++i) {
      EXPECT_EQ(a.part[order[i]], i < k ? 0u : 1u) << "heavy " << heavy << " rank " << i;
    }
    double left = 0.0;
    for (std::size_t c = 0; c < mesh.size(); ++c)
      if (a.part[c] == 0) left += w[c];
    EXPECT_LE(std::abs(left - mesh.total_weight() / 2), 100.0);
  }
}

TEST(Rcb, SplitAccuracyOnRandomWeights) {
  const AmrMesh base = build_uniform(6, 5, 4, 0);
  std::mt19937_64 rng(5);
  for (int n : {2, 3, 5, 7}) {
    std::vector<double> w(base.size());
    for (double& x : w) x = 1.0 + double(rng() % 50);
    const AmrMesh mesh = with_weights(base, w);
    const auto a = rcb(mesh, n);
    a.validate(mesh.size());
    // Every part ends within n max-cell-weights of its share.
    const double wmax = *std::max_element(w.begin(), w.end());
    for (double pw : a.part_weights(w)) EXPECT_LE(std::abs(pw - mesh.total_weight() / n), n * wmax);
  }
}

TEST(Rcb, RectilinearCutsBetweenPlanes) {
  const AmrMesh base = build_uniform(4, 4, 4, 0);
  std::vector<double> w(base.size(), 1.0);
  w[0] = 30.0;
  const AmrMesh mesh = with_weights(base, w);
  PartitionerParams params;
  params.rectilinear = true;
  const auto a = rcb(mesh, 2, params);
  // Some axis separates the parts by a plane.
  bool planar = false;
  for (int d = 0; d < 3 && !planar; ++d) {
    std::int64_t max0 = -1, min1 = 100;
    bool ok = true;
    for (std::size_t c = 0; c < mesh.size(); ++c) {
      const std::int64_t x = mesh.cell(c).ijk[d];
      if (a.part[c] == 0) max0 = std::max(max0, x);
      else min1 = std::min(min1, x);
    }
    for (std::size_t c = 0; c < mesh.size(); ++c) {
      const std::int64_t x = mesh.cell(c).ijk[d];
      if ((a.part[c] == 0) != (x <= max0)) ok = false;
    }
    planar = ok && max0 < min1;
  }
  EXPECT_TRUE(planar);
}

TEST(Rcb, DegenerateSplit) {
  const AmrMesh mesh = build_uniform(2, 1, 1, 0);
  EXPECT_THROW(rcb(mesh, 3), DegenerateSplit);
  EXPECT_THROW(rib(mesh, 3), DegenerateSplit);
}

TEST(Rib, CollinearCutsPerpendicularToLine) {
  const AmrMesh mesh = build_uniform(8, 1, 1, 0);
  const auto a = rib(mesh, 2);
  for (std::size_t c = 0; c < mesh.size(); ++c) {
    EXPECT_EQ(a.part[c], mesh.cell(c).ijk[0] < 4 ? 0u : 1u);
  }
}

TEST(Rib, CubicTieFallsBackToRcb) {
  const AmrMesh mesh = build_uniform(4, 4, 4, 0);
  EXPECT_EQ(rib(mesh, 2), rcb(mesh, 2));
}

TEST(Rib, ElongatedSlabs) {
  const AmrMesh mesh = build_uniform(8, 2, 2, 0);
  const auto a = rib(mesh, 4);
  for (std::size_t c = 0; c < mesh.size(); ++c) {
    EXPECT_EQ(a.part[c], std::uint32_t(mesh.cell(c).ijk[0] / 2));
  }
}

TEST(Rib, MinInertiaAxisOfTilted) {
  // Mass spread along (1,1,0) has its least inertia there.
  std::array<std::array<double, 3>, 3> t{};
  const Vec3 dir{1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = (i == j ? 1.0 : 0.0) - dir[i] * dir[j];
  const Vec3 axis = min_inertia_axis(t);
  EXPECT_NEAR(std::abs(dot(axis, dir)), 1.0, 1e-9);
}

// ---- HSFC ----

TEST(Hsfc, GreedyOvershootStaysThenRefines) {
  const std::vector<double> w{3, 1, 1, 1, 2};
  auto bin = hsfc_greedy_bins(w, 2);
  EXPECT_EQ(bin, (std::vector<std::uint32_t>{0, 0, 0, 1, 1}));
  hsfc_refine_bins(w, bin, 2, 20);
  EXPECT_EQ(bin, (std::vector<std::uint32_t>{0, 0, 1, 1, 1}));
}

TEST(Hsfc, RefinementEvensOutUnitWeights) {
  const std::vector<double> w{1, 1, 1, 1};
  auto bin = hsfc_greedy_bins(w, 2);
  EXPECT_EQ(bin, (std::vector<std::uint32_t>{0, 0, 0, 1}));
  hsfc_refine_bins(w, bin, 2, 20);
  EXPECT_EQ(bin, (std::vector<std::uint32_t>{0, 0, 1, 1}));
}

TEST(Hsfc, RefinementKeepsBinsContiguousAndNeverWorsens) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 5 + rng() % 40;
    const std::uint32_t n = 2 + std::uint32_t(rng() % 6);
    std::vector<double> w(m);
    for (double& x : w) x = double(1 + rng() % 30);
    auto bin = hsfc_greedy_bins(w, n);
    auto worst = [&](const std::vector<std::uint32_t>& b) {
      std::vector<double> load(n, 0.0);
      for (std::size_t i = 0; i < m; ++i) load[b[i]] += w[i];
      return *std::max_element(load.begin(), load.end());
    };
    const double before = worst(bin);
    hsfc_refine_bins(w, bin, n, 20);
    EXPECT_LE(worst(bin), before);
    EXPECT_TRUE(std::is_sorted(bin.begin(), bin.end()));
  }
}

TEST(Hsfc, OctantsOnUniformCubeForEveryCurve) {
  const AmrMesh mesh = build_uniform(8, 8, 8, 0);
  std::vector<std::string> names = curve_names();
  names.push_back("morton");
  for (const std::string& name : names) {
    PartitionerParams params;
    params.curve = name;
    const auto a = hsfc(mesh, 8, params);
    std::vector<std::set<std::uint32_t>> parts_of_octant(8);
    for (std::size_t c = 0; c < mesh.size(); ++c) {
      const Ijk ijk = mesh.cell(c).ijk;
      parts_of_octant[(ijk[0] / 4) * 4 + (ijk[1] / 4) * 2 + ijk[2] / 4].insert(a.part[c]);
    }
    std::set<std::uint32_t> used;
    for (const auto& s : parts_of_octant) {
      EXPECT_EQ(s.size(), 1u) << name;
      used.insert(*s.begin());
    }
    EXPECT_EQ(used.size(), 8u) << name;
  }
}

TEST(Hsfc, LowOrderWarnsAboutDuplicates) {
  const AmrMesh mesh = build_uniform(4, 4, 4, 0);
  PartitionerParams params;
  params.curve = "butz";
  params.order = 1;
  std::vector<std::string> warnings;
  params.on_warning = [&](const std::string& m) { warnings.push_back(m); };
  const auto a = hsfc(mesh, 2, params);
  a.validate(mesh.size());
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(Hsfc, UnknownCurve) {
  const AmrMesh mesh = build_uniform(2, 2, 2, 0);
  PartitionerParams params;
  params.curve = "nope";
  EXPECT_THROW(hsfc(mesh, 2, params), NotFound);
  EXPECT_THROW(parse_method("hsfc:nope"), InvalidArgument);
}

// ---- multilevel ----

TEST(Multilevel, TwoCliquesCutAtBridge) {
  const SmallGraph g = two_cliques(4, 0.25);
  const auto a = multilevel_bisection(g.hypergraph(), 2, {}, MultilevelMode::graph);
  EXPECT_DOUBLE_EQ(cut_of(g, a.part), 0.25);
  EXPECT_DOUBLE_EQ(brute_bisection(g), 0.25);
}

TEST(Multilevel, SingleVertex) {
  Hypergraph g(std::vector<double>{1.0});
  const auto a = multilevel_bisection(g, 1, {}, MultilevelMode::graph);
  EXPECT_EQ(a.part, (std::vector<std::uint32_t>{0}));
}

TEST(Multilevel, PathCutsInTheMiddle) {
  const SmallGraph g = path(6);
  const auto a = multilevel_bisection(g.hypergraph(), 2, {}, MultilevelMode::graph);
  EXPECT_DOUBLE_EQ(cut_of(g, a.part), 1.0);
  EXPECT_EQ(a.part[0], a.part[2]);
  EXPECT_NE(a.part[2], a.part[3]);
  EXPECT_DOUBLE_EQ(eps_of(std::vector<double>(6, 1.0), a), 0.0);
}

TEST(Multilevel, SmallCorpusMatchesExhaustiveOptimum) {
  std::vector<SmallGraph> corpus;
  for (int n = 2; n <= 10; ++n) corpus.push_back(path(n));
  for (int n = 3; n <= 10; ++n) corpus.push_back(cycle(n));
  for (int k = 2; k <= 5; ++k) corpus.push_back(two_cliques(k, 1.0));
  for (const SmallGraph& g : corpus) {
    const auto a = multilevel_bisection(g.hypergraph(), 2, {}, MultilevelMode::graph);
    EXPECT_DOUBLE_EQ(cut_of(g, a.part), brute_bisection(g)) << "n=" << g.n;
  }
}

TEST(Multilevel, RejectsTooManyParts) {
  const SmallGraph g = path(3);
  EXPECT_THROW(multilevel_bisection(g.hypergraph(), 4, {}, MultilevelMode::graph), InvalidArgument);
}

TEST(Multilevel, MeshPartitionIsBalanced) {
  const AmrMesh mesh = build_uniform(10, 10, 10, 0);
  for (auto mode : {MultilevelMode::graph, MultilevelMode::hypergraph}) {
    const Hypergraph hg = mode == MultilevelMode::graph ? build_graph(mesh) : build_hypergraph(mesh);
    const auto a = multilevel_bisection(hg, 8, {}, mode);
    a.validate(mesh.size());
    EXPECT_LE(eps_of(mesh.weights(), a), 0.02 + 1e-9);
  }
}

TEST(Multilevel, Deterministic) {
  const AmrMesh mesh = build_uniform(8, 6, 5, 0);
  const Hypergraph hg = build_hypergraph(mesh);
  PartitionerParams params;
  params.seed = 9;
  EXPECT_EQ(multilevel_bisection(hg, 5, params, MultilevelMode::hypergraph),
            multilevel_bisection(hg, 5, params, MultilevelMode::hypergraph));
}

// ---- fm_refine ----

TEST(FmRefine, IdempotentAtLocalOptimum) {
  const SmallGraph g = two_cliques(4, 1.0);
  const Hypergraph hg = g.hypergraph();
  const PartitionAssignment best{2, {0, 0, 0, 0, 1, 1, 1, 1}};
  EXPECT_EQ(fm_refine(hg, best, {}, MultilevelMode::graph), best);
  const auto once = multilevel_bisection(hg, 2, {}, MultilevelMode::graph);
  const auto twice = fm_refine(hg, once, {}, MultilevelMode::graph);
  EXPECT_EQ(fm_refine(hg, twice, {}, MultilevelMode::graph), twice);
}

TEST(FmRefine, RevertsSwappedPair) {
  // Heavy edges 0-1 and 2-3, light edge 1-2; vertices 1 and 2 swapped.
  SmallGraph g{4, {{0, 1, 10.0}, {2, 3, 10.0}, {1, 2, 1.0}}};
  const PartitionAssignment swapped{2, {0, 1, 0, 1}};
  const auto out = fm_refine(g.hypergraph(), swapped, {}, MultilevelMode::graph);
  EXPECT_DOUBLE_EQ(cut_of(g, swapped.part), 21.0);
  EXPECT_DOUBLE_EQ(cut_of(g, out.part), 1.0);
  EXPECT_EQ(out.part[0], out.part[1]);
  EXPECT_EQ(out.part[2], out.part[3]);
}

TEST(FmRefine, NeverRaisesCutOnRandomInstances) {
  std::mt19937_64 rng(17);
  const double delta = 0.02;
  for (int trial = 0; trial < 100; ++trial) {
    SmallGraph g{4 + int(rng() % 7), {}};
    for (int u = 0; u < g.n; ++u)
      for (int v = u + 1; v < g.n; ++v)
        if (rng() % 3 == 0) g.edges.push_back({double(u), double(v), double(1 + rng() % 9)});
    PartitionAssignment a{2, std::vector<std::uint32_t>(std::size_t(g.n))};
    for (auto& p : a.part) p = std::uint32_t(rng() % 2);
    const auto out = fm_refine(g.hypergraph(), a, {}, MultilevelMode::graph);
    const std::vector<double> w(std::size_t(g.n), 1.0);
    EXPECT_LE(cut_of(g, out.part), cut_of(g, a.part));
    EXPECT_LE(eps_of(w, out), std::max(eps_of(w, a), delta) + 1e-12);
    EXPECT_EQ(fm_refine(g.hypergraph(), out, {}, MultilevelMode::graph), out);
  }
}

TEST(FmRefine, MorePartsRejected) {
  const SmallGraph g = path(4);
  const PartitionAssignment a{3, {0, 1, 2, 0}};
  EXPECT_THROW(fm_refine(g.hypergraph(), a, {}, MultilevelMode::graph), InvalidArgument);
}

// ---- shared properties ----

TEST(Partitioners, TotalDeterministicAndScaleFree) {
  const AmrMesh base = build_uniform(6, 6, 4, 1);
  std::mt19937_64 rng(23);
  std::vector<double> w(base.size());
  // Integer weights keep every sum exact under scaling, so ties survive.
  for (double& x : w) x = double(1 + rng() % 100);
  const AmrMesh mesh = with_weights(base, w);
  std::vector<double> w3(w);
  for (double& x : w3) x *= 3.0;
  const AmrMesh scaled = with_weights(base, w3);
  for (const char* m : {"greedy", "lpt", "rcb", "rib", "hsfc:butz", "hsfc:morton", "graph", "hypergraph"}) {
    const auto a = partition_mesh(mesh, m, 6);
    a.validate(mesh.size());
    EXPECT_EQ(a.n_parts, 6u) << m;
    EXPECT_EQ(a, partition_mesh(mesh, m, 6)) << m;
    EXPECT_EQ(a, partition_mesh(scaled, m, 6)) << m;
  }
}

TEST(Partitioners, MethodParsing) {
  EXPECT_EQ(parse_method("hsfc:butz").to_string(), "hsfc:butz");
  EXPECT_EQ(parse_method("hypergraph").family, MethodFamily::hypergraph);
  EXPECT_THROW(parse_method("kway"), InvalidArgument);
  EXPECT_THROW(parse_method("hsfc:"), InvalidArgument);
}

TEST(Partitioners, ParamsValidation) {
  const AmrMesh mesh = build_uniform(2, 2, 2, 0);
  PartitionerParams p;
  p.delta = 0.0;
  EXPECT_THROW(rcb(mesh, 2, p), InvalidArgument);
  p = {};
  p.stop_size = 1;
  EXPECT_THROW(hsfc(mesh, 2, p), InvalidArgument);
}

TEST(Assignment, CsvRoundTripAndErrors) {
  const AmrMesh mesh = build_uniform(2, 2, 2, 0);
  const auto a = rcb(mesh, 4);
  std::stringstream s;
  write_assignment(mesh, a, s);
  EXPECT_EQ(read_assignment(mesh, s, 4), a);

  std::istringstream bad_header("id,part\n");
  EXPECT_THROW(read_assignment(mesh, bad_header), ParseError);
  std::istringstream missing("cell_id,part\n0,1\n");
  EXPECT_THROW(read_assignment(mesh, missing), ValidationError);
  std::istringstream junk("cell_id,part\n0,x\n");
  try {
    read_assignment(mesh, junk);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}
