#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "lbkit/grid/mesh_io.hpp"
#include "lbkit/metrics/metrics.hpp"
#include "lbkit/partition/partition.hpp"
#include "lbkit/report/bench.hpp"
#include "lbkit/report/render.hpp"

using namespace lbkit;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lbkit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(const std::string& args) {
    const std::string cmd = "cd '" + dir_.string() + "' && '" LBKIT_CLI_PATH "' " + args + " >out.txt 2>err.txt";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(dir_ / name, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
  }

  static std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
  }

  // Bench CSV with the wall_time_ms column blanked.
  static std::string without_timing(const std::string& csv) {
    std::string out;
    for (const std::string& line : lines(csv)) {
      std::vector<std::string> cols;
      std::stringstream s(line);
      std::string col;
      while (std::getline(s, col, ',')) cols.push_back(col);
      if (cols.size() > 8) cols[8] = "";
      for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
      out += '\n';
    }
    return out;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GenWritesValidMesh) {
  ASSERT_EQ(run("gen --preset small --seed 7 -o mesh.jsonl"), 0);
  const AmrMesh mesh = load_mesh(dir_ / "mesh.jsonl");
  EXPECT_EQ(mesh, generate_synthetic(synthetic_preset("small"), 7));
}

TEST_F(CliTest, PartitionWritesOneRowPerCell) {
  ASSERT_EQ(run("gen --preset small --seed 7 -o mesh.jsonl"), 0);
  ASSERT_EQ(run("partition --method hsfc:beta --parts 64 mesh.jsonl -o a.csv --report r.json"), 0);
  const AmrMesh mesh = load_mesh(dir_ / "mesh.jsonl");
  std::ifstream in(dir_ / "a.csv");
  const auto a = read_assignment(mesh, in, 64);
  EXPECT_EQ(a.size(), mesh.size());
  // The reported imbalance is recomputable from the files.
  const auto report = nlohmann::json::parse(read("r.json"));
  EXPECT_DOUBLE_EQ(report["epsilon"].get<double>(), epsilon(a, mesh.weights()));
}

TEST_F(CliTest, PartitionToStdout) {
  ASSERT_EQ(run("gen --preset trivial -o mesh.jsonl"), 0);
  ASSERT_EQ(run("partition --method rcb --parts 2 mesh.jsonl"), 0);
  const auto rows = lines(read("out.txt"));
  ASSERT_EQ(rows.size(), 65u);
  EXPECT_EQ(rows[0], "cell_id,part");
}

TEST_F(CliTest, DilationMatrix) {
  ASSERT_EQ(run("dilation --curve all --order 4 --p all"), 0);
  const auto rows = lines(read("out.txt"));
  ASSERT_EQ(rows.size(), 19u);
  EXPECT_EQ(rows[0], "curve,p,order,wl_p,cube_root,table1_reference,deviation");
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run(""), 1);
  EXPECT_EQ(run("partition --parts 2"), 1);
  EXPECT_EQ(run("frobnicate"), 1);
  EXPECT_EQ(run("--help"), 0);
  ASSERT_EQ(run("gen --preset trivial -o mesh.jsonl"), 0);
  EXPECT_EQ(run("partition --method kway --parts 2 mesh.jsonl"), 2);
  EXPECT_EQ(run("partition --method rcb --parts 2 missing.jsonl"), 2);
  EXPECT_EQ(run("gen --preset nope -o x.jsonl"), 2);
  write("bad.jsonl", "{\"nx\":1}\n");
  EXPECT_EQ(run("partition --method rcb --parts 2 bad.jsonl"), 2);
  EXPECT_NE(read("err.txt").find("error"), std::string::npos);
}

TEST_F(CliTest, BenchAllRowsFailed) {
  write("cfg.json", R"({"mesh": {"preset": "trivial"}, "methods": ["rcb", "rib"], "n_parts": [1000], "output": "res"})");
  EXPECT_EQ(run("bench cfg.json"), 3);
  const auto rows = lines(read("res/results.csv"));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NE(rows[1].find(",failed,"), std::string::npos);
}

TEST_F(CliTest, BenchRejectsEmptyMethodList) {
  write("cfg.json", R"({"mesh": {"preset": "trivial"}, "methods": [], "n_parts": [2]})");
  EXPECT_EQ(run("bench cfg.json"), 2);
}

TEST_F(CliTest, BenchSingleRcbRow) {
  write("cfg.json", R"({"mesh": {"preset": "trivial"}, "methods": ["rcb"], "n_parts": [2], "output": "res"})");
  ASSERT_EQ(run("bench cfg.json"), 0);
  const auto rows = lines(read("res/results.csv"));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0],
            "method,curve,n,seed,epsilon,edge_cut,connectivity_cut,max_ghost_weight,wall_time_ms,status,reason");
  EXPECT_EQ(rows[1].rfind("rcb,,2,0,0,", 0), 0u) << rows[1];
}

TEST_F(CliTest, BenchIsDeterministic) {
  const std::string cfg =
      R"({"mesh": {"preset": "small", "seed": 2}, "methods": ["rcb", "hsfc", "hypergraph", "greedy"],
          "curves": ["morton", "butz"], "n_parts": [3, 8], "seeds": [0, 5], "output": "OUT",
          "render": {"axis": "y"}})";
  for (const char* out : {"a", "b"}) {
    std::string c = cfg;
    c.replace(c.find("OUT"), 3, out);
    write(std::string(out) + ".json", c);
    ASSERT_EQ(run(std::string("bench ") + out + ".json"), 0);
  }
  const std::string a = read("a/results.csv"), b = read("b/results.csv");
  EXPECT_EQ(lines(a).size(), 1u + 5u * 2u * 2u);
  EXPECT_EQ(without_timing(a), without_timing(b));
  std::size_t images = 0;
  for (const auto& entry : fs::directory_iterator(dir_ / "a")) {
    if (entry.path().extension() != ".ppm") continue;
    ++images;
    EXPECT_EQ(read("a/" + entry.path().filename().string()), read("b/" + entry.path().filename().string()));
  }
  EXPECT_EQ(images, 20u);
  // Rows are sorted by method, curve, n, seed.
  const auto rows = lines(a);
  EXPECT_EQ(rows[1].rfind("greedy,,3,0,", 0), 0u);
  EXPECT_EQ(rows[5].rfind("hsfc,butz,3,0,", 0), 0u);
}

TEST_F(CliTest, RenderWritesPpm) {
  ASSERT_EQ(run("gen --preset trivial -o mesh.jsonl"), 0);
  ASSERT_EQ(run("partition --method rcb --parts 8 mesh.jsonl -o a.csv"), 0);
  ASSERT_EQ(run("render --mesh mesh.jsonl --assignment a.csv --axis z --index 1 -o s.ppm"), 0);
  const std::string img = read("s.ppm");
  EXPECT_EQ(img.substr(0, 11), "P6\n4 4\n255\n");
  EXPECT_EQ(img.size(), 11u + 4 * 4 * 3);
  EXPECT_EQ(run("render --mesh mesh.jsonl --assignment a.csv --axis z --index 4 -o s.ppm"), 2);
}

TEST(Render, SinglePartIsMonochrome) {
  const AmrMesh mesh = build_uniform(4, 4, 4, 1);
  const PartitionAssignment a{1, std::vector<std::uint32_t>(mesh.size(), 0)};
  const SliceImage img = render_slice(mesh, a, 2, 1);
  EXPECT_EQ(img.width, 8u);
  EXPECT_EQ(img.height, 8u);
  for (const Rgb& p : img.pixels) EXPECT_EQ(p, palette_color(0));
}

TEST(Render, OctantsGiveFourQuadrants) {
  const AmrMesh mesh = build_uniform(4, 4, 4, 0);
  const auto a = rcb(mesh, 8);
  const SliceImage img = render_slice(mesh, a, 0, 1);
  std::set<Rgb> colors;
  for (std::size_t row = 0; row < 4; ++row)
    for (std::size_t col = 0; col < 4; ++col) {
      const Rgb p = img.pixels[row * 4 + col];
      colors.insert(p);
      // Constant on each 2x2 quadrant.
      EXPECT_EQ(p, img.pixels[(row / 2 * 2) * 4 + col / 2 * 2]);
    }
  EXPECT_EQ(colors.size(), 4u);
}

TEST(Render, PaletteWrapsAt64) {
  EXPECT_EQ(palette_color(0), palette_color(64));
  EXPECT_EQ(palette_color(5), palette_color(133));
  std::set<Rgb> all;
  for (std::uint32_t k = 0; k < 64; ++k) all.insert(palette_color(k));
  EXPECT_EQ(all.size(), 64u);
}

TEST(Render, RefinedCellsFillTheirPixels) {
  const AmrMesh mesh = refine(build_uniform(2, 2, 2, 1), [](const Vec3& c) { return c[0] < 1.0; }, 1);
  PartitionAssignment a{64, std::vector<std::uint32_t>(mesh.size())};
  for (std::size_t c = 0; c < mesh.size(); ++c) a.part[c] = std::uint32_t(c);
  const SliceImage img = render_slice(mesh, a, 2, 0);
  ASSERT_EQ(img.width, 4u);
  // Right half holds level-0 cells: 2x2 pixel blocks.
  EXPECT_EQ(img.pixels[0 * 4 + 2], img.pixels[1 * 4 + 3]);
  // Left half holds level-1 cells: every pixel differs from its neighbor.
  EXPECT_NE(img.pixels[0 * 4 + 0], img.pixels[0 * 4 + 1]);
}

TEST(Render, OutOfRangeSlice) {
  const AmrMesh mesh = build_uniform(2, 2, 2, 0);
  const PartitionAssignment a{1, std::vector<std::uint32_t>(mesh.size(), 0)};
  EXPECT_THROW(render_slice(mesh, a, 2, 2), InvalidArgument);
  EXPECT_THROW(render_slice(mesh, a, 3, 0), InvalidArgument);
}
