// lbkit command line: gen, partition, bench, dilation, render.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "lbkit/error.hpp"
#include "lbkit/grid/mesh_io.hpp"
#include "lbkit/grid/synthetic.hpp"
#include "lbkit/locality/dilation.hpp"
#include "lbkit/partition/partition.hpp"
#include "lbkit/report/bench.hpp"
#include "lbkit/report/render.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitAllFailed = 3;

int axis_index(const std::string& axis) {
  if (axis == "x") return 0;
  if (axis == "y") return 1;
  if (axis == "z") return 2;
  throw lbkit::InvalidArgument("axis must be x, y or z");
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lbkit::InvalidArgument("cannot write " + path);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Load balancing toolkit for weighted AMR meshes"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a synthetic mesh (JSON lines)");
  std::string gen_preset = "s-like", gen_out;
  std::uint64_t gen_seed = 0;
  gen->add_option("--preset", gen_preset, "trivial, small or s-like")->capture_default_str();
  gen->add_option("--seed", gen_seed, "Generator seed")->capture_default_str();
  gen->add_option("-o,--output", gen_out, "Output mesh file")->required();

  // partition
  auto* part = app.add_subcommand("partition", "Partition a mesh and write cell_id,part CSV");
  std::string part_method, part_mesh, part_out, part_report;
  int part_n = 0, part_order = 0;
  lbkit::PartitionerParams part_params;
  part->add_option("--method", part_method, "greedy, lpt, rcb, rib, hsfc:<curve>, graph, hypergraph")
      ->required();
  part->add_option("--parts", part_n, "Number of parts")->required();
  part->add_option("--seed", part_params.seed, "RNG seed")->capture_default_str();
  part->add_option("--delta", part_params.delta, "Imbalance tolerance")->capture_default_str();
  part->add_option("--order", part_order, "HSFC curve order (0 = automatic)")->capture_default_str();
  part->add_flag("--rectilinear", part_params.rectilinear, "RCB cuts between coordinate planes");
  part->add_option("-o,--output", part_out, "Assignment CSV (default stdout)");
  part->add_option("--report", part_report, "Also write a JSON metrics report");
  part->add_option("mesh", part_mesh, "Mesh file")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Run a method x curve x parts x seed matrix");
  std::string bench_config, bench_out;
  bench->add_option("config", bench_config, "JSON experiment config")->required();
  bench->add_option("-o,--output", bench_out, "Result CSV (default <output dir>/results.csv)");

  // dilation
  auto* dil = app.add_subcommand("dilation", "Discrete dilation estimates as CSV");
  std::string dil_curve = "all", dil_p = "all", dil_anchor = "gate", dil_out;
  std::vector<int> dil_orders{4};
  int dil_workers = 1;
  dil->add_option("--curve", dil_curve, "Curve name or all")->capture_default_str();
  dil->add_option("--order", dil_orders, "One or more orders")->capture_default_str();
  dil->add_option("--p", dil_p, "1, 2, inf or all")->capture_default_str();
  dil->add_option("--anchor", dil_anchor, "gate or center")->capture_default_str();
  dil->add_option("--workers", dil_workers, "Threads")->capture_default_str();
  dil->add_option("-o,--output", dil_out, "Output CSV (default stdout)");

  // render
  auto* ren = app.add_subcommand("render", "Render an axis-aligned slice as binary PPM");
  std::string ren_mesh, ren_assign, ren_axis = "z", ren_out;
  std::int64_t ren_index = -1;
  ren->add_option("--mesh", ren_mesh, "Mesh file")->required();
  ren->add_option("--assignment", ren_assign, "Assignment CSV")->required();
  ren->add_option("--axis", ren_axis, "x, y or z")->capture_default_str();
  ren->add_option("--index", ren_index, "Finest-level slice index (-1 = middle)")->capture_default_str();
  ren->add_option("-o,--output", ren_out, "Output .ppm")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) {
      const lbkit::AmrMesh mesh = lbkit::generate_synthetic(lbkit::synthetic_preset(gen_preset), gen_seed);
      lbkit::save_mesh(mesh, std::filesystem::path(gen_out));
      std::cerr << "wrote " << mesh.size() << " cells to " << gen_out << '\n';
    } else if (*part) {
      const lbkit::AmrMesh mesh = lbkit::load_mesh(std::filesystem::path(part_mesh));
      part_params.order = part_order;
      part_params.on_warning = [](const std::string& m) { std::cerr << "warning: " << m << '\n'; };
      const auto a = lbkit::partition_mesh(mesh, part_method, part_n, part_params);
      if (part_out.empty()) {
        lbkit::write_assignment(mesh, a, std::cout);
      } else {
        auto out = open_output(part_out);
        lbkit::write_assignment(mesh, a, out);
      }
      if (!part_report.empty()) {
        auto out = open_output(part_report);
        out << lbkit::full_report(mesh, a).to_json().dump(2) << '\n';
      }
    } else if (*bench) {
      std::ifstream in(bench_config);
      if (!in) throw lbkit::NotFound("config " + bench_config + " does not exist");
      const auto config =
          lbkit::parse_experiment_config(in, std::filesystem::path(bench_config).parent_path());
      const lbkit::AmrMesh mesh = lbkit::load_experiment_mesh(config);
      const auto rows = lbkit::run_bench(config, mesh);
      std::filesystem::create_directories(config.output_dir);
      const std::string path = bench_out.empty() ? (config.output_dir / "results.csv").string() : bench_out;
      auto out = open_output(path);
      lbkit::write_bench_csv(rows, out);
      std::size_t failed = 0;
      for (const auto& r : rows) {
        if (!r.ok) {
          ++failed;
          std::cerr << "failed: " << r.method << ' ' << r.curve << " n=" << r.n << ": " << r.reason << '\n';
        }
      }
      std::cerr << rows.size() - failed << " of " << rows.size() << " rows ok, written to " << path << '\n';
      if (!rows.empty() && failed == rows.size()) return kExitAllFailed;
    } else if (*dil) {
      std::vector<std::string> curves;
      if (dil_curve == "all") {
        curves = lbkit::fingerprinted_curve_names();
      } else {
        lbkit::resolve_curve(dil_curve);
        curves = {dil_curve};
      }
      std::vector<lbkit::DilationNorm> norms;
      if (dil_p == "all") {
        norms = {lbkit::DilationNorm::l1, lbkit::DilationNorm::l2, lbkit::DilationNorm::linf};
      } else {
        norms = {lbkit::parse_dilation_norm(dil_p)};
      }
      lbkit::DilationOptions options;
      if (dil_anchor == "center") {
        options.anchor = lbkit::DilationAnchor::cell_center;
      } else if (dil_anchor != "gate") {
        throw lbkit::InvalidArgument("anchor must be gate or center");
      }
      options.workers = dil_workers;
      std::vector<lbkit::DilationEstimate> rows;
      for (const std::string& name : curves) {
        const lbkit::CurveTable3 table = lbkit::resolve_curve(name);
        for (lbkit::DilationNorm p : norms)
          for (int order : dil_orders) rows.push_back(lbkit::discrete_dilation(table, order, p, options));
      }
      if (dil_out.empty()) {
        lbkit::write_dilation_csv(rows, std::cout);
      } else {
        auto out = open_output(dil_out);
        lbkit::write_dilation_csv(rows, out);
      }
    } else if (*ren) {
      const lbkit::AmrMesh mesh = lbkit::load_mesh(std::filesystem::path(ren_mesh));
      std::ifstream in(ren_assign);
      if (!in) throw lbkit::NotFound("assignment " + ren_assign + " does not exist");
      const auto a = lbkit::read_assignment(mesh, in);
      const int axis = axis_index(ren_axis);
      const std::int64_t index =
          ren_index >= 0 ? ren_index : std::int64_t(mesh.fine_dims()[std::size_t(axis)] / 2);
      lbkit::render_slice(mesh, a, axis, index, std::filesystem::path(ren_out));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return 0;
}
