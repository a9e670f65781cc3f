#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "lbkit/error.hpp"
#include "lbkit/grid/graph.hpp"
#include "lbkit/grid/mesh_io.hpp"
#include "lbkit/grid/synthetic.hpp"
#include "lbkit/metrics/metrics.hpp"
#include "lbkit/partition/partition.hpp"
#include "lbkit/report/render.hpp"

namespace lbkit {

/// Slice rendered for every successful row.
struct RenderRequest {
  int axis = 2;
  /// Finest-level index; negative selects the middle plane.
  std::int64_t index = -1;
};

struct ExperimentConfig {
  /// Either a generator preset (with `mesh_seed`) or a mesh file.
  std::string preset;
  std::uint64_t mesh_seed = 0;
  std::filesystem::path mesh_file;
  /// CLI method strings; a bare "hsfc" expands over `curves`.
  std::vector<std::string> methods;
  std::vector<std::string> curves;
  std::vector<int> n_parts;
  std::vector<std::uint64_t> seeds{0};
  std::filesystem::path output_dir = ".";
  double delta = 0.02;
  std::optional<RenderRequest> render;

  void validate() const {
    if (preset.empty() == mesh_file.empty()) {
      throw ValidationError("config needs exactly one of mesh.preset and mesh.file");
    }
    if (methods.empty()) throw ValidationError("config lists no methods");
    if (n_parts.empty()) throw ValidationError("config lists no part counts");
    if (seeds.empty()) throw ValidationError("config lists no seeds");
    for (int n : n_parts) {
      if (n < 1) throw ValidationError("part counts must be >= 1");
    }
    for (const std::string& m : methods) {
      if (m == "hsfc" && curves.empty()) throw ValidationError("method hsfc needs a curves list");
    }
    if (!mesh_file.empty() && !std::filesystem::exists(mesh_file)) {
      throw NotFound("mesh file " + mesh_file.string() + " does not exist");
    }
  }
};

/// Parses the JSON config document:
/// {"mesh": {"preset": "s-like", "seed": 7} or {"file": "mesh.jsonl"},
///  "methods": [...], "curves": [...], "n_parts": [...], "seeds": [...],
///  "output": "dir", "delta": 0.02, "render": {"axis": "z", "index": -1}}.
/// Relative paths are taken relative to `base_dir`.
inline ExperimentConfig parse_experiment_config(std::istream& in,
                                                const std::filesystem::path& base_dir = ".") {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("config: ") + e.what());
  }
  ExperimentConfig c;
  try {
    const auto& mesh = j.at("mesh");
    if (mesh.contains("preset")) {
      c.preset = mesh.at("preset").get<std::string>();
      c.mesh_seed = mesh.value("seed", std::uint64_t(0));
    }
    if (mesh.contains("file")) c.mesh_file = base_dir / mesh.at("file").get<std::string>();
    c.methods = j.at("methods").get<std::vector<std::string>>();
    c.curves = j.value("curves", std::vector<std::string>{});
    c.n_parts = j.at("n_parts").get<std::vector<int>>();
    c.seeds = j.value("seeds", std::vector<std::uint64_t>{0});
    c.output_dir = base_dir / j.value("output", std::string("."));
    c.delta = j.value("delta", 0.02);
    if (j.contains("render")) {
      RenderRequest r;
      const std::string axis = j["render"].value("axis", std::string("z"));
      if (axis != "x" && axis != "y" && axis != "z") throw ValidationError("render axis must be x, y or z");
      r.axis = axis[0] - 'x';
      r.index = j["render"].value("index", std::int64_t(-1));
      c.render = r;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

struct BenchRow {
  std::string method;
  std::string curve;
  int n = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string reason;
  double epsilon = 0.0;
  double edge_cut = 0.0;
  double connectivity_cut = 0.0;
  double max_ghost_weight = 0.0;
  double wall_time_ms = 0.0;

  auto sort_key() const { return std::tie(method, curve, n, seed); }
};

/// One (method, curve) pair per entry: bare "hsfc" expands over `curves`.
inline std::vector<Method> expand_methods(const ExperimentConfig& c) {
  std::vector<Method> out;
  for (const std::string& m : c.methods) {
    if (m == "hsfc") {
      for (const std::string& curve : c.curves) out.push_back(parse_method("hsfc:" + curve));
    } else {
      out.push_back(parse_method(m));
    }
  }
  return out;
}

inline std::string method_family_name(const Method& m) {
  return m.family == MethodFamily::hsfc ? "hsfc" : m.to_string();
}

inline std::string slice_file_name(const BenchRow& r) {
  std::string name = r.method;
  if (!r.curve.empty()) name += "_" + r.curve;
  return name + "_n" + std::to_string(r.n) + "_s" + std::to_string(r.seed) + ".ppm";
}

/// Runs the matrix serially and returns rows sorted by (method, curve, n, seed).
inline std::vector<BenchRow> run_bench(const ExperimentConfig& c, const AmrMesh& mesh) {
  const auto methods = expand_methods(c);
  const NeighborTable nbrs(mesh);
  const Hypergraph graph = build_graph(mesh, nbrs);
  const Hypergraph hypergraph = build_hypergraph(mesh, nbrs);
  std::vector<BenchRow> rows;
  for (const Method& m : methods)
    for (int n : c.n_parts)
      for (std::uint64_t seed : c.seeds) {
        BenchRow row;
        row.method = method_family_name(m);
        row.curve = m.curve;
        row.n = n;
        row.seed = seed;
        try {
          PartitionerParams params;
          params.delta = c.delta;
          params.seed = seed;
          const auto t0 = std::chrono::steady_clock::now();
          PartitionAssignment a;
          if (m.family == MethodFamily::graph) {
            a = multilevel_bisection(graph, n, params, MultilevelMode::graph);
          } else if (m.family == MethodFamily::hypergraph) {
            a = multilevel_bisection(hypergraph, n, params, MultilevelMode::hypergraph);
          } else {
            a = partition_mesh(mesh, m, n, params);
          }
          const auto t1 = std::chrono::steady_clock::now();
          const MetricsReport r = full_report(mesh, nbrs, graph, hypergraph, a);
          row.ok = true;
          row.epsilon = r.epsilon;
          row.edge_cut = r.edge_cut;
          row.connectivity_cut = r.connectivity_cut;
          row.max_ghost_weight = r.max_ghost_weight();
          row.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
          if (c.render) {
            const int axis = c.render->axis;
            const std::int64_t index = c.render->index >= 0
                                           ? c.render->index
                                           : std::int64_t(mesh.fine_dims()[std::size_t(axis)] / 2);
            std::filesystem::create_directories(c.output_dir);
            render_slice(mesh, a, axis, index, c.output_dir / slice_file_name(row));
          }
        } catch (const std::exception& e) {
          row.ok = false;
          row.reason = e.what();
        }
        rows.push_back(std::move(row));
      }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const BenchRow& x, const BenchRow& y) { return x.sort_key() < y.sort_key(); });
  return rows;
}

inline AmrMesh load_experiment_mesh(const ExperimentConfig& c) {
  if (!c.preset.empty()) return generate_synthetic(synthetic_preset(c.preset), c.mesh_seed);
  return load_mesh(c.mesh_file);
}

/// Header plus one row per entry. Failed rows leave the metric columns empty
/// and carry the reason; commas and newlines in reasons become spaces.
inline void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "method,curve,n,seed,epsilon,edge_cut,connectivity_cut,max_ghost_weight,wall_time_ms,status,"
         "reason\n";
  char buf[160];
  for (const BenchRow& r : rows) {
    out << r.method << ',' << r.curve << ',' << r.n << ',' << r.seed << ',';
    if (r.ok) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.3f,ok,", r.epsilon, r.edge_cut,
                    r.connectivity_cut, r.max_ghost_weight, r.wall_time_ms);
      out << buf << '\n';
    } else {
      std::string reason = r.reason;
      std::replace_if(reason.begin(), reason.end(), [](char ch) { return ch == ',' || ch == '\n'; }, ' ');
      out << ",,,,,failed," << reason << '\n';
    }
  }
}

}  // namespace lbkit
