// Batch front end.  Exit status: 0 success, 1 domain error, 2 usage or
// parse error.

#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "sos/cubes.hpp"
#include "sos/io.hpp"
#include "sos/mesh3d.hpp"
#include "sos/parallel.hpp"
#include "sos/planar.hpp"

namespace {

using nlohmann::json;

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "plain";
  unsigned threads = 1;
  std::string polygon, points, a, b, file, mesh;
  bool oracle = false;
  unsigned grid = 0;
};

bool as_json(const Options& o) { return o.format == "json"; }

void emit_lines(const Options& o, const std::vector<std::string>& lines) {
  if (as_json(o)) {
    std::cout << json{{"results", lines}}.dump() << "\n";
    return;
  }
  for (const auto& l : lines) std::cout << l << "\n";
}

int run_pip(const Options& o) {
  const auto poly_pts = sos::io::parse_points2(sos::io::read_file(o.polygon), o.polygon);
  const auto queries = sos::io::parse_points2(sos::io::read_file(o.points), o.points);
  std::optional<sos::Polygon> poly;
  try {
    poly.emplace(poly_pts);
  } catch (const std::invalid_argument& e) {
    throw DomainError(o.polygon + ": " + e.what());
  }
  std::vector<std::string> out(queries.size());
  sos::parallel_for(queries.size(), o.threads,
                    [&](std::size_t i) { out[i] = sos::to_string(sos::point_in_polygon(queries[i], *poly)); });
  emit_lines(o, out);
  return 0;
}

std::vector<sos::Polyline> load_polylines(const std::string& path, std::uint64_t& next_id) {
  std::vector<sos::Polyline> out;
  for (const auto& pts : sos::io::parse_polylines(sos::io::read_file(path), path)) {
    try {
      out.emplace_back(pts, next_id);
    } catch (const std::invalid_argument& e) {
      throw DomainError(path + ": " + e.what());
    }
    next_id = out.back().next_point_id();
  }
  return out;
}

int run_polyline_x(const Options& o) {
  std::uint64_t next_id = 0;
  const auto red = load_polylines(o.a, next_id);
  const auto blue = load_polylines(o.b, next_id);
  std::vector<std::size_t> per_red(red.size(), 0);
  sos::parallel_for(red.size(), o.threads, [&](std::size_t i) {
    for (const auto& l : blue) per_red[i] += sos::polyline_intersection_count(red[i], l);
  });
  std::size_t total = 0;
  for (auto n : per_red) total += n;
  if (as_json(o))
    std::cout << json{{"count", total}}.dump() << "\n";
  else
    std::cout << total << "\n";
  return 0;
}

json measures_json(const sos::MassProperties& m) {
  return {{"volume", m.volume.to_string()}, {"area", m.area.to_string()}, {"edge", m.edge_length.to_string()}};
}

std::string measures_plain(const sos::MassProperties& m) {
  return "volume=" + m.volume.to_string() + " area=" + m.area.to_string() + " edge=" + m.edge_length.to_string();
}

int run_cubes(const Options& o) {
  const auto parsed = sos::io::parse_cubes(sos::io::read_file(o.file), o.file);
  const sos::CubeSet set(parsed.side, parsed.lows);
  const auto m = sos::union_mass_properties(set, o.threads);
  if (!o.oracle) {
    if (as_json(o))
      std::cout << measures_json(m).dump() << "\n";
    else
      std::cout << measures_plain(m) << "\n";
    return 0;
  }
  const auto ref = sos::compressed_cell_oracle(set);
  if (as_json(o)) {
    json j = measures_json(m);
    j["oracle"] = measures_json(ref);
    j["match"] = m == ref;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << measures_plain(m) << "\n"
              << "oracle " << measures_plain(ref) << "\n"
              << "match=" << (m == ref ? "true" : "false") << "\n";
  }
  return 0;
}

sos::TriMesh load_mesh(const std::string& path) {
  auto off = sos::io::parse_off(sos::io::read_file(path), path);
  return sos::TriMesh(off.vertices, std::move(off.triangles));
}

std::vector<std::string> describe_violations(const std::vector<sos::EdgeViolation>& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(e.describe());
  return out;
}

int run_locate(const Options& o) {
  const auto mesh = load_mesh(o.mesh);
  const auto queries = sos::io::parse_points3(sos::io::read_file(o.points), o.points);
  if (const auto bad = validate_watertight(mesh); !bad.empty()) {
    std::ostringstream msg;
    msg << o.mesh << ": mesh is not watertight (" << bad.size() << " odd edges, first: " << bad[0].describe() << ")";
    throw DomainError(msg.str());
  }
  if (mesh.triangle_count() == 0) throw DomainError(o.mesh + ": mesh has no triangles");
  const unsigned g =
      o.grid != 0 ? o.grid
                  : std::max(1u, static_cast<unsigned>(std::sqrt(static_cast<double>(mesh.triangle_count()))));
  const auto grid = sos::build_grid(mesh, g);
  const auto where = sos::locate_points(mesh, grid, queries, o.threads);
  std::vector<std::string> out;
  out.reserve(where.size());
  for (auto l : where) out.emplace_back(sos::to_string(l));
  emit_lines(o, out);
  return 0;
}

int run_validate(const Options& o) {
  const auto mesh = load_mesh(o.mesh);
  const auto bad = validate_watertight(mesh);
  if (as_json(o)) {
    std::cout << json{{"watertight", bad.empty()},
                      {"vertices", mesh.vertex_count()},
                      {"triangles", mesh.triangle_count()},
                      {"violations", describe_violations(bad)}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << (bad.empty() ? "watertight" : "not watertight") << " vertices=" << mesh.vertex_count()
            << " triangles=" << mesh.triangle_count() << " violations=" << bad.size() << "\n";
  for (const auto& line : describe_violations(bad)) std::cout << line << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact geometry with symbolic perturbation"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "plain or json")->check(CLI::IsMember({"plain", "json"}));
    sub->add_option("--threads", o.threads, "worker threads (0 = all cores)");
    return sub;
  };

  auto* pip = common(app.add_subcommand("pip", "classify points against a polygon"));
  pip->add_option("--polygon", o.polygon)->required()->check(CLI::ExistingFile);
  pip->add_option("--points", o.points)->required()->check(CLI::ExistingFile);

  auto* px = common(app.add_subcommand("polyline-x", "count crossings between two polyline files"));
  px->add_option("--a", o.a)->required()->check(CLI::ExistingFile);
  px->add_option("--b", o.b)->required()->check(CLI::ExistingFile);

  auto* cubes = common(app.add_subcommand("cubes", "volume, area and edge length of a union of cubes"));
  cubes->add_option("--file", o.file)->required()->check(CLI::ExistingFile);
  cubes->add_flag("--oracle", o.oracle, "also run the cell-decomposition reference");

  auto* locate = common(app.add_subcommand("locate", "classify points against a closed triangle mesh"));
  locate->add_option("--mesh", o.mesh)->required()->check(CLI::ExistingFile);
  locate->add_option("--points", o.points)->required()->check(CLI::ExistingFile);
  locate->add_option("--grid", o.grid, "grid resolution per axis (default: sqrt of triangle count)")
      ->check(CLI::PositiveNumber);

  auto* validate = common(app.add_subcommand("validate", "report edges with odd triangle incidence"));
  validate->add_option("--mesh", o.mesh)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*pip) return run_pip(o);
    if (*px) return run_polyline_x(o);
    if (*cubes) return run_cubes(o);
    if (*locate) return run_locate(o);
    if (*validate) return run_validate(o);
  } catch (const sos::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const sos::ContractViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
