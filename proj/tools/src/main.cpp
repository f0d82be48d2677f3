// h2r: command-line front end for the H^2 x R vertical-graph toolkit.
//
// Grammar:  h2r <command> [--config FILE] key=value ...
// Commands: verify, solve, curvature, area, gaussmap, export.
// Exit codes: 0 success, 1 property/convergence failure, 2 usage/config error.
// The H2R_OUTPUT_DIR environment variable prefixes relative output paths.

#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "h2r/ambient.hpp"
#include "h2r/catalog.hpp"
#include "h2r/config.hpp"
#include "h2r/graph_shape.hpp"
#include "h2r/grid.hpp"
#include "h2r/mesh.hpp"
#include "h2r/sampling.hpp"
#include "h2r/solve.hpp"
#include "h2r/variational.hpp"
#include "h2r/verify.hpp"
#include "io_util.hpp"

namespace {

using namespace h2r;
using detail::atomic_write;
using detail::format_g17;

void print_kv(std::ostream& out, const std::string& key, double value) {
  out << key << " = " << format_g17(value) << '\n';
}

void print_christoffels(std::ostream& out, const DomainPoint& q) {
  const ChristoffelTable G = christoffels(q);
  out << "# Christoffel symbols at (x, y) = (" << format_g17(q.x) << ", " << format_g17(q.y)
      << "), 1-based labels\n";
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (G(k, i, j) != 0.0)
          out << "gamma^" << k + 1 << "_" << i + 1 << j + 1 << " = " << format_g17(G(k, i, j))
              << '\n';
}

int cmd_verify(const JobConfig& job) {
  const SolutionSpec spec = job.require_spec();
  const ExpectedProperties props = list_expected_properties(spec);
  const std::optional<Region> region = job.get_region("region");
  const std::optional<std::pair<double, double>> urange = job.get_interval("urange");
  const int points = job.get_int("points", 500);
  if (points < 1) throw ConfigError("points must be positive");
  if (props.graph && !region)
    throw ConfigError("verify: graph families need region=[x0,x1]x[y0,y1]");
  if (props.vertical && !urange) throw ConfigError("verify: vertical families need urange=[u0,u1]");

  const VerifyReport rep = verify_member(spec, region, urange, points);
  std::cout << rep.to_text();
  return rep.all_pass() ? 0 : 1;
}

int cmd_solve(const JobConfig& job) {
  const Region region = job.require_region("region");
  const int nx = job.require_int("nx"), ny = job.require_int("ny");
  if (nx < 3 || ny < 3) throw ConfigError("solve: need nx, ny >= 3");

  SolveOptions opts;
  opts.tol = job.get_double("tol", opts.tol);
  opts.max_iter = job.get_int("max_iter", opts.max_iter);
  if (!(opts.tol > 0.0) || opts.max_iter < 0) throw ConfigError("solve: bad tol or max_iter");

  GridField boundary(region, nx, ny);
  if (job.has("family")) {
    const SolutionSpec spec = job.require_spec();
    if (!is_graph_family(spec.family))
      throw ConfigError("solve: boundary trace needs a graph family");
    boundary = tabulate_boundary(region, nx, ny,
                                 [&](const DomainPoint& p) { return jets(spec, p).f; });
  } else {
    // Explicit per-edge data.  bottom/top hold nx values (j = 0 / j = ny-1),
    // left/right hold ny values; left/right are applied last and own the
    // corners.
    for (const char* key : {"bottom", "top", "left", "right"})
      if (!job.has(key))
        throw ConfigError("solve: give either family=... or all of bottom/top/left/right");
    const auto bottom = job.require_double_list("bottom");
    const auto top = job.require_double_list("top");
    const auto left = job.require_double_list("left");
    const auto right = job.require_double_list("right");
    if (static_cast<int>(bottom.size()) != nx || static_cast<int>(top.size()) != nx)
      throw ConfigError("solve: bottom/top need exactly nx values");
    if (static_cast<int>(left.size()) != ny || static_cast<int>(right.size()) != ny)
      throw ConfigError("solve: left/right need exactly ny values");
    for (int i = 0; i < nx; ++i) {
      boundary.at(i, 0) = bottom[i];
      boundary.at(i, ny - 1) = top[i];
    }
    for (int j = 0; j < ny; ++j) {
      boundary.at(0, j) = left[j];
      boundary.at(nx - 1, j) = right[j];
    }
  }

  const std::string out_path = resolve_output_path(job.get_string("out", "solution.csv"));
  const std::optional<std::string> report_path =
      job.has("report") ? std::optional(resolve_output_path(job.require_string("report")))
                        : std::nullopt;

  try {
    const auto [solution, report] = solve_dirichlet(boundary, opts);
    write_grid_csv(solution, out_path);
    if (report_path) atomic_write(*report_path, report.to_text());
    std::cout << report.to_text();
    std::cout << "solution = " << out_path << '\n';
    return 0;
  } catch (const NonConvergence& e) {
    if (report_path) atomic_write(*report_path, e.report.to_text());
    std::cout << e.report.to_text();
    std::cerr << "solve: " << e.what() << '\n';
    return 1;
  } catch (const SingularJacobian& e) {
    std::cerr << "solve: " << e.what() << '\n';
    return 1;
  }
}

int cmd_curvature(const JobConfig& job) {
  const SolutionSpec spec = job.require_spec();
  const auto at = job.require_double_list("at");
  std::ostringstream out;
  out << "family = " << family_name(spec.family) << '\n';

  if (is_graph_family(spec.family)) {
    if (at.size() != 2) throw ConfigError("curvature: graph families need at=x,y");
    if (!(at[1] > 0.0)) throw ConfigError("curvature: need y > 0");
    const DomainPoint p(at[0], at[1]);
    if (!admissible(spec, p))
      throw ConfigError("curvature: point outside the admissible domain");
    const Jet3 j = jets(spec, p);
    const SurfaceData d = surface_data(p, j);
    const ShapeOperator A = shape_operator(p, j);
    const auto [k1, k2] = principal_curvatures(A);
    print_kv(out, "x", p.x);
    print_kv(out, "y", p.y);
    print_kv(out, "f", j.f);
    print_kv(out, "fx", j.fx);
    print_kv(out, "fy", j.fy);
    print_kv(out, "E", d.E);
    print_kv(out, "F", d.F);
    print_kv(out, "G", d.G);
    print_kv(out, "L", d.L);
    print_kv(out, "M", d.M);
    print_kv(out, "N", d.N);
    print_kv(out, "w", d.w);
    print_kv(out, "xi1", d.normal.e1);
    print_kv(out, "xi2", d.normal.e2);
    print_kv(out, "xi3", d.normal.e3);
    print_kv(out, "H", mean_curvature(p, j));
    print_kv(out, "minimal_residual", minimal_residual(p, j));
    print_kv(out, "a11", A.a11);
    print_kv(out, "a12", A.a12);
    print_kv(out, "a21", A.a21);
    print_kv(out, "a22", A.a22);
    print_kv(out, "k1", k1);
    print_kv(out, "k2", k2);
    print_christoffels(out, p);
  } else {
    if (at.size() != 1) throw ConfigError("curvature: vertical families need at=u");
    const double u = at[0];
    if (!admissible_u(spec, u))
      throw ConfigError("curvature: parameter outside the admissible interval");
    VerticalSurfaceData d{};
    DomainPoint q(1.0, 1.0);
    if (spec.family == Family::VerticalPlane) {
      d = vertical_plane_data(u);
      q = DomainPoint(spec.c, u);
      print_kv(out, "u", u);
    } else {
      const VerticalProfile prof = profile(spec, u);
      d = vertical_surface_data(prof, u);
      q = DomainPoint(u, prof.a);
      print_kv(out, "u", u);
      print_kv(out, "a", prof.a);
      print_kv(out, "ap", prof.ap);
      print_kv(out, "app", prof.app);
    }
    print_kv(out, "E", d.E);
    print_kv(out, "F", d.F);
    print_kv(out, "G", d.G);
    print_kv(out, "L", d.L);
    print_kv(out, "M", d.M);
    print_kv(out, "N", d.N);
    print_kv(out, "H", d.H);
    print_kv(out, "xi1", d.normal.e1);
    print_kv(out, "xi2", d.normal.e2);
    print_kv(out, "xi3", d.normal.e3);
    print_christoffels(out, q);
  }
  std::cout << out.str();
  return 0;
}

int cmd_area(const JobConfig& job) {
  const SolutionSpec spec = job.require_spec();
  if (!is_graph_family(spec.family)) throw ConfigError("area: needs a graph family");
  const Region region = job.require_region("region");
  const int nx = job.get_int("nx", 129), ny = job.get_int("ny", 129);
  if (nx < 3 || ny < 3) throw ConfigError("area: need nx, ny >= 3");
  const AreaReport rep = area(jet2_field(spec), region, nx, ny);
  std::ostringstream out;
  print_kv(out, "area", rep.area);
  out << "nx = " << rep.nx << '\n' << "ny = " << rep.ny << '\n' << "rule = " << rep.rule << '\n';
  print_kv(out, "quadrature_error", rep.quadrature_error);
  std::cout << out.str();
  return 0;
}

int cmd_gaussmap(const JobConfig& job) {
  const SolutionSpec spec = job.require_spec();
  if (!is_graph_family(spec.family)) throw ConfigError("gaussmap: needs a graph family");
  const Region region = job.require_region("region");
  const int n = job.get_int("n", 500);
  if (n < 1) throw ConfigError("gaussmap: n must be positive");

  // Inadmissible sample points are skipped, keeping the fixed row schema.
  std::ostringstream csv;
  csv << "x,y,xi1,xi2,xi3\n";
  int emitted = 0;
  for (const DomainPoint& p : halton_points(region, n)) {
    if (!admissible(spec, p)) continue;
    const FrameVector xi = gauss_map(p, jets(spec, p));
    csv << format_g17(p.x) << ',' << format_g17(p.y) << ',' << format_g17(xi.e1) << ','
        << format_g17(xi.e2) << ',' << format_g17(xi.e3) << '\n';
    ++emitted;
  }
  const std::string out_path = resolve_output_path(job.get_string("out", "gaussmap.csv"));
  atomic_write(out_path, csv.str());
  std::cout << "samples = " << emitted << '\n' << "gaussmap = " << out_path << '\n';
  return 0;
}

int cmd_export(const JobConfig& job) {
  const SolutionSpec spec = job.require_spec();
  const int nx = job.get_int("nx", 65), ny = job.get_int("ny", 65);
  if (nx < 2 || ny < 2) throw ConfigError("export: need nx, ny >= 2");

  Mesh mesh;
  if (is_graph_family(spec.family)) {
    const Region region = job.require_region("region");
    mesh = graph_mesh(spec, region, nx, ny);
  } else {
    const auto urange = job.require_interval("urange");
    const auto vrange = job.require_interval("vrange");
    mesh = vertical_mesh(spec, urange.first, urange.second, vrange.first, vrange.second, nx, ny);
  }
  const std::string out_path = resolve_output_path(job.get_string("out", "surface.obj"));
  write_obj(mesh, out_path);
  std::cout << "vertices = " << mesh.vertices.size() << '\n'
            << "faces = " << mesh.faces.size() << '\n'
            << "mesh = " << out_path << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "h2r: curvature data, closed-form family verification, Dirichlet solving,\n"
      "and mesh/CSV export for vertical graphs over the hyperbolic plane"};
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"verify", "run a family's expected-property suite"},
      {"solve", "solve the Dirichlet problem for the minimal-graph equation"},
      {"curvature", "print pointwise fundamental data"},
      {"area", "quadrature of the area functional"},
      {"gaussmap", "sample the Gauss map to CSV"},
      {"export", "triangulate a surface to a Wavefront OBJ file"},
  };
  std::map<std::string, std::pair<std::vector<std::string>, std::string>> state;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    auto& [args, config] = state[name];
    sub->add_option("--config", config, "key=value config file; command-line pairs override");
    sub->add_option("pairs", args, "key=value assignments");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    const auto& [args, config] = state.at(cmd);
    const JobConfig job = h2r::make_job(
        cmd, args, config.empty() ? std::nullopt : std::optional<std::string>(config));
    if (cmd == "verify") return cmd_verify(job);
    if (cmd == "solve") return cmd_solve(job);
    if (cmd == "curvature") return cmd_curvature(job);
    if (cmd == "area") return cmd_area(job);
    if (cmd == "gaussmap") return cmd_gaussmap(job);
    if (cmd == "export") return cmd_export(job);
    std::cerr << "config error: unknown command '" << cmd << "'\n";
    return 2;
  } catch (const h2r::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const h2r::DomainViolation& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
