#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "h2r/config.hpp"
#include "h2r/grid.hpp"
#include "h2r/mesh.hpp"

using namespace h2r;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "h2r_unit_scratch";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  REQUIRE(out.good());
  out << content;
}

}  // namespace

TEST_SUITE("config_io") {
  TEST_CASE("grid indexing, boundary bookkeeping, and congruence checks") {
    GridField g(Region(0.0, 1.0, 1.0, 3.0), 5, 4);
    CHECK(g.hx() == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(g.hy() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(g.x(2) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g.y(3) == doctest::Approx(3.0).epsilon(1e-15));

    g.at(2, 1) = 7.0;
    CHECK(g.values[1 * 5 + 2] == 7.0);  // row-major, j slowest

    CHECK(g.on_boundary(0, 2));
    CHECK(g.on_boundary(3, 0));
    CHECK(g.on_boundary(4, 1));
    CHECK(g.on_boundary(1, 3));
    CHECK_FALSE(g.on_boundary(2, 1));
    CHECK(g.interior_count() == 6);
    CHECK(g.boundary_values().size() == static_cast<size_t>(2 * 5 + 2 * 4 - 4));

    CHECK(g.max_diff(g) == 0.0);
    CHECK_THROWS_AS(g.max_diff(GridField(g.rect, 4, 4)), DomainViolation);
    CHECK_THROWS_AS(GridField(Region(0.0, 1.0, 1.0, 2.0), 2, 5), DomainViolation);
    CHECK_THROWS_AS(GridField(Region(0.0, 1.0, 1.0, 2.0), 5, 1), DomainViolation);
  }

  TEST_CASE("grid CSV writes are bit-faithful and byte-stable") {
    GridField g(Region(-0.5, 1.5, 0.25, 2.0), 4, 3);
    const std::vector<double> specials = {1.0 / 3.0, 1e-17,      -0.0,       2.2250738585072014e-308,
                                          123456.789, -2.5e300,  0.1,        7.0,
                                          3.14159265358979323846, -1.0 / 7.0, 42.0, 1e308};
    g.values = specials;

    const fs::path p1 = scratch_dir() / "grid_a.csv";
    const fs::path p2 = scratch_dir() / "grid_b.csv";
    write_grid_csv(g, p1.string());

    const GridField r = read_grid_csv(p1.string());
    CHECK(r.nx == g.nx);
    CHECK(r.ny == g.ny);
    CHECK(r.rect.x0 == g.rect.x0);
    CHECK(r.rect.y1 == g.rect.y1);
    for (size_t k = 0; k < specials.size(); ++k) {
      CHECK(r.values[k] == g.values[k]);
      CHECK(std::signbit(r.values[k]) == std::signbit(g.values[k]));
    }

    write_grid_csv(r, p2.string());
    CHECK(slurp(p1) == slurp(p2));

    const std::string header = slurp(p1).substr(0, slurp(p1).find('\n'));
    CHECK(header == "-0.5,1.5,0.25,2,4,3");
  }

  TEST_CASE("malformed CSV input is rejected") {
    const fs::path bad = scratch_dir() / "bad.csv";
    spit(bad, "not,a,grid\n");
    CHECK_THROWS_AS(read_grid_csv(bad.string()), std::runtime_error);
    spit(bad, "0,1,1,2,3,3\n1,2,3\n1,2\n1,2,3\n");  // short row
    CHECK_THROWS_AS(read_grid_csv(bad.string()), std::runtime_error);
    CHECK_THROWS_AS(read_grid_csv((scratch_dir() / "missing.csv").string()), std::runtime_error);
  }

  TEST_CASE("graph mesh and OBJ golden bytes") {
    const Mesh m = graph_mesh(make_spec(Family::Plane, 1.0, 0.0), Region(0.0, 1.0, 1.0, 2.0), 2, 2);
    REQUIRE(m.vertices.size() == 4);
    REQUIRE(m.faces.size() == 2);
    CHECK(m.vertices[1][0] == 1.0);
    CHECK(m.vertices[1][2] == 1.0);  // f = x
    CHECK(m.faces[0] == std::array<int, 3>{0, 1, 3});
    CHECK(m.faces[1] == std::array<int, 3>{0, 3, 2});
    CHECK_NOTHROW(m.validate());

    const fs::path p = scratch_dir() / "plane.obj";
    write_obj(m, p.string());
    CHECK(slurp(p) ==
          "v 0 1 0\n"
          "v 1 1 1\n"
          "v 0 2 0\n"
          "v 1 2 1\n"
          "f 1 2 4\n"
          "f 1 4 3\n");

    CHECK_THROWS_AS(
        graph_mesh(make_spec(Family::ArcsinY, 0.5), Region(0.0, 1.0, 1.0, 3.0), 3, 3),
        DomainViolation);  // grid reaches y >= 2: inadmissible nodes
  }

  TEST_CASE("vertical meshes embed the profile curve") {
    const SolutionSpec cyl = make_spec(Family::GeodesicCylinder, 1, 0, 0, 0.0, 1.0);
    const Mesh m = vertical_mesh(cyl, -0.5, 0.5, 0.0, 1.0, 5, 3);
    REQUIRE(m.vertices.size() == 15);
    CHECK_NOTHROW(m.validate());
    for (const auto& v : m.vertices) {
      const double u = v[0], y = v[1];
      CHECK(std::fabs(y - std::sqrt(1.0 - u * u)) <= 1e-14);
    }

    const Mesh plane = vertical_mesh(make_spec(Family::VerticalPlane, 1, 0, 0.75), 0.5, 1.5, 0.0,
                                     1.0, 3, 3);
    for (const auto& v : plane.vertices) CHECK(v[0] == 0.75);
    CHECK_THROWS_AS(
        vertical_mesh(make_spec(Family::VerticalPlane), -1.0, 1.0, 0.0, 1.0, 3, 3),
        DomainViolation);  // u = y must stay positive
  }

  TEST_CASE("mesh validation rejects corrupt faces") {
    Mesh m;
    m.vertices = {{0, 1, 0}, {1, 1, 0}, {0, 2, 0}};
    m.faces = {{0, 1, 2}};
    CHECK_NOTHROW(m.validate());
    m.faces = {{0, 1, 3}};
    CHECK_THROWS_AS(m.validate(), DomainViolation);
    m.faces = {{0, 1, 1}};
    CHECK_THROWS_AS(m.validate(), DomainViolation);
  }

  TEST_CASE("config files parse with comments and whitespace") {
    const fs::path p = scratch_dir() / "job.cfg";
    spit(p,
         "# full-line comment\n"
         "family = funnel\n"
         "   a=2 \t\n"
         "\n"
         "b = 0.5 # trailing comment\n");
    const auto kv = parse_config_file(p.string());
    CHECK(kv.size() == 3);
    CHECK(kv.at("family") == "funnel");
    CHECK(kv.at("a") == "2");
    CHECK(kv.at("b") == "0.5");

    spit(p, "family funnel\n");  // no '='
    CHECK_THROWS_AS(parse_config_file(p.string()), ConfigError);
    CHECK_THROWS_AS(parse_config_file((scratch_dir() / "nope.cfg").string()), ConfigError);
  }

  TEST_CASE("make_job layers arguments over the file and validates keys") {
    const fs::path p = scratch_dir() / "layered.cfg";
    spit(p, "family = funnel\na = 2\n");
    const JobConfig job = make_job("verify", {"a=3", "points=100"}, p.string());
    CHECK(job.command == "verify");
    CHECK(job.kv.at("family") == "funnel");
    CHECK(job.kv.at("a") == "3");  // argument wins over file
    CHECK(job.require_int("points") == 100);

    CHECK_THROWS_AS(make_job("verify", {"bogus=1"}, std::nullopt), ConfigError);
    CHECK_THROWS_AS(make_job("verify", {"not-a-pair"}, std::nullopt), ConfigError);
    CHECK_THROWS_AS(make_job("frobnicate", {}, std::nullopt), ConfigError);
    CHECK(allowed_keys("frobnicate").empty());
  }

  TEST_CASE("typed getters parse and reject carefully") {
    JobConfig job;
    job.command = "solve";
    job.kv = {{"region", "[0,1]x[1,2]"},   {"urange", "[0.5 , 2]"}, {"tol", "1e-12"},
              {"nx", "33"},                {"weights", "1,2.5,-3"}, {"flag", "Yes"},
              {"family", "umbilical"},     {"c1", "0.3"},           {"c2", "0.2"},
              {"c3", "-0.4"}};

    const Region reg = job.require_region("region");
    CHECK(reg.x0 == 0.0);
    CHECK(reg.y1 == 2.0);
    const auto [lo, hi] = job.require_interval("urange");
    CHECK(lo == 0.5);
    CHECK(hi == 2.0);
    CHECK(job.require_double("tol") == 1e-12);
    CHECK(job.require_int("nx") == 33);
    CHECK(job.require_double_list("weights") == std::vector<double>{1.0, 2.5, -3.0});
    CHECK(job.get_bool("flag", false));
    CHECK(job.get_bool("absent", true));
    CHECK(job.get_int("absent", 65) == 65);
    CHECK(job.get_region("absent") == std::nullopt);

    const SolutionSpec spec = job.require_spec();
    CHECK(spec.family == Family::UmbilicalGraph);
    CHECK(spec.c3 == -0.4);
    CHECK(spec.a == 1.0);  // default

    job.kv["region"] = "[1,0]x[1,2]";  // x0 >= x1
    CHECK_THROWS_AS(job.require_region("region"), ConfigError);
    job.kv["region"] = "0,1x1,2";
    CHECK_THROWS_AS(job.require_region("region"), ConfigError);
    job.kv["urange"] = "[2,0.5]";
    CHECK_THROWS_AS(job.require_interval("urange"), ConfigError);
    job.kv["nx"] = "3.5";
    CHECK_THROWS_AS(job.require_int("nx"), ConfigError);
    job.kv["tol"] = "smol";
    CHECK_THROWS_AS(job.require_double("tol"), ConfigError);
    job.kv["flag"] = "maybe";
    CHECK_THROWS_AS(job.get_bool("flag", false), ConfigError);
    CHECK_THROWS_AS(job.require_string("missing"), ConfigError);

    job.kv["c2"] = "1.5";  // makes j = 1 - c2^2 - 2 c1 c3 negative
    CHECK_THROWS_AS(job.require_spec(), ConfigError);  // DomainViolation surfaces as ConfigError
    job.kv["family"] = "klein-bottle";
    CHECK_THROWS_AS(job.require_spec(), ConfigError);
  }

  TEST_CASE("output paths honor H2R_OUTPUT_DIR") {
    const fs::path base = scratch_dir() / "outputs";
    REQUIRE(setenv("H2R_OUTPUT_DIR", base.string().c_str(), 1) == 0);
    const std::string rel = resolve_output_path("sub/result.csv");
    CHECK(rel == (base / "sub" / "result.csv").string());
    CHECK(fs::is_directory(base / "sub"));  // created on resolve

    const fs::path abs = scratch_dir() / "abs.csv";
    CHECK(resolve_output_path(abs.string()) == abs.string());

    REQUIRE(unsetenv("H2R_OUTPUT_DIR") == 0);
    CHECK(resolve_output_path("plain.txt") == "plain.txt");
  }

  TEST_CASE("atomic writers leave no temporaries behind") {
    int tmp_count = 0;
    for (const auto& entry : fs::directory_iterator(scratch_dir()))
      if (entry.path().string().find(".tmp") != std::string::npos) ++tmp_count;
    CHECK(tmp_count == 0);
  }
}
