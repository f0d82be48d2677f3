#include "h2r/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "h2r/graph_shape.hpp"
#include "h2r/sampling.hpp"

namespace h2r {

namespace {

std::string fmt_const(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string member_label(const SolutionSpec& s) {
  std::ostringstream out;
  out << family_name(s.family) << '(';
  switch (s.family) {
    case Family::Plane:
    case Family::ArcsinY:
    case Family::Funnel:
    case Family::ArcsinInvY:
      out << "a=" << fmt_const(s.a) << ", b=" << fmt_const(s.b);
      break;
    case Family::RationalX: out << "c=" << fmt_const(s.c); break;
    case Family::UmbilicalGraph:
      out << "c1=" << fmt_const(s.c1) << ", c2=" << fmt_const(s.c2)
          << ", c3=" << fmt_const(s.c3) << ", c=" << fmt_const(s.c);
      break;
    case Family::HorizontalPlane:
    case Family::VerticalPlane: out << "c=" << fmt_const(s.c); break;
    case Family::GeodesicCylinder:
      out << "c1=" << fmt_const(s.c1) << ", c2=" << fmt_const(s.c2);
      break;
  }
  out << ')';
  return out.str();
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.pass; });
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  out << "verify " << member << '\n';
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks) {
    const bool rank = c.name.find("rank") != std::string::npos;
    char line[192];
    std::snprintf(line, sizeof line, "  [%s] %-*s  %12.6g %s %g\n", c.pass ? "PASS" : "FAIL",
                  static_cast<int>(width), c.name.c_str(), c.measured, rank ? "==" : "<=",
                  c.threshold);
    out << line;
  }
  return out.str();
}

VerifyReport verify_member(const SolutionSpec& spec, const std::optional<Region>& region,
                           const std::optional<std::pair<double, double>>& urange, int points) {
  if (points < 1) throw std::invalid_argument("verify_member: points must be positive");

  VerifyReport rep;
  rep.member = member_label(spec);
  const ExpectedProperties props = list_expected_properties(spec);

  auto add = [&rep](const std::string& name, double measured, double threshold) {
    rep.checks.push_back({name, measured, threshold, measured <= threshold});
  };
  auto add_rank = [&rep](const std::string& name, int measured, int expected) {
    rep.checks.push_back({name, static_cast<double>(measured), static_cast<double>(expected),
                          measured == expected});
  };

  if (props.graph) {
    if (!region) throw std::invalid_argument("verify_member: graph member needs a region");
    const auto pts = admissible_halton_points(spec, *region, points);

    double r_min = 0, r_tg = 0, r_forms = 0, r_umb = 0, r_gap = 0, r_lam = 0, r_H = 0, r_cod = 0;
    for (const auto& p : pts) {
      const Jet3 j = jets(spec, p);
      if (props.minimal) r_min = std::max(r_min, std::abs(minimal_residual(p, j)));
      if (props.totally_geodesic) {
        r_tg = std::max(r_tg, totally_geodesic_residual(p, j));
        const SecondForms s = second_forms(p, j);
        r_forms = std::max({r_forms, std::abs(s.L), std::abs(s.M), std::abs(s.N)});
      }
      if (props.umbilical) {
        r_umb = std::max(r_umb, umbilicity_residual(p, j));
        const auto [k1, k2] = principal_curvatures(shape_operator(p, j));
        r_gap = std::max(r_gap, std::abs(k2 - k1));
        if (spec.family == Family::UmbilicalGraph) {
          const double lam = umbilical_lambda(spec, p);
          r_lam = std::max(r_lam, std::abs(0.5 * (k1 + k2) - lam));
          r_H = std::max(r_H, std::abs(mean_curvature(p, j) - lam));
          r_cod = std::max(r_cod, std::abs(codazzi_identity_residual(spec, p)));
        }
      }
    }
    if (props.minimal) add("minimal residual (max)", r_min, 1e-9);
    if (props.totally_geodesic) {
      add("totally geodesic system (max)", r_tg, 1e-10);
      add("second forms |L|,|M|,|N| (max)", r_forms, 1e-10);
    }
    if (props.umbilical) {
      add("umbilicity system (max)", r_umb, 1e-8);
      add("principal curvature gap (max)", r_gap, 1e-8);
      if (spec.family == Family::UmbilicalGraph) {
        add("principal curvatures vs lambda (max)", r_lam, 1e-8);
        add("mean curvature vs lambda (max)", r_H, 1e-8);
        add("closed relation y^2 w (j-lambda^2)^{1/2} = 1 (max)", r_cod, 1e-10);
      }
    }
    if (props.gauss_rank >= 0) {
      const Jet2Field field = jet2_field(spec);
      add_rank("gauss map rank (jacobian)", gauss_rank(field, *region), props.gauss_rank);
      add_rank("gauss map rank (local pca)", gauss_image_local_rank(field, *region),
               props.gauss_rank);
    }
    return rep;
  }

  if (!urange) throw std::invalid_argument("verify_member: vertical member needs urange");
  const auto [u0, u1] = *urange;
  if (!(u0 < u1)) throw std::invalid_argument("verify_member: urange must satisfy u0 < u1");

  std::vector<double> us;
  us.reserve(static_cast<std::size_t>(points));
  for (std::uint64_t i = 1; static_cast<int>(us.size()) < points && i <= (1u << 20); ++i) {
    const double u = u0 + van_der_corput(i, 2) * (u1 - u0);
    if (admissible_u(spec, u)) us.push_back(u);
  }
  if (static_cast<int>(us.size()) < points)
    throw DomainViolation("verify_member: urange contains too few admissible parameters");

  double r_MN = 0, r_H = 0, r_L = 0, r_prof = 0;
  for (double u : us) {
    VerticalSurfaceData d;
    if (spec.family == Family::VerticalPlane) {
      d = vertical_plane_data(u);
    } else {
      const VerticalProfile pr = profile(spec, u);
      d = vertical_surface_data(pr, u);
      r_prof = std::max(r_prof, std::abs(pr.a * pr.app + pr.ap * pr.ap + 1.0));
    }
    r_MN = std::max({r_MN, std::abs(d.M), std::abs(d.N)});
    if (props.minimal) r_H = std::max(r_H, std::abs(d.H));
    if (props.totally_geodesic) r_L = std::max(r_L, std::abs(d.L));
  }
  add("ruled second forms |M|,|N| (max)", r_MN, 1e-12);
  if (props.minimal) add("mean curvature |H| (max)", r_H, 1e-10);
  if (props.totally_geodesic) add("second form |L| (max)", r_L, 1e-10);
  if (spec.family == Family::GeodesicCylinder)
    add("profile identity |a a'' + a'^2 + 1| (max)", r_prof, 1e-10);
  return rep;
}

}  // namespace h2r
