#pragma once

#include <string>
#include <vector>

#include "h2r/geometry.hpp"
#include "h2r/graph_shape.hpp"

namespace h2r {

/// Closed-form solution families.  Graph families define z = f(x, y) over
/// part of the upper half plane; vertical families define ruled surfaces
/// (u, a(u), v).
enum class Family {
  Plane,             // f = a x + b                   (minimal)
  ArcsinY,           // f = arcsin(a y) + b, a > 0, 0 < y < 1/a   (minimal)
  Funnel,            // f = a ln(x^2 + y^2) + b                    (minimal)
  RationalX,         // f = c x / (x^2 + y^2)                      (minimal)
  ArcsinInvY,        // f = arcsin(a y / (x^2 + y^2)) + b          (minimal)
  UmbilicalGraph,    // f = arctan(lambda / sqrt(j - lambda^2)) + c, A = lambda Id
  HorizontalPlane,   // f = c                          (totally geodesic)
  VerticalPlane,     // x = c                          (totally geodesic)
  GeodesicCylinder,  // a(u) = sqrt(-u^2 + 2 c1 u + c2)  (minimal and totally geodesic)
};

/// A catalog member: family tag plus its real constants.  Only the
/// constants used by the family are read.  eps_dom is the admissibility
/// margin: evaluation requires the family's defining denominators and
/// radicands to stay >= eps_dom, so jets remain finite.
struct SolutionSpec {
  Family family = Family::Plane;
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;
  double eps_dom = 1e-6;
};

/// Properties a family member is claimed to satisfy; drives the
/// verification suites.  complete is metadata only (never checked
/// numerically); gauss_rank = -1 means "no claim".
struct ExpectedProperties {
  bool graph = false;             // z = f(x, y) over a plane domain
  bool vertical = false;          // ruled surface (u, a(u), v)
  bool minimal = false;           // H = 0
  bool totally_geodesic = false;  // second fundamental form = 0
  bool umbilical = false;         // A = lambda Id
  bool complete = false;
  int gauss_rank = -1;            // expected rank of the Gauss map (graphs)
};

/// Family name in the config grammar ("funnel", "rational-x", ...);
/// parse_family is the inverse and throws ConfigError on unknown names.
std::string family_name(Family f);
Family parse_family(const std::string& name);

/// Construct a spec with validated constants.  Throws DomainViolation when
/// the constants are outside the family's parameter domain: ArcsinY needs
/// a > 0; UmbilicalGraph needs j = 1 - c2^2 - 2 c1 c3 > 0; GeodesicCylinder
/// needs c1^2 + c2 > 0.
SolutionSpec make_spec(Family f, double a = 1.0, double b = 0.0, double c = 0.0, double c1 = 0.0,
                       double c2 = 0.0, double c3 = 0.0);

/// The distinguished umbilic members with c1 = c2 = 0: the returned spec's
/// graph simplifies to f = -arcsin(c3 / y) + c on y > |c3|.  c3 = 0 is
/// rejected (the member degenerates to a horizontal plane).
SolutionSpec special_umbilical(double c3, double c = 0.0);

bool is_graph_family(Family f);

/// Claimed property set of a member (minimal / totally geodesic /
/// umbilical / complete / Gauss rank); the verification suites test the
/// numerical claims.
ExpectedProperties list_expected_properties(const SolutionSpec& spec);

/// Whether jets(spec, p) may be evaluated at p with margin eps_dom.
/// Vertical families throw std::invalid_argument (use admissible_u).
bool admissible(const SolutionSpec& spec, const DomainPoint& p);

/// Admissibility of a parameter u of a vertical family: a(u) defined with
/// margin eps_dom (VerticalPlane: u >= eps_dom).
bool admissible_u(const SolutionSpec& spec, double u);

/// Closed-form third-order jet of a graph family at p.  Throws
/// DomainViolation when p is inadmissible and std::invalid_argument for
/// vertical families.
Jet3 jets(const SolutionSpec& spec, const DomainPoint& p);

/// Jet2Field / Jet3Field views of a graph family.
Jet2Field jet2_field(const SolutionSpec& spec);
Jet3Field jet3_field(const SolutionSpec& spec);

/// Profile data a(u), a'(u), a''(u) of the geodesic cylinder.  Throws
/// std::invalid_argument for other families (the vertical plane has no
/// y = a(u) profile; its data comes from vertical_plane_data) and
/// DomainViolation when the radicand falls below eps_dom.
VerticalProfile profile(const SolutionSpec& spec, double u);

/// lambda(x, y) = (1/y) [ (c1/2)(x^2 + y^2) + c2 x - c3 ] of the umbilic
/// family (its principal-curvature field), and the family constant
/// j = 1 - c2^2 - 2 c1 c3.
double umbilical_lambda(const SolutionSpec& spec, const DomainPoint& p);
double umbilical_j(const SolutionSpec& spec);

/// Closed first-order relation of the umbilic family: the residual
/// y^2 w - 1 / sqrt(j - lambda^2) at p.  DomainViolation outside the
/// admissible region.
double codazzi_identity_residual(const SolutionSpec& spec, const DomainPoint& p);

/// All catalog members exercised by the default verification suite.
std::vector<SolutionSpec> default_catalog();

}  // namespace h2r
