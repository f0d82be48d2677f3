#include "h2r/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace h2r {

namespace {

using cd = std::complex<double>;

// Third-order jet of value + Re h for holomorphic h, from h', h'', h''' at
// z = x + i y.  d/dx Re h = Re h', d/dy Re h = Re(i h') = -Im h', and so on
// up the orders.
Jet3 holomorphic_re_jet(double value, cd h1, cd h2, cd h3) {
  Jet3 j;
  j.f = value;
  j.fx = h1.real();
  j.fy = -h1.imag();
  j.fxx = h2.real();
  j.fxy = -h2.imag();
  j.fyy = -h2.real();
  j.fxxx = h3.real();
  j.fxxy = -h3.imag();
  j.fxyy = -h3.real();
  j.fyyy = h3.imag();
  return j;
}

// Jet of f = asin(lam / sqrt(jconst)) + shift given the jet of lam; the
// chain rule closes over D = sqrt(jconst - lam^2).
Jet3 arcsin_compose(const Jet3& l, double jconst, double shift) {
  const double lam = l.f;
  const double D2 = jconst - lam * lam;
  if (!(D2 > 0.0)) throw DomainViolation("arcsin_compose: evaluated outside j - lambda^2 > 0");
  const double D = std::sqrt(D2);
  const double D3 = D2 * D, D5 = D2 * D3;

  Jet3 f;
  f.f = std::asin(lam / std::sqrt(jconst)) + shift;
  f.fx = l.fx / D;
  f.fy = l.fy / D;
  f.fxx = l.fxx / D + lam * l.fx * l.fx / D3;
  f.fxy = l.fxy / D + lam * l.fx * l.fy / D3;
  f.fyy = l.fyy / D + lam * l.fy * l.fy / D3;
  f.fxxx = l.fxxx / D + (3.0 * lam * l.fx * l.fxx + l.fx * l.fx * l.fx) / D3 +
           3.0 * lam * lam * l.fx * l.fx * l.fx / D5;
  f.fxxy = l.fxxy / D +
           (lam * l.fxx * l.fy + l.fx * l.fx * l.fy + 2.0 * lam * l.fx * l.fxy) / D3 +
           3.0 * lam * lam * l.fx * l.fx * l.fy / D5;
  f.fxyy = l.fxyy / D +
           (lam * l.fyy * l.fx + l.fy * l.fy * l.fx + 2.0 * lam * l.fy * l.fxy) / D3 +
           3.0 * lam * lam * l.fx * l.fy * l.fy / D5;
  f.fyyy = l.fyyy / D + (3.0 * lam * l.fy * l.fyy + l.fy * l.fy * l.fy) / D3 +
           3.0 * lam * lam * l.fy * l.fy * l.fy / D5;
  return f;
}

// Jet of lambda(x, y) = ((c1/2)(x^2 + y^2) + c2 x - c3) / y.
Jet3 lambda_jet(const SolutionSpec& s, const DomainPoint& p) {
  const double x = p.x, y = p.y;
  const double P = 0.5 * s.c1 * (x * x + y * y) + s.c2 * x - s.c3;
  const double lam = P / y;

  Jet3 l;
  l.f = lam;
  l.fx = (s.c1 * x + s.c2) / y;
  l.fy = s.c1 - lam / y;
  l.fxx = s.c1 / y;
  l.fxy = -(s.c1 * x + s.c2) / (y * y);
  l.fyy = -s.c1 / y + 2.0 * lam / (y * y);
  l.fxxx = 0.0;
  l.fxxy = -s.c1 / (y * y);
  l.fxyy = 2.0 * (s.c1 * x + s.c2) / (y * y * y);
  l.fyyy = 3.0 * s.c1 / (y * y) - 6.0 * lam / (y * y * y);
  return l;
}

[[noreturn]] void not_a_graph(Family f) {
  throw std::invalid_argument("family '" + family_name(f) + "' is not a graph z = f(x, y)");
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Plane: return "plane";
    case Family::ArcsinY: return "arcsin-y";
    case Family::Funnel: return "funnel";
    case Family::RationalX: return "rational-x";
    case Family::ArcsinInvY: return "arcsin-inv-y";
    case Family::UmbilicalGraph: return "umbilical";
    case Family::HorizontalPlane: return "horizontal-plane";
    case Family::VerticalPlane: return "vertical-plane";
    case Family::GeodesicCylinder: return "geodesic-cylinder";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  std::string k;
  for (char ch : name)
    if (ch != '-' && ch != '_') k.push_back(static_cast<char>(std::tolower(ch)));
  if (k == "plane") return Family::Plane;
  if (k == "arcsiny") return Family::ArcsinY;
  if (k == "funnel") return Family::Funnel;
  if (k == "rationalx") return Family::RationalX;
  if (k == "arcsininvy") return Family::ArcsinInvY;
  if (k == "umbilical" || k == "umbilicalgraph") return Family::UmbilicalGraph;
  if (k == "horizontalplane") return Family::HorizontalPlane;
  if (k == "verticalplane") return Family::VerticalPlane;
  if (k == "geodesiccylinder") return Family::GeodesicCylinder;
  throw ConfigError("unknown family '" + name + "'");
}

SolutionSpec make_spec(Family f, double a, double b, double c, double c1, double c2, double c3) {
  SolutionSpec s;
  s.family = f;
  s.a = a;
  s.b = b;
  s.c = c;
  s.c1 = c1;
  s.c2 = c2;
  s.c3 = c3;
  switch (f) {
    case Family::ArcsinY:
      if (!(a > 0.0)) throw DomainViolation("arcsin-y requires a > 0");
      break;
    case Family::UmbilicalGraph:
      if (!(umbilical_j(s) > 0.0))
        throw DomainViolation("umbilical graph requires j = 1 - c2^2 - 2 c1 c3 > 0");
      break;
    case Family::GeodesicCylinder:
      if (!(c1 * c1 + c2 > 0.0)) throw DomainViolation("geodesic cylinder requires c1^2 + c2 > 0");
      break;
    default: break;
  }
  return s;
}

SolutionSpec special_umbilical(double c3, double c) {
  if (c3 == 0.0)
    throw DomainViolation("special umbilical member requires c3 != 0 (c3 = 0 degenerates "
                          "to a horizontal plane)");
  return make_spec(Family::UmbilicalGraph, 1.0, 0.0, c, 0.0, 0.0, c3);
}

bool is_graph_family(Family f) {
  return f != Family::VerticalPlane && f != Family::GeodesicCylinder;
}

ExpectedProperties list_expected_properties(const SolutionSpec& spec) {
  ExpectedProperties e;
  switch (spec.family) {
    case Family::Plane:
      e.graph = true;
      e.minimal = true;
      e.complete = true;
      e.totally_geodesic = (spec.a == 0.0);
      e.umbilical = (spec.a == 0.0);
      e.gauss_rank = (spec.a == 0.0) ? 0 : 1;
      break;
    case Family::ArcsinY:
      e.graph = true;
      e.minimal = true;
      e.gauss_rank = 1;
      break;
    case Family::Funnel:
      e.graph = true;
      e.minimal = true;
      e.complete = true;
      e.gauss_rank = 1;
      break;
    case Family::RationalX:
      e.graph = true;
      e.minimal = true;
      e.complete = true;
      e.gauss_rank = 2;
      break;
    case Family::ArcsinInvY:
      e.graph = true;
      e.minimal = true;
      break;
    case Family::UmbilicalGraph: {
      e.graph = true;
      e.umbilical = true;
      const bool degenerate = spec.c1 == 0.0 && spec.c2 == 0.0 && spec.c3 == 0.0;
      e.minimal = degenerate;
      e.totally_geodesic = degenerate;
      break;
    }
    case Family::HorizontalPlane:
      e.graph = true;
      e.minimal = true;
      e.totally_geodesic = true;
      e.umbilical = true;
      e.complete = true;
      e.gauss_rank = 0;
      break;
    case Family::VerticalPlane:
      e.vertical = true;
      e.minimal = true;
      e.totally_geodesic = true;
      e.umbilical = true;
      e.complete = true;
      break;
    case Family::GeodesicCylinder:
      e.vertical = true;
      e.minimal = true;
      e.totally_geodesic = true;
      e.umbilical = true;
      e.complete = true;
      break;
  }
  return e;
}

double umbilical_j(const SolutionSpec& spec) {
  return 1.0 - spec.c2 * spec.c2 - 2.0 * spec.c1 * spec.c3;
}

double umbilical_lambda(const SolutionSpec& spec, const DomainPoint& p) {
  if (spec.family != Family::UmbilicalGraph)
    throw std::invalid_argument("umbilical_lambda: spec is not an umbilical graph");
  return (0.5 * spec.c1 * (p.x * p.x + p.y * p.y) + spec.c2 * p.x - spec.c3) / p.y;
}

bool admissible(const SolutionSpec& spec, const DomainPoint& p) {
  const double eps = spec.eps_dom;
  switch (spec.family) {
    case Family::Plane:
    case Family::HorizontalPlane: return true;
    case Family::ArcsinY: return 1.0 - spec.a * spec.a * p.y * p.y >= eps;
    case Family::Funnel:
    case Family::RationalX: return p.x * p.x + p.y * p.y >= eps;
    case Family::ArcsinInvY: {
      const double r2 = p.x * p.x + p.y * p.y;
      if (r2 < eps) return false;
      const double u = spec.a * p.y / r2;
      return 1.0 - u * u >= eps;
    }
    case Family::UmbilicalGraph: {
      const double lam = umbilical_lambda(spec, p);
      return umbilical_j(spec) - lam * lam >= eps;
    }
    case Family::VerticalPlane:
    case Family::GeodesicCylinder:
      throw std::invalid_argument("admissible: vertical families are parametrized by u; "
                                  "use admissible_u");
  }
  return false;
}

bool admissible_u(const SolutionSpec& spec, double u) {
  switch (spec.family) {
    case Family::VerticalPlane: return u >= spec.eps_dom;
    case Family::GeodesicCylinder:
      return -u * u + 2.0 * spec.c1 * u + spec.c2 >= spec.eps_dom;
    default:
      throw std::invalid_argument("admissible_u: '" + family_name(spec.family) +
                                  "' is parametrized over DomainPoints");
  }
}

Jet3 jets(const SolutionSpec& spec, const DomainPoint& p) {
  if (!is_graph_family(spec.family)) not_a_graph(spec.family);
  if (!admissible(spec, p))
    throw DomainViolation("jets: point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                          ") outside the admissible domain of " + family_name(spec.family));

  const cd z{p.x, p.y};
  switch (spec.family) {
    case Family::Plane: {
      Jet3 j;
      j.f = spec.a * p.x + spec.b;
      j.fx = spec.a;
      return j;
    }
    case Family::HorizontalPlane: {
      Jet3 j;
      j.f = spec.c;
      return j;
    }
    case Family::ArcsinY: {
      const double a = spec.a, y = p.y;
      const double D2 = 1.0 - a * a * y * y;
      const double D = std::sqrt(D2);
      Jet3 j;
      j.f = std::asin(a * y) + spec.b;
      j.fy = a / D;
      j.fyy = a * a * a * y / (D2 * D);
      j.fyyy = a * a * a * (1.0 + 2.0 * a * a * y * y) / (D2 * D2 * D);
      return j;
    }
    case Family::Funnel: {
      const double r2 = p.x * p.x + p.y * p.y;
      const cd inv = 1.0 / z;
      const double a2 = 2.0 * spec.a;
      return holomorphic_re_jet(spec.a * std::log(r2) + spec.b, a2 * inv, -a2 * inv * inv,
                                2.0 * a2 * inv * inv * inv);
    }
    case Family::RationalX: {
      const cd inv = 1.0 / z;
      return holomorphic_re_jet(spec.c * p.x / std::norm(z), -spec.c * inv * inv,
                                2.0 * spec.c * inv * inv * inv,
                                -6.0 * spec.c * inv * inv * inv * inv);
    }
    case Family::ArcsinInvY: {
      // inner function u = a y / (x^2 + y^2) = Re(i a / z), harmonic
      const cd inv = 1.0 / z;
      const cd ia{0.0, spec.a};
      const Jet3 u = holomorphic_re_jet(spec.a * p.y / std::norm(z), -ia * inv * inv,
                                        2.0 * ia * inv * inv * inv,
                                        -6.0 * ia * inv * inv * inv * inv);
      return arcsin_compose(u, 1.0, spec.b);
    }
    case Family::UmbilicalGraph:
      return arcsin_compose(lambda_jet(spec, p), umbilical_j(spec), spec.c);
    default: break;
  }
  not_a_graph(spec.family);
}

Jet2Field jet2_field(const SolutionSpec& spec) {
  return [spec](const DomainPoint& p) -> Jet2 { return jets(spec, p); };
}

Jet3Field jet3_field(const SolutionSpec& spec) {
  return [spec](const DomainPoint& p) -> Jet3 { return jets(spec, p); };
}

VerticalProfile profile(const SolutionSpec& spec, double u) {
  if (spec.family != Family::GeodesicCylinder)
    throw std::invalid_argument("profile: only the geodesic cylinder has a y = a(u) profile "
                                "(the vertical plane is handled by vertical_plane_data)");
  const double Q = -u * u + 2.0 * spec.c1 * u + spec.c2;
  if (Q < spec.eps_dom)
    throw DomainViolation("profile: u outside the interval where a(u) > 0");
  const double a = std::sqrt(Q);
  const double ap = (spec.c1 - u) / a;
  const double app = -(spec.c1 * spec.c1 + spec.c2) / (Q * a);
  return {a, ap, app};
}

double codazzi_identity_residual(const SolutionSpec& spec, const DomainPoint& p) {
  if (spec.family != Family::UmbilicalGraph)
    throw std::invalid_argument("codazzi_identity_residual: spec is not an umbilical graph");
  return codazzi_identity_residual(p, jets(spec, p), spec.c1, spec.c2, spec.c3);
}

std::vector<SolutionSpec> default_catalog() {
  return {
      make_spec(Family::Plane, 1.0, 0.5),
      make_spec(Family::ArcsinY, 0.5, 0.0),
      make_spec(Family::Funnel, 1.0, 0.0),
      make_spec(Family::RationalX, 1.0, 0.0, 1.0),
      make_spec(Family::ArcsinInvY, 1.0, 0.0),
      make_spec(Family::UmbilicalGraph, 1.0, 0.0, 0.0, 0.3, 0.2, -0.4),
      make_spec(Family::HorizontalPlane, 1.0, 0.0, 0.7),
      make_spec(Family::VerticalPlane, 1.0, 0.0, 0.0),
      make_spec(Family::GeodesicCylinder, 1.0, 0.0, 0.0, 0.0, 1.0),
  };
}

}  // namespace h2r
