#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "h2r/catalog.hpp"
#include "h2r/graph_shape.hpp"
#include "h2r/sampling.hpp"
#include "helpers.hpp"

using namespace h2r;
using h2r_test::family_region;
using h2r_test::random_jets;

TEST_SUITE("graph_shape") {
  TEST_CASE("area density w on simple graphs") {
    const DomainPoint p(0.4, 2.0);
    SUBCASE("constant graph: w = 1/y^2") {
      Jet2 j;  // all derivatives zero
      CHECK(w_factor(p, j) == doctest::Approx(0.25).epsilon(1e-15));
    }
    SUBCASE("tilted plane f = a x + b: w = sqrt(a^2 y^2 + 1)/y^2") {
      Jet2 j;
      j.fx = 3.0;
      CHECK(w_factor(p, j) == doctest::Approx(std::sqrt(37.0) / 4.0).epsilon(1e-15));
    }
  }

  TEST_CASE("EG - F^2 = w^2 on 10^4 random jets (relative 1e-12)") {
    for (const auto& s : random_jets(10000, 20240816u)) {
      const FirstForms ff = first_forms(s.p, s.j);
      const double lhs = ff.E * ff.G - ff.F * ff.F;
      const double w = w_factor(s.p, s.j);
      CHECK(std::fabs(lhs - w * w) <= 1e-12 * std::fabs(w * w));
    }
  }

  TEST_CASE("unit normal has norm 1 and the frozen funnel value") {
    for (const auto& s : random_jets(200, 7u))
      CHECK(unit_normal(s.p, s.j).norm() == doctest::Approx(1.0).epsilon(1e-12));

    // Funnel a=1 at (1,1): fx = fy = 1, w = sqrt(3), so
    // xi = (-1, -1, 1)/sqrt(3).
    const SolutionSpec funnel = make_spec(Family::Funnel);
    const DomainPoint p(1.0, 1.0);
    const FrameVector xi = unit_normal(p, jets(funnel, p));
    const double inv_sqrt3 = 0.57735026918962576451;
    CHECK(xi.e1 == doctest::Approx(-inv_sqrt3).epsilon(1e-14));
    CHECK(xi.e2 == doctest::Approx(-inv_sqrt3).epsilon(1e-14));
    CHECK(xi.e3 == doctest::Approx(inv_sqrt3).epsilon(1e-14));
  }

  TEST_CASE("mean curvature of the non-minimal graph f = y") {
    // H = -y^3 / (2 (1 + y^2)^{3/2}); frozen at y = 1.
    Jet2 j;
    j.f = 1.0;
    j.fy = 1.0;
    const DomainPoint p(0.0, 1.0);
    CHECK(mean_curvature(p, j) == doctest::Approx(-0.17677669529663688110).epsilon(1e-14));
    CHECK(minimal_residual(p, j) == doctest::Approx(-1.0).epsilon(1e-15));

    // minimal_residual(f = y) = -y at any height.
    const DomainPoint q(2.0, 3.0);
    Jet2 jy;
    jy.f = 3.0;
    jy.fy = 1.0;
    CHECK(minimal_residual(q, jy) == doctest::Approx(-3.0).epsilon(1e-15));
  }

  TEST_CASE("cross-relation: minimal residual = 2 H w^3 y^4") {
    for (const auto& s : random_jets(2000, 99u)) {
      const double R = minimal_residual(s.p, s.j);
      const double w = w_factor(s.p, s.j);
      const double y = s.p.y;
      const double rhs = 2.0 * mean_curvature(s.p, s.j) * w * w * w * y * y * y * y;
      CHECK(std::fabs(R - rhs) <= 1e-10 * std::max(1.0, std::fabs(R)));
    }
  }

  TEST_CASE("divergence-form residual equals R / (w^3 y^6)") {
    for (const auto& s : random_jets(2000, 100u)) {
      const double R = minimal_residual(s.p, s.j);
      const double w = w_factor(s.p, s.j);
      const double y = s.p.y;
      const double scale = w * w * w * y * y * y * y * y * y;
      const double d = divergence_form_residual(s.p, s.j);
      CHECK(std::fabs(d * scale - R) <= 1e-9 * std::max(1.0, std::fabs(R)));
    }
  }

  TEST_CASE("second forms of the tilted plane f = a x + b") {
    // L = N = 0, M = a / (w y^3).
    const SolutionSpec plane = make_spec(Family::Plane, 0.8, -1.0);
    const DomainPoint p(0.5, 1.5);
    const Jet3 j = jets(plane, p);
    const SecondForms sf = second_forms(p, j);
    const double w = w_factor(p, j);
    CHECK(sf.L == 0.0);
    CHECK(sf.N == 0.0);
    CHECK(sf.M == doctest::Approx(0.8 / (w * p.y * p.y * p.y)).epsilon(1e-14));
  }

  TEST_CASE("analytic shape operator matches its finite-difference assembly") {
    for (const Family fam : {Family::Funnel, Family::RationalX, Family::ArcsinY,
                             Family::UmbilicalGraph, Family::ArcsinInvY}) {
      const SolutionSpec spec = [&] {
        for (const auto& s : default_catalog())
          if (s.family == fam) return s;
        return make_spec(fam);
      }();
      const Region reg = family_region(fam);
      for (const DomainPoint& p : admissible_halton_points(spec, reg, 10)) {
        const ShapeOperator A = shape_operator(p, jets(spec, p));
        double trunc = 0.0;
        const ShapeOperator B = shape_operator_fd(jet2_field(spec), p, 1e-5, &trunc);
        const double tol = std::max(1e-7, 20.0 * trunc);
        CHECK(std::fabs(A.a11 - B.a11) <= tol);
        CHECK(std::fabs(A.a12 - B.a12) <= tol);
        CHECK(std::fabs(A.a21 - B.a21) <= tol);
        CHECK(std::fabs(A.a22 - B.a22) <= tol);
      }
    }
  }

  TEST_CASE("h A is symmetric and tr A = 2H on random jets") {
    for (const auto& s : random_jets(2000, 42u)) {
      const FirstForms h = first_forms(s.p, s.j);
      const ShapeOperator A = shape_operator(s.p, s.j);
      const double hA12 = h.E * A.a12 + h.F * A.a22;
      const double hA21 = h.F * A.a11 + h.G * A.a21;
      const double scale = std::max({1.0, std::fabs(hA12), std::fabs(hA21)});
      CHECK(std::fabs(hA12 - hA21) <= 1e-10 * scale);

      const double H = mean_curvature(s.p, s.j);
      CHECK(std::fabs(A.trace() - 2.0 * H) <= 1e-10 * std::max(1.0, std::fabs(H)));
    }
  }

  TEST_CASE("principal curvatures: ordering, determinant, and minimal symmetry") {
    for (const auto& s : random_jets(500, 77u)) {
      const ShapeOperator A = shape_operator(s.p, s.j);
      const auto [k1, k2] = principal_curvatures(A);
      CHECK(k1 <= k2);
      CHECK(k1 * k2 == doctest::Approx(A.det()).epsilon(1e-9));
      CHECK(k1 + k2 == doctest::Approx(A.trace()).epsilon(1e-12));
    }
    // On minimal members the curvatures are opposite.
    const SolutionSpec funnel = make_spec(Family::Funnel);
    for (const DomainPoint& p : admissible_halton_points(funnel, family_region(Family::Funnel), 50)) {
      const auto [k1, k2] = principal_curvatures(shape_operator(p, jets(funnel, p)));
      CHECK(std::fabs(k1 + k2) <= 1e-12);
    }
  }

  TEST_CASE("umbilic family: A = lambda Id, umbilicity system, closed relation") {
    const SolutionSpec u = make_spec(Family::UmbilicalGraph, 1, 0, 0, 0.3, 0.2, -0.4);
    for (const DomainPoint& p :
         admissible_halton_points(u, family_region(Family::UmbilicalGraph), 100)) {
      const Jet3 j = jets(u, p);
      const double lam = umbilical_lambda(u, p);
      const ShapeOperator A = shape_operator(p, j);
      CHECK(std::fabs(A.a11 - lam) <= 1e-10);
      CHECK(std::fabs(A.a22 - lam) <= 1e-10);
      CHECK(std::fabs(A.a12) <= 1e-10);
      CHECK(std::fabs(A.a21) <= 1e-10);
      CHECK(umbilicity_residual(p, j) <= 1e-10);
      CHECK(codazzi_identity_residual(u, p) <= 1e-12);
      CHECK(mean_curvature(p, j) == doctest::Approx(lam).epsilon(1e-10));
    }
  }

  TEST_CASE("umbilicity residual rejects the funnel") {
    const SolutionSpec funnel = make_spec(Family::Funnel);
    const DomainPoint p(1.0, 1.0);
    CHECK(umbilicity_residual(p, jets(funnel, p)) > 1e-3);
  }

  TEST_CASE("totally geodesic residual: zero for horizontal planes, nonzero otherwise") {
    Jet2 flat;  // f = const
    CHECK(totally_geodesic_residual(DomainPoint(0.2, 1.3), flat) == 0.0);

    const SolutionSpec arc = make_spec(Family::ArcsinY, 0.5);
    const DomainPoint p(1.0, 1.0);
    CHECK(totally_geodesic_residual(p, jets(arc, p)) > 1e-3);
  }

  TEST_CASE("gauss map ranks with both estimators") {
    const Region reg(1.0, 2.0, 1.0, 2.0);
    const SolutionSpec funnel = make_spec(Family::Funnel);
    const SolutionSpec ratx = make_spec(Family::RationalX, 1, 0, 1);
    const SolutionSpec flat = make_spec(Family::HorizontalPlane, 1, 0, 0.7);

    CHECK(gauss_rank(jet2_field(funnel), reg) == 1);
    CHECK(gauss_rank(jet2_field(ratx), reg) == 2);
    CHECK(gauss_rank(jet2_field(flat), reg) == 0);

    CHECK(gauss_image_local_rank(jet2_field(funnel), reg) == 1);
    CHECK(gauss_image_local_rank(jet2_field(ratx), reg) == 2);
    CHECK(gauss_image_local_rank(jet2_field(flat), reg) == 0);
  }

  TEST_CASE("gauss rank of a tilted plane is translation invariant") {
    const SolutionSpec plane = make_spec(Family::Plane, 1.0, 0.5);
    CHECK(gauss_rank(jet2_field(plane), Region(0.0, 1.0, 1.0, 2.0)) == 1);
    CHECK(gauss_rank(jet2_field(plane), Region(5.0, 6.0, 1.0, 2.0)) == 1);
  }

  TEST_CASE("vertical plane: all second-form data vanish") {
    for (const double y : {0.3, 1.0, 2.5}) {
      const VerticalSurfaceData d = vertical_plane_data(y);
      CHECK(d.E == doctest::Approx(1.0 / (y * y)).epsilon(1e-15));
      CHECK(d.F == 0.0);
      CHECK(d.G == 1.0);
      CHECK(std::fabs(d.L) <= 1e-14);
      CHECK(std::fabs(d.M) <= 1e-14);
      CHECK(std::fabs(d.N) <= 1e-14);
      CHECK(std::fabs(d.H) <= 1e-14);
    }
  }

  TEST_CASE("vertical cylinder over a = const: H = -1/2") {
    // Non-example from the classification: a(u) = c is not a geodesic, and
    // the cylinder over it has constant mean curvature -1/2.
    for (const double c : {0.5, 1.0, 2.0}) {
      const VerticalSurfaceData d = vertical_surface_data({c, 0.0, 0.0}, 0.3);
      CHECK(d.E == doctest::Approx(1.0 / (c * c)).epsilon(1e-14));
      CHECK(d.L == doctest::Approx(-1.0 / (c * c)).epsilon(1e-12));
      CHECK(std::fabs(d.M) <= 1e-14);
      CHECK(std::fabs(d.N) <= 1e-14);
      CHECK(d.H == doctest::Approx(-0.5).epsilon(1e-12));
    }
  }

  TEST_CASE("vertical surface: covariant-route L matches the closed form") {
    // Generic (non-geodesic) profile samples.
    for (const auto& [a, ap, app] : {std::array<double, 3>{1.3, 0.4, -0.7},
                                     std::array<double, 3>{0.6, -1.1, 0.2},
                                     std::array<double, 3>{2.0, 0.0, 1.5}}) {
      const VerticalSurfaceData d = vertical_surface_data({a, ap, app}, 0.9);
      const double s = std::sqrt(1.0 + ap * ap);
      const double closed = -(a * app + ap * ap + 1.0) / (a * a * s);
      CHECK(d.L == doctest::Approx(closed).epsilon(1e-12));
      CHECK(std::fabs(d.M) <= 1e-14);
      CHECK(std::fabs(d.N) <= 1e-14);
      CHECK(d.normal.norm() == doctest::Approx(1.0).epsilon(1e-14));
    }
  }

  TEST_CASE("geodesic cylinder: vanishing second form through the profile identity") {
    const SolutionSpec cyl = make_spec(Family::GeodesicCylinder, 1, 0, 0, 0.2, 1.0);
    for (const double u : {-0.5, 0.0, 0.4, 0.9}) {
      const VerticalProfile pr = profile(cyl, u);
      CHECK(std::fabs(pr.a * pr.app + pr.ap * pr.ap + 1.0) <= 1e-12);
      const VerticalSurfaceData d = vertical_surface_data(pr, u);
      CHECK(std::fabs(d.L) <= 1e-12);
      CHECK(std::fabs(d.H) <= 1e-12);
    }
  }

  TEST_CASE("principal_curvatures rejects a corrupted operator") {
    // Large antisymmetric part forces a complex spectrum.
    CHECK_THROWS_AS(principal_curvatures(ShapeOperator{0.0, 1.0, -1.0, 0.0}), DomainViolation);
  }
}
