#pragma once

#include <utility>

#include "h2r/ambient.hpp"
#include "h2r/geometry.hpp"

namespace h2r {

/// Coefficients of the induced metric of the vertical graph z = f(x, y) in
/// the (x, y) chart: E = fx^2 + 1/y^2, F = fx fy, G = fy^2 + 1/y^2.
struct FirstForms {
  double E, F, G;
};

/// Coefficients of the second fundamental form w.r.t. the upward normal:
/// L = (y fxx - fy)/(w y^3), M = (y fxy + fx)/(w y^3), N = (y fyy + fy)/(w y^3).
struct SecondForms {
  double L, M, N;
};

/// Bundle of the pointwise fundamental data of a graph, with the area
/// density w = sqrt(y^2 (fx^2 + fy^2) + 1) / y^2 (so EG - F^2 = w^2) and
/// the upward unit normal in frame components.
struct SurfaceData {
  double E, F, G;
  double L, M, N;
  double w;
  FrameVector normal;
};

/// Shape operator A = h^{-1} II of a graph in the coordinate basis
/// (phi_x, phi_y).  Not symmetric as a matrix, but self-adjoint w.r.t. the
/// induced metric h (h A is symmetric), so the spectrum is real.
struct ShapeOperator {
  double a11, a12, a21, a22;

  double trace() const { return a11 + a22; }
  double det() const { return a11 * a22 - a12 * a21; }
};

/// Area density w at p.
double w_factor(const DomainPoint& p, const Jet2& j);

FirstForms first_forms(const DomainPoint& p, const Jet2& j);

/// Upward unit normal in frame components:
///   xi = ( -fx/(w y), -fy/(w y), 1/(w y^2) ).
FrameVector unit_normal(const DomainPoint& p, const Jet2& j);

SecondForms second_forms(const DomainPoint& p, const Jet2& j);

/// Full surface data (first + second forms, normal, w).
SurfaceData surface_data(const DomainPoint& p, const Jet2& j);

/// Mean curvature H = (G L - 2 F M + E N) / (2 (E G - F^2)) w.r.t. the
/// upward normal.
double mean_curvature(const DomainPoint& p, const Jet2& j);

/// Quasilinear form of the minimal surface equation,
///   R = (1 + y^2 fy^2) fxx - y (fx^2 + fy^2) fy - 2 y^2 fx fy fxy
///       + (1 + y^2 fx^2) fyy;
/// zero iff H = 0.  The algebraic cross-relation R = 2 H w^3 y^4 is pinned
/// by a unit test.
double minimal_residual(const DomainPoint& p, const Jet2& j);

/// Divergence-form residual Div( grad f / sqrt(1 + y^2 |grad f|^2) )
/// evaluated analytically; equals R / (w^3 y^6).
double divergence_form_residual(const DomainPoint& p, const Jet2& j);

/// Shape operator in the coordinate basis, evaluated analytically.  The
/// entries differentiate the ratios fx/w, fy/w, fx/(y w), fy/(y w) once;
/// since w_x and w_y are closed forms in the 2-jet, the full 2-jet
/// suffices (a Jet3 binds here unchanged).
ShapeOperator shape_operator(const DomainPoint& p, const Jet2& j);

/// Shape operator assembled by central finite differences of Jet2
/// evaluations; fallback for fields without third-order data.  h is the FD
/// step; when trunc_est is non-null it receives a Richardson estimate of
/// the truncation error (entrywise max).
ShapeOperator shape_operator_fd(const Jet2Field& field, const DomainPoint& p, double h,
                                double* trunc_est = nullptr);

/// Principal curvatures (eigenvalues of A), ordered k1 <= k2.  Throws
/// DomainViolation if the discriminant is negative beyond roundoff (cannot
/// happen for a graph's shape operator; guards corrupted input).
std::pair<double, double> principal_curvatures(const ShapeOperator& A);

/// Umbilicity defect: largest absolute value of the three expressions of
/// the first-order system characterizing A = lambda Id,
///   d/dy ( fx / (w y) ),
///   d/dx ( fy / w ) + fx / (w y),
///   d/dx ( fx / w ) - d/dy ( fy / w ).
double umbilicity_residual(const DomainPoint& p, const Jet2& j);

/// Residual |y^2 w - 1/sqrt(j - lambda^2)| of the closed first-order
/// relation satisfied by the umbilic family with constants (c1, c2, c3),
/// where lambda = (1/y) [ (c1/2)(x^2 + y^2) + c2 x - c3 ] and
/// j = 1 - c2^2 - 2 c1 c3.  Throws DomainViolation when j - lambda^2 <= 0.
double codazzi_identity_residual(const DomainPoint& p, const Jet2& jet, double c1, double c2,
                                 double c3);

/// Totally-geodesic defect: max of |fxx - fy/y|, |fyy + fy/y|,
/// |fxy + fx/y|; zero iff the graph is totally geodesic at p.
double totally_geodesic_residual(const DomainPoint& p, const Jet2& j);

/// Gauss map value: the upward unit normal, a point of the unit sphere of
/// frame components.
FrameVector gauss_map(const DomainPoint& p, const Jet2& j);

/// Rank of the Gauss map differential over a region: the max over an
/// interior sample lattice (at least min_samples points) of the rank of
/// the 3x2 central-difference Jacobian of xi(x, y), counting singular
/// values above sv_rel_tol * sigma_max (sigma_max < 1e-8 gives rank 0;
/// the floor sits above the eps/h roundoff of a constant normal).
/// DomainViolation from the field propagates when a stencil leaves its
/// admissible set.
int gauss_rank(const Jet2Field& field, const Region& region, int min_samples = 25,
               double sv_rel_tol = 1e-6);

/// Rank of the Gauss map image estimated from local point clouds of
/// normals: around interior centers, a small patch of samples is centered
/// and its singular values compared (sigma_{k+1}/sigma_1 < rel_tol drops
/// dimension k+1).  Independent cross-check of gauss_rank.
int gauss_image_local_rank(const Jet2Field& field, const Region& region, int centers_per_axis = 3,
                           double rel_tol = 1e-3);

/// Profile data of a vertical surface Y(u, v) = (u, a(u), v): value and
/// two derivatives of a at a parameter u, with a > 0.
struct VerticalProfile {
  double a;
  double ap;   // a'
  double app;  // a''
};

/// Fundamental data of a vertical surface: E = (1 + a'^2)/a^2, F = 0,
/// G = 1, M = N = 0, H = L / (2 E).  The normal is
/// ( a'/sqrt(1+a'^2), -1/sqrt(1+a'^2), 0 ).
struct VerticalSurfaceData {
  double E, F, G;
  double L, M, N;
  double H;
  FrameVector normal;
};

/// Data of the vertical surface over the profile point (u, a(u)).  L (and
/// the structurally zero M, N) are produced by the covariant-derivative
/// route, L = -g(nabla_{X_u} xi, X_u); the closed form
/// -(a a'' + a'^2 + 1) / (a^2 sqrt(1 + a'^2)) is reserved for tests.
VerticalSurfaceData vertical_surface_data(const VerticalProfile& prof, double u);

/// Data of the vertical plane x = c, parametrized (c, u, v) with u = y > 0;
/// totally geodesic: L = M = N = H = 0, E = 1/y^2.
VerticalSurfaceData vertical_plane_data(double y);

}  // namespace h2r
