#pragma once

#include <string>
#include <vector>

#include "h2r/geometry.hpp"
#include "h2r/grid.hpp"

namespace h2r {

/// Result of the area quadrature A(f) = integral of
/// sqrt(1 + y^2 |grad f|^2) / y^2 over the region.
struct AreaReport {
  double area = 0.0;
  int nx = 0, ny = 0;
  std::string rule;                // e.g. "simpson" or "simpson+3/8"
  double quadrature_error = 0.0;   // Richardson estimate; 0 when unavailable
};

/// Tensor-product Simpson quadrature of the area integrand with analytic
/// gradients from the jet field.  Interval counts not divisible by 2 are
/// closed with a 3/8 panel.  The error field holds |A_h - A_2h| / 15 when a
/// coarser sub-grid exists.
AreaReport area(const Jet2Field& f, const Region& region, int nx, int ny);

/// Same quadrature with gradients by second-order finite differences of
/// the nodal values (one-sided at the perimeter).
AreaReport area(const GridField& f);

struct AreaComparisonRow {
  double epsilon;
  double area;
  double delta;  // area - base area
};

/// A(f + eps * bump) - A(f) for each eps.  bump must vanish on the
/// perimeter of its grid and be congruent with f's grid; violations throw
/// DomainViolation.
std::vector<AreaComparisonRow> area_comparison(const GridField& f, const GridField& bump,
                                               const std::vector<double>& epsilons);

/// Flat Laplacian fxx + fyy.
double flat_laplacian(const Jet2& j);

/// Laplace-Beltrami operator of the induced metric applied to the height
/// function,
///   Delta_h f = (1/w) [ d/dx ( fx / (y^2 w) ) + d/dy ( fy / (y^2 w) ) ],
/// evaluated by central differences of the analytic flux with step
/// h = step_scale * max(1, |coordinate|).  Vanishes iff the graph is
/// minimal.
double induced_laplacian(const Jet2Field& f, const DomainPoint& p, double step_scale = 1e-5);

/// Residual of the level-curve identity
///   Delta_e f = sign(fy) * y * k_g * |grad f|^3
/// where k_g is the geodesic curvature of the level curve through p,
/// graphed as y(x).  Throws LevelCurveDegenerate when fy = 0.
double level_curve_identity_residual(const DomainPoint& p, const Jet2& j);

/// Geodesic curvature of the level curve of f through p (graphed over x).
/// Throws LevelCurveDegenerate when fy = 0.
double level_curve_geodesic_curvature(const DomainPoint& p, const Jet2& j);

}  // namespace h2r
