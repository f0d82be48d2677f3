#include "h2r/variational.hpp"

#include <algorithm>
#include <cmath>

#include "h2r/ambient.hpp"
#include "h2r/graph_shape.hpp"

namespace h2r {

namespace {

// Composite Simpson weights for n nodes (n >= 3).  An odd interval count
// is closed with a 3/8 panel over the last three intervals.
std::vector<double> simpson_weights(int n, double h) {
  const int m = n - 1;
  std::vector<double> w(static_cast<size_t>(n), 0.0);
  const int simpson_end = (m % 2 == 0) ? m : m - 3;  // last node of the 1-4-2 part
  for (int k = 0; k + 2 <= simpson_end; k += 2) {
    w[k] += h / 3.0;
    w[k + 1] += 4.0 * h / 3.0;
    w[k + 2] += h / 3.0;
  }
  if (m % 2 != 0) {
    w[m - 3] += 3.0 * h / 8.0;
    w[m - 2] += 9.0 * h / 8.0;
    w[m - 1] += 9.0 * h / 8.0;
    w[m] += 3.0 * h / 8.0;
  }
  return w;
}

// Deterministic pairwise reduction (stable summation order regardless of
// any future parallel split of the outer loops).
double pairwise_sum(std::vector<double>& v, size_t lo, size_t hi) {
  if (hi - lo == 1) return v[lo];
  const size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

double quadrature(const std::vector<double>& node_vals, int nx, int ny, double hx, double hy) {
  const std::vector<double> wx = simpson_weights(nx, hx);
  const std::vector<double> wy = simpson_weights(ny, hy);
  std::vector<double> rows(static_cast<size_t>(ny));
  for (int j = 0; j < ny; ++j) {
    double acc = 0.0;
    for (int i = 0; i < nx; ++i)
      acc += wx[static_cast<size_t>(i)] * node_vals[static_cast<size_t>(j) * nx + i];
    rows[static_cast<size_t>(j)] = wy[static_cast<size_t>(j)] * acc;
  }
  return pairwise_sum(rows, 0, rows.size());
}

std::string rule_name(int nx, int ny) {
  return ((nx - 1) % 2 == 0 && (ny - 1) % 2 == 0) ? "simpson" : "simpson+3/8";
}

double area_quadrature_field(const Jet2Field& f, const Region& region, int nx, int ny) {
  const double hx = region.width() / (nx - 1), hy = region.height() / (ny - 1);
  std::vector<double> vals(static_cast<size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const DomainPoint p{region.x0 + i * hx, region.y0 + j * hy};
      vals[static_cast<size_t>(j) * nx + i] = w_factor(p, f(p));
    }
  return quadrature(vals, nx, ny, hx, hy);
}

}  // namespace

AreaReport area(const Jet2Field& f, const Region& region, int nx, int ny) {
  if (nx < 3 || ny < 3) throw DomainViolation("area: need nx, ny >= 3");
  AreaReport rep;
  rep.nx = nx;
  rep.ny = ny;
  rep.rule = rule_name(nx, ny);
  rep.area = area_quadrature_field(f, region, nx, ny);

  // Richardson against a half-resolution evaluation of the same field.
  const int cx = std::max(3, nx / 2 + 1), cy = std::max(3, ny / 2 + 1);
  const double coarse = area_quadrature_field(f, region, cx, cy);
  rep.quadrature_error = std::fabs(rep.area - coarse) / 15.0;
  return rep;
}

AreaReport area(const GridField& f) {
  const int nx = f.nx, ny = f.ny;
  const double hx = f.hx(), hy = f.hy();

  // Nodal gradients: central inside, second-order one-sided on the rim.
  auto dx = [&](int i, int j) {
    if (i == 0) return (-3.0 * f.at(0, j) + 4.0 * f.at(1, j) - f.at(2, j)) / (2.0 * hx);
    if (i == nx - 1)
      return (3.0 * f.at(i, j) - 4.0 * f.at(i - 1, j) + f.at(i - 2, j)) / (2.0 * hx);
    return (f.at(i + 1, j) - f.at(i - 1, j)) / (2.0 * hx);
  };
  auto dy = [&](int i, int j) {
    if (j == 0) return (-3.0 * f.at(i, 0) + 4.0 * f.at(i, 1) - f.at(i, 2)) / (2.0 * hy);
    if (j == ny - 1)
      return (3.0 * f.at(i, j) - 4.0 * f.at(i, j - 1) + f.at(i, j - 2)) / (2.0 * hy);
    return (f.at(i, j + 1) - f.at(i, j - 1)) / (2.0 * hy);
  };

  std::vector<double> vals(static_cast<size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      Jet2 jet;
      jet.fx = dx(i, j);
      jet.fy = dy(i, j);
      vals[static_cast<size_t>(j) * nx + i] = w_factor(f.point(i, j), jet);
    }

  AreaReport rep;
  rep.nx = nx;
  rep.ny = ny;
  rep.rule = rule_name(nx, ny);
  rep.area = quadrature(vals, nx, ny, hx, hy);

  // Stride-2 Richardson estimate when the sub-grid exists.
  if (nx % 2 == 1 && ny % 2 == 1 && nx >= 5 && ny >= 5) {
    const int cx = (nx + 1) / 2, cy = (ny + 1) / 2;
    std::vector<double> cvals(static_cast<size_t>(cx) * cy);
    for (int j = 0; j < cy; ++j)
      for (int i = 0; i < cx; ++i)
        cvals[static_cast<size_t>(j) * cx + i] = vals[static_cast<size_t>(2 * j) * nx + 2 * i];
    const double coarse = quadrature(cvals, cx, cy, 2.0 * hx, 2.0 * hy);
    rep.quadrature_error = std::fabs(rep.area - coarse) / 15.0;
  } else {
    rep.quadrature_error = 0.0;
    rep.rule += " (no refinement estimate)";
  }
  return rep;
}

std::vector<AreaComparisonRow> area_comparison(const GridField& f, const GridField& bump,
                                               const std::vector<double>& epsilons) {
  if (bump.nx != f.nx || bump.ny != f.ny)
    throw DomainViolation("area_comparison: bump grid incongruent with f");
  for (int j = 0; j < bump.ny; ++j)
    for (int i = 0; i < bump.nx; ++i)
      if (bump.on_boundary(i, j) && bump.at(i, j) != 0.0)
        throw DomainViolation("area_comparison: bump does not vanish on the boundary");

  const double base = area(f).area;
  std::vector<AreaComparisonRow> rows;
  rows.reserve(epsilons.size());
  for (double eps : epsilons) {
    GridField g = f;
    for (size_t k = 0; k < g.values.size(); ++k) g.values[k] += eps * bump.values[k];
    const double a = area(g).area;
    rows.push_back({eps, a, a - base});
  }
  return rows;
}

double flat_laplacian(const Jet2& j) { return j.fxx + j.fyy; }

double induced_laplacian(const Jet2Field& f, const DomainPoint& p, double step_scale) {
  // Laplace-Beltrami flux components (sqrt(det h) h^{ij} f_j):
  //   Phi1 = (G fx - F fy)/w,  Phi2 = (E fy - F fx)/w.
  auto phi = [&](const DomainPoint& q, int comp) {
    const Jet2 j = f(q);
    const FirstForms ff = first_forms(q, j);
    const double w = w_factor(q, j);
    return comp == 0 ? (ff.G * j.fx - ff.F * j.fy) / w : (ff.E * j.fy - ff.F * j.fx) / w;
  };
  const double hx = step_scale * std::max(1.0, std::fabs(p.x));
  const double hy = step_scale * std::max(1.0, std::fabs(p.y));
  const double div = (phi({p.x + hx, p.y}, 0) - phi({p.x - hx, p.y}, 0)) / (2.0 * hx) +
                     (phi({p.x, p.y + hy}, 1) - phi({p.x, p.y - hy}, 1)) / (2.0 * hy);
  return div / w_factor(p, f(p));
}

double level_curve_geodesic_curvature(const DomainPoint& p, const Jet2& j) {
  if (j.fy == 0.0)
    throw LevelCurveDegenerate("level curve through the point is not a graph over x (fy = 0)");
  const double yp = -j.fx / j.fy;
  const double ypp = -(j.fxx + 2.0 * j.fxy * yp + j.fyy * yp * yp) / j.fy;
  return geodesic_curvature_graph_curve(p.y, yp, ypp);
}

double level_curve_identity_residual(const DomainPoint& p, const Jet2& j) {
  const double kg = level_curve_geodesic_curvature(p, j);
  const double grad = std::sqrt(j.fx * j.fx + j.fy * j.fy);
  const double sign_fy = j.fy > 0.0 ? 1.0 : -1.0;
  return flat_laplacian(j) - sign_fy * p.y * kg * grad * grad * grad;
}

}  // namespace h2r
