#include "h2r/graph_shape.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <vector>

namespace h2r {

namespace {

// Partials of w = sqrt(y^2 (fx^2 + fy^2) + 1) / y^2; closed forms in the
// 2-jet.
struct WJet {
  double w, wx, wy;
};

WJet w_jet(const DomainPoint& p, const Jet2& j) {
  const double y = p.y, y2 = y * y;
  const double w = std::sqrt(y2 * (j.fx * j.fx + j.fy * j.fy) + 1.0) / y2;
  const double wx = (j.fx * j.fxx + j.fy * j.fxy) / (w * y2);
  const double wy = (j.fx * j.fx + j.fy * j.fy) / (w * y2 * y) +
                    (j.fx * j.fxy + j.fy * j.fyy) / (w * y2) - 2.0 * w / y;
  return {w, wx, wy};
}

}  // namespace

double w_factor(const DomainPoint& p, const Jet2& j) {
  const double y2 = p.y * p.y;
  return std::sqrt(y2 * (j.fx * j.fx + j.fy * j.fy) + 1.0) / y2;
}

FirstForms first_forms(const DomainPoint& p, const Jet2& j) {
  const double iy2 = 1.0 / (p.y * p.y);
  return {j.fx * j.fx + iy2, j.fx * j.fy, j.fy * j.fy + iy2};
}

FrameVector unit_normal(const DomainPoint& p, const Jet2& j) {
  const double w = w_factor(p, j), y = p.y;
  return {-j.fx / (w * y), -j.fy / (w * y), 1.0 / (w * y * y)};
}

SecondForms second_forms(const DomainPoint& p, const Jet2& j) {
  const double w = w_factor(p, j), y = p.y;
  const double wy3 = w * y * y * y;
  return {(y * j.fxx - j.fy) / wy3, (y * j.fxy + j.fx) / wy3, (y * j.fyy + j.fy) / wy3};
}

SurfaceData surface_data(const DomainPoint& p, const Jet2& j) {
  const FirstForms ff = first_forms(p, j);
  const SecondForms sf = second_forms(p, j);
  return {ff.E, ff.F, ff.G, sf.L, sf.M, sf.N, w_factor(p, j), unit_normal(p, j)};
}

double mean_curvature(const DomainPoint& p, const Jet2& j) {
  const FirstForms ff = first_forms(p, j);
  const SecondForms sf = second_forms(p, j);
  return (ff.G * sf.L - 2.0 * ff.F * sf.M + ff.E * sf.N) /
         (2.0 * (ff.E * ff.G - ff.F * ff.F));
}

double minimal_residual(const DomainPoint& p, const Jet2& j) {
  const double y = p.y, y2 = y * y;
  return (1.0 + y2 * j.fy * j.fy) * j.fxx - y * (j.fx * j.fx + j.fy * j.fy) * j.fy -
         2.0 * y2 * j.fx * j.fy * j.fxy + (1.0 + y2 * j.fx * j.fx) * j.fyy;
}

double divergence_form_residual(const DomainPoint& p, const Jet2& j) {
  const double y = p.y, y2 = y * y;
  const double P = 1.0 + y2 * (j.fx * j.fx + j.fy * j.fy);
  const double s = std::sqrt(P);
  const double Px = 2.0 * y2 * (j.fx * j.fxx + j.fy * j.fxy);
  const double Py = 2.0 * y * (j.fx * j.fx + j.fy * j.fy) +
                    2.0 * y2 * (j.fx * j.fxy + j.fy * j.fyy);
  const double dxq1 = j.fxx / s - j.fx * Px / (2.0 * P * s);
  const double dyq2 = j.fyy / s - j.fy * Py / (2.0 * P * s);
  return dxq1 + dyq2;
}

ShapeOperator shape_operator(const DomainPoint& p, const Jet2& j) {
  const double y = p.y;
  const WJet W = w_jet(p, j);
  const double w = W.w, w2 = w * w;

  const double r1x = j.fxx / w - j.fx * W.wx / w2;  // d/dx (fx/w)
  const double r1y = j.fxy / w - j.fx * W.wy / w2;  // d/dy (fx/w)
  const double r2x = j.fxy / w - j.fy * W.wx / w2;  // d/dx (fy/w)
  const double r2y = j.fyy / w - j.fy * W.wy / w2;  // d/dy (fy/w)

  return {r1x - j.fy / (y * w), r1y - j.fx / (y * w), r2x + j.fx / (y * w),
          r2y - j.fy / (y * w)};
}

ShapeOperator shape_operator_fd(const Jet2Field& field, const DomainPoint& p, double h,
                                double* trunc_est) {
  auto at_step = [&](double step) -> ShapeOperator {
    const Jet2 jc = field(p);
    const Jet2 jxp = field({p.x + step, p.y});
    const Jet2 jxm = field({p.x - step, p.y});
    const Jet2 jyp = field({p.x, p.y + step});
    const Jet2 jym = field({p.x, p.y - step});

    auto r1 = [&](const DomainPoint& q, const Jet2& jq) { return jq.fx / w_factor(q, jq); };
    auto r2 = [&](const DomainPoint& q, const Jet2& jq) { return jq.fy / w_factor(q, jq); };

    const double r1x = (r1({p.x + step, p.y}, jxp) - r1({p.x - step, p.y}, jxm)) / (2.0 * step);
    const double r1y = (r1({p.x, p.y + step}, jyp) - r1({p.x, p.y - step}, jym)) / (2.0 * step);
    const double r2x = (r2({p.x + step, p.y}, jxp) - r2({p.x - step, p.y}, jxm)) / (2.0 * step);
    const double r2y = (r2({p.x, p.y + step}, jyp) - r2({p.x, p.y - step}, jym)) / (2.0 * step);

    const double w = w_factor(p, jc);
    return {r1x - jc.fy / (p.y * w), r1y - jc.fx / (p.y * w), r2x + jc.fx / (p.y * w),
            r2y - jc.fy / (p.y * w)};
  };

  const ShapeOperator A = at_step(h);
  if (trunc_est) {
    const ShapeOperator B = at_step(2.0 * h);
    *trunc_est = std::max({std::fabs(A.a11 - B.a11), std::fabs(A.a12 - B.a12),
                           std::fabs(A.a21 - B.a21), std::fabs(A.a22 - B.a22)}) /
                 3.0;
  }
  return A;
}

std::pair<double, double> principal_curvatures(const ShapeOperator& A) {
  const double tr = A.trace();
  double disc = (A.a11 - A.a22) * (A.a11 - A.a22) + 4.0 * A.a12 * A.a21;
  const double scale = std::max({1.0, A.a11 * A.a11, A.a22 * A.a22, std::fabs(A.a12 * A.a21)});
  if (disc < -1e-10 * scale)
    throw DomainViolation("principal_curvatures: complex spectrum (not a graph shape operator)");
  disc = std::max(disc, 0.0);
  const double root = std::sqrt(disc);
  return {(tr - root) / 2.0, (tr + root) / 2.0};
}

double umbilicity_residual(const DomainPoint& p, const Jet2& j) {
  const double y = p.y;
  const WJet W = w_jet(p, j);
  const double w = W.w, w2 = w * w;

  const double r1x = j.fxx / w - j.fx * W.wx / w2;
  const double r1y = j.fxy / w - j.fx * W.wy / w2;
  const double r2x = j.fxy / w - j.fy * W.wx / w2;
  const double r2y = j.fyy / w - j.fy * W.wy / w2;

  const double u1 = r1y / y - j.fx / (w * y * y);  // d/dy ( fx/(w y) )
  const double u2 = r2x + j.fx / (w * y);
  const double u3 = r1x - r2y;
  return std::max({std::fabs(u1), std::fabs(u2), std::fabs(u3)});
}

double codazzi_identity_residual(const DomainPoint& p, const Jet2& jet, double c1, double c2,
                                 double c3) {
  const double lam = ((c1 / 2.0) * (p.x * p.x + p.y * p.y) + c2 * p.x - c3) / p.y;
  const double jconst = 1.0 - c2 * c2 - 2.0 * c1 * c3;
  const double rad = jconst - lam * lam;
  if (!(rad > 0.0))
    throw DomainViolation("codazzi_identity_residual: j - lambda^2 <= 0 at the given point");
  return std::fabs(p.y * p.y * w_factor(p, jet) - 1.0 / std::sqrt(rad));
}

double totally_geodesic_residual(const DomainPoint& p, const Jet2& j) {
  const double y = p.y;
  return std::max({std::fabs(j.fxx - j.fy / y), std::fabs(j.fyy + j.fy / y),
                   std::fabs(j.fxy + j.fx / y)});
}

FrameVector gauss_map(const DomainPoint& p, const Jet2& j) { return unit_normal(p, j); }

namespace {

// Interior sample lattice of a region: m x m cell midpoints.
std::vector<DomainPoint> sample_lattice(const Region& region, int m) {
  std::vector<DomainPoint> pts;
  pts.reserve(static_cast<size_t>(m) * m);
  for (int jj = 0; jj < m; ++jj)
    for (int ii = 0; ii < m; ++ii)
      pts.push_back({region.x0 + (ii + 0.5) * region.width() / m,
                     region.y0 + (jj + 0.5) * region.height() / m});
  return pts;
}

Eigen::Matrix<double, 3, 2> gauss_jacobian_fd(const Jet2Field& field, const DomainPoint& p) {
  const double hx = 1e-5 * std::max(1.0, std::fabs(p.x));
  const double hy = 1e-5 * std::max(1.0, std::fabs(p.y));
  const FrameVector xp = gauss_map({p.x + hx, p.y}, field({p.x + hx, p.y}));
  const FrameVector xm = gauss_map({p.x - hx, p.y}, field({p.x - hx, p.y}));
  const FrameVector yp = gauss_map({p.x, p.y + hy}, field({p.x, p.y + hy}));
  const FrameVector ym = gauss_map({p.x, p.y - hy}, field({p.x, p.y - hy}));
  Eigen::Matrix<double, 3, 2> J;
  J(0, 0) = (xp.e1 - xm.e1) / (2.0 * hx);
  J(1, 0) = (xp.e2 - xm.e2) / (2.0 * hx);
  J(2, 0) = (xp.e3 - xm.e3) / (2.0 * hx);
  J(0, 1) = (yp.e1 - ym.e1) / (2.0 * hy);
  J(1, 1) = (yp.e2 - ym.e2) / (2.0 * hy);
  J(2, 1) = (yp.e3 - ym.e3) / (2.0 * hy);
  return J;
}

}  // namespace

int gauss_rank(const Jet2Field& field, const Region& region, int min_samples, double sv_rel_tol) {
  const int m = std::max(2, static_cast<int>(std::ceil(std::sqrt(double(min_samples)))));
  int rank = 0;
  for (const DomainPoint& p : sample_lattice(region, m)) {
    const auto J = gauss_jacobian_fd(field, p);
    const Eigen::JacobiSVD<Eigen::Matrix<double, 3, 2>> svd(J);
    const auto& sv = svd.singularValues();
    // Flat floor: a constant normal still shows |J| ~ eps/h ~ 1e-11 of
    // central-difference roundoff, so the floor must sit well above it.
    if (sv(0) < 1e-8) continue;
    int r = 1;
    if (sv(1) > sv_rel_tol * sv(0)) r = 2;
    rank = std::max(rank, r);
    if (rank == 2) break;
  }
  return rank;
}

int gauss_image_local_rank(const Jet2Field& field, const Region& region, int centers_per_axis,
                           double rel_tol) {
  const int m = std::max(2, centers_per_axis);
  const double patch = 1e-4 * std::max(region.width(), region.height());
  int rank = 0;
  for (const DomainPoint& c : sample_lattice(region, m)) {
    Eigen::Matrix<double, 25, 3> cloud;
    int row = 0;
    for (int t = -2; t <= 2; ++t)
      for (int s = -2; s <= 2; ++s) {
        const DomainPoint q{c.x + s * patch / 2.0, c.y + t * patch / 2.0};
        const FrameVector xi = gauss_map(q, field(q));
        cloud(row, 0) = xi.e1;
        cloud(row, 1) = xi.e2;
        cloud(row, 2) = xi.e3;
        ++row;
      }
    const Eigen::RowVector3d mean = cloud.colwise().mean();
    cloud.rowwise() -= mean;
    const Eigen::JacobiSVD<Eigen::Matrix<double, 25, 3>> svd(cloud);
    const auto& sv = svd.singularValues();
    if (sv(0) < 1e-12) continue;
    int r = 1;
    if (sv(1) > rel_tol * sv(0)) r = 2;
    rank = std::max(rank, r);
    if (rank == 2) break;
  }
  return rank;
}

VerticalSurfaceData vertical_surface_data(const VerticalProfile& prof, double u) {
  if (!(prof.a > 0.0)) throw DomainViolation("vertical_surface_data: profile requires a > 0");
  const double a = prof.a, ap = prof.ap, app = prof.app;
  const double s = std::sqrt(1.0 + ap * ap);

  // Normal field xi and its u-derivative, extended off the surface
  // independently of y and z (any extension gives the same covariant
  // derivative along the surface).
  FrameFieldJet xi;
  xi.value = {ap / s, -1.0 / s, 0.0};
  xi.d_dx = {app / (s * s * s), ap * app / (s * s * s), 0.0};
  xi.d_dy = {0.0, 0.0, 0.0};
  xi.d_dz = {0.0, 0.0, 0.0};

  const DomainPoint p{u, a};
  const FrameVector Xu{1.0 / a, ap / a, 0.0};  // Y_u in the frame
  const FrameVector Xv{0.0, 0.0, 1.0};         // Y_v = d/dz

  const FrameVector DXu_xi = covariant_derivative(xi, Xu, p);
  const FrameVector DXv_xi = covariant_derivative(xi, Xv, p);

  VerticalSurfaceData out;
  out.E = (1.0 + ap * ap) / (a * a);
  out.F = 0.0;
  out.G = 1.0;
  out.L = -DXu_xi.dot(Xu);
  out.M = -DXu_xi.dot(Xv);  // equals -DXv_xi . Xu; both vanish structurally
  out.N = -DXv_xi.dot(Xv);
  out.H = out.L / (2.0 * out.E);
  out.normal = xi.value;
  return out;
}

VerticalSurfaceData vertical_plane_data(double y) {
  if (!(y > 0.0)) throw DomainViolation("vertical_plane_data: y must be positive");

  // Parametrization (c, u, v), normal xi = E1 (constant frame field); the
  // second form is still evaluated through the connection rather than
  // asserted zero, so the cancellation of the Christoffel terms is exercised.
  FrameFieldJet xi;
  xi.value = {1.0, 0.0, 0.0};

  const DomainPoint p{0.0, y};
  const FrameVector Zu{0.0, 1.0 / y, 0.0};
  const FrameVector Zv{0.0, 0.0, 1.0};
  const FrameVector DZu_xi = covariant_derivative(xi, Zu, p);
  const FrameVector DZv_xi = covariant_derivative(xi, Zv, p);

  VerticalSurfaceData out;
  out.E = 1.0 / (y * y);
  out.F = 0.0;
  out.G = 1.0;
  out.L = -DZu_xi.dot(Zu);
  out.M = -DZu_xi.dot(Zv);
  out.N = -DZv_xi.dot(Zv);
  out.H = out.L / (2.0 * out.E);
  out.normal = xi.value;
  return out;
}

}  // namespace h2r
