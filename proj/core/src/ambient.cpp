#include "h2r/ambient.hpp"

#include <cmath>

namespace h2r {

std::array<std::array<double, 3>, 3> metric_tensor(const DomainPoint& p) {
  const double iy2 = 1.0 / (p.y * p.y);
  return {{{iy2, 0.0, 0.0}, {0.0, iy2, 0.0}, {0.0, 0.0, 1.0}}};
}

ChristoffelTable christoffels(const DomainPoint& p) {
  const double iy = 1.0 / p.y;
  ChristoffelTable t;
  t.gamma[0][0][1] = -iy;  // Gamma^1_12
  t.gamma[0][1][0] = -iy;  // Gamma^1_21
  t.gamma[1][1][1] = -iy;  // Gamma^2_22
  t.gamma[1][0][0] = iy;   // Gamma^2_11
  return t;
}

double geodesic_curvature_graph_curve(double y, double yp, double ypp) {
  if (!(y > 0.0)) throw DomainViolation("geodesic_curvature_graph_curve: y must be positive");
  const double s = 1.0 + yp * yp;
  return (y * ypp + yp * yp + 1.0) / (s * std::sqrt(s));
}

FrameVector covariant_derivative(const FrameFieldJet& V, const FrameVector& X,
                                 const DomainPoint& p) {
  const double y = p.y;

  // Coordinate components of a frame triple (c1, c2, c3) at height y are
  // (c1 y, c2 y, c3); the product rule contributes the extra c-terms to
  // the y-partials below.
  const double Vc[3] = {V.value.e1 * y, V.value.e2 * y, V.value.e3};
  const double Xc[3] = {X.e1 * y, X.e2 * y, X.e3};

  // dVc[i][k] = d(V^k_coord)/d(coord_i)
  const double dVc[3][3] = {
      {V.d_dx.e1 * y, V.d_dx.e2 * y, V.d_dx.e3},
      {V.d_dy.e1 * y + V.value.e1, V.d_dy.e2 * y + V.value.e2, V.d_dy.e3},
      {V.d_dz.e1 * y, V.d_dz.e2 * y, V.d_dz.e3},
  };

  const ChristoffelTable G = christoffels(p);

  double res[3];
  for (int k = 0; k < 3; ++k) {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) {
      acc += Xc[i] * dVc[i][k];
      for (int j = 0; j < 3; ++j) acc += G(k, i, j) * Xc[i] * Vc[j];
    }
    res[k] = acc;
  }
  return {res[0] / y, res[1] / y, res[2]};
}

}  // namespace h2r
