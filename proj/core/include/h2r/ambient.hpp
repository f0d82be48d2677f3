#pragma once

#include <array>

#include "h2r/geometry.hpp"

namespace h2r {

/// Christoffel symbols Gamma^k_{ij} of H^2 x R in the coordinate basis
/// (d/dx, d/dy, d/dz), indices 0-based in code.  Reports and file formats
/// label the same symbols 1-based (Gamma^1_12 etc.).  Entries not produced
/// by the closed form are exactly zero.
struct ChristoffelTable {
  // gamma[k][i][j] = Gamma^k_{ij}
  std::array<std::array<std::array<double, 3>, 3>, 3> gamma{};

  double operator()(int k, int i, int j) const { return gamma[k][i][j]; }
};

/// Product metric tensor of H^2 x R at p in coordinates (x, y, z):
/// diag(1/y^2, 1/y^2, 1).
std::array<std::array<double, 3>, 3> metric_tensor(const DomainPoint& p);

/// Christoffel symbols at p.  Nonzero entries are
/// Gamma^1_{12} = Gamma^1_{21} = Gamma^2_{22} = -1/y and Gamma^2_{11} = 1/y.
ChristoffelTable christoffels(const DomainPoint& p);

/// Geodesic curvature of a curve graphed as y = y(x) in H^2, oriented by
/// increasing x with the normal chosen so that horocycles y = const give +1:
///   k_g = (y y'' + y'^2 + 1) / (1 + y'^2)^{3/2}.
/// Vanishes exactly on semicircles centered on the x-axis.
double geodesic_curvature_graph_curve(double y, double yp, double ypp);

/// First-order data of a frame-component vector field V = (c1, c2, c3):
/// the value and its partial derivatives with respect to x, y, z.  All four
/// members are component triples in the orthonormal frame.
struct FrameFieldJet {
  FrameVector value;
  FrameVector d_dx;
  FrameVector d_dy;
  FrameVector d_dz;
};

/// Covariant derivative nabla_X V at p for the Levi-Civita connection of
/// H^2 x R.  X and the result are given in the orthonormal frame; the
/// computation converts to coordinates, applies the Christoffel symbols,
/// and converts back.
FrameVector covariant_derivative(const FrameFieldJet& V, const FrameVector& X,
                                 const DomainPoint& p);

}  // namespace h2r
