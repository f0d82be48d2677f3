#pragma once

#include <array>
#include <string>
#include <vector>

#include "h2r/catalog.hpp"
#include "h2r/geometry.hpp"

namespace h2r {

/// Triangle mesh in (x, y, z).  Vertex order and face orientation are
/// deterministic functions of the generating config, so exports are
/// byte-stable.
struct Mesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<int, 3>> faces;  // 0-based indices

  /// Throws DomainViolation on out-of-range indices or degenerate
  /// (repeated-vertex) faces.
  void validate() const;
};

/// Graph mesh over a region: vertices (x_i, y_j, f(x_i, y_j)) row-major in
/// j, two triangles per cell.  nx, ny >= 2.  Throws DomainViolation if a
/// node is inadmissible for the spec.
Mesh graph_mesh(const SolutionSpec& spec, const Region& region, int nx, int ny);

/// Vertical-surface mesh (u, a(u), v) over [u0,u1] x [v0,v1], nu x nv
/// nodes.  VerticalPlane uses (c, u, v).
Mesh vertical_mesh(const SolutionSpec& spec, double u0, double u1, double v0, double v1, int nu,
                   int nv);

/// Wavefront OBJ writer: `v x y z` lines (17 significant digits) followed
/// by 1-based `f` lines.  Atomic (temp file + rename).
void write_obj(const Mesh& mesh, const std::string& path);

}  // namespace h2r
