#pragma once

#include <functional>
#include <string>
#include <vector>

#include "h2r/geometry.hpp"

namespace h2r {

/// Uniform tensor grid of nodal values on a Region.  Nodes are
/// (x_i, y_j) = (x0 + i hx, y0 + j hy), 0 <= i < nx, 0 <= j < ny, stored
/// row-major in j (the y index varies slowest).  nx, ny >= 3.
struct GridField {
  Region rect;
  int nx = 0, ny = 0;
  std::vector<double> values;

  GridField(Region r, int nx_, int ny_);

  double hx() const { return rect.width() / (nx - 1); }
  double hy() const { return rect.height() / (ny - 1); }
  double x(int i) const { return rect.x0 + i * hx(); }
  double y(int j) const { return rect.y0 + j * hy(); }
  DomainPoint point(int i, int j) const { return {x(i), y(j)}; }

  double& at(int i, int j) { return values[static_cast<size_t>(j) * nx + i]; }
  double at(int i, int j) const { return values[static_cast<size_t>(j) * nx + i]; }

  bool on_boundary(int i, int j) const {
    return i == 0 || j == 0 || i == nx - 1 || j == ny - 1;
  }
  int interior_count() const { return (nx - 2) * (ny - 2); }

  /// Dirichlet trace in deterministic order (j, then i, boundary nodes
  /// only).
  std::vector<double> boundary_values() const;

  /// Largest |difference| over all nodes; grids must be congruent.
  double max_diff(const GridField& other) const;
};

/// Fill every node from a function of the node's DomainPoint.
GridField tabulate(const Region& region, int nx, int ny,
                   const std::function<double(const DomainPoint&)>& f);

/// Grid holding f on the perimeter and fill_value inside.
GridField tabulate_boundary(const Region& region, int nx, int ny,
                            const std::function<double(const DomainPoint&)>& f,
                            double fill_value = 0.0);

/// CSV exchange format: one header line `x0,x1,y0,y1,nx,ny` followed by ny
/// rows of nx comma-separated values (row j = 0 first).  All floats are
/// printed with 17 significant digits, so a write/read/write cycle is
/// byte-identical.  Writes go to a temporary file in the target directory
/// and are renamed into place.
void write_grid_csv(const GridField& g, const std::string& path);
GridField read_grid_csv(const std::string& path);

}  // namespace h2r
