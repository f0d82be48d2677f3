#include "h2r/grid.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "io_util.hpp"

namespace h2r {

using detail::atomic_write;
using detail::format_g17;

GridField::GridField(Region r, int nx_, int ny_) : rect(r), nx(nx_), ny(ny_) {
  if (nx < 3 || ny < 3) throw DomainViolation("GridField: need nx, ny >= 3");
  values.assign(static_cast<size_t>(nx) * ny, 0.0);
}

std::vector<double> GridField::boundary_values() const {
  std::vector<double> out;
  out.reserve(2 * static_cast<size_t>(nx + ny) - 4);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      if (on_boundary(i, j)) out.push_back(at(i, j));
  return out;
}

double GridField::max_diff(const GridField& other) const {
  if (other.nx != nx || other.ny != ny)
    throw DomainViolation("GridField::max_diff: incongruent grids");
  double m = 0.0;
  for (size_t k = 0; k < values.size(); ++k)
    m = std::max(m, std::fabs(values[k] - other.values[k]));
  return m;
}

GridField tabulate(const Region& region, int nx, int ny,
                   const std::function<double(const DomainPoint&)>& f) {
  GridField g(region, nx, ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) g.at(i, j) = f(g.point(i, j));
  return g;
}

GridField tabulate_boundary(const Region& region, int nx, int ny,
                            const std::function<double(const DomainPoint&)>& f,
                            double fill_value) {
  GridField g(region, nx, ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      g.at(i, j) = g.on_boundary(i, j) ? f(g.point(i, j)) : fill_value;
  return g;
}

void write_grid_csv(const GridField& g, const std::string& path) {
  std::ostringstream out;
  out << format_g17(g.rect.x0) << ',' << format_g17(g.rect.x1) << ',' << format_g17(g.rect.y0)
      << ',' << format_g17(g.rect.y1) << ',' << g.nx << ',' << g.ny << '\n';
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      if (i) out << ',';
      out << format_g17(g.at(i, j));
    }
    out << '\n';
  }
  atomic_write(path, out.str());
}

GridField read_grid_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");

  auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    return cells;
  };
  auto to_double = [&](const std::string& s) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || errno == ERANGE)
      throw std::runtime_error("malformed number '" + s + "' in " + path);
    return v;
  };

  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty grid file " + path);
  const auto head = split(line);
  if (head.size() != 6) throw std::runtime_error("bad grid header in " + path);

  const Region rect(to_double(head[0]), to_double(head[1]), to_double(head[2]),
                    to_double(head[3]));
  const int nx = static_cast<int>(to_double(head[4]));
  const int ny = static_cast<int>(to_double(head[5]));
  GridField g(rect, nx, ny);

  for (int j = 0; j < ny; ++j) {
    if (!std::getline(in, line)) throw std::runtime_error("truncated grid file " + path);
    const auto cells = split(line);
    if (static_cast<int>(cells.size()) != nx)
      throw std::runtime_error("row length mismatch in " + path);
    for (int i = 0; i < nx; ++i) g.at(i, j) = to_double(cells[i]);
  }
  return g;
}

}  // namespace h2r
