#include "h2r/mesh.hpp"

#include <sstream>

#include "io_util.hpp"

namespace h2r {

void Mesh::validate() const {
  const int n = static_cast<int>(vertices.size());
  for (const auto& f : faces) {
    for (int idx : f)
      if (idx < 0 || idx >= n) throw DomainViolation("Mesh: face index out of range");
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
      throw DomainViolation("Mesh: degenerate face");
  }
}

namespace {

// Two triangles per cell, vertices row-major in the second index.
void emit_faces(Mesh& mesh, int nu, int nv) {
  for (int j = 0; j + 1 < nv; ++j)
    for (int i = 0; i + 1 < nu; ++i) {
      const int k00 = j * nu + i, k10 = k00 + 1, k01 = k00 + nu, k11 = k01 + 1;
      mesh.faces.push_back({k00, k10, k11});
      mesh.faces.push_back({k00, k11, k01});
    }
}

}  // namespace

Mesh graph_mesh(const SolutionSpec& spec, const Region& region, int nx, int ny) {
  if (nx < 2 || ny < 2) throw DomainViolation("graph_mesh: need nx, ny >= 2");
  Mesh mesh;
  mesh.vertices.reserve(static_cast<size_t>(nx) * ny);
  const double hx = region.width() / (nx - 1), hy = region.height() / (ny - 1);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const DomainPoint p{region.x0 + i * hx, region.y0 + j * hy};
      mesh.vertices.push_back({p.x, p.y, jets(spec, p).f});
    }
  emit_faces(mesh, nx, ny);
  mesh.validate();
  return mesh;
}

Mesh vertical_mesh(const SolutionSpec& spec, double u0, double u1, double v0, double v1, int nu,
                   int nv) {
  if (nu < 2 || nv < 2) throw DomainViolation("vertical_mesh: need nu, nv >= 2");
  if (!(u0 < u1) || !(v0 < v1)) throw DomainViolation("vertical_mesh: empty parameter ranges");
  if (is_graph_family(spec.family))
    throw std::invalid_argument("vertical_mesh: spec is a graph family; use graph_mesh");

  Mesh mesh;
  mesh.vertices.reserve(static_cast<size_t>(nu) * nv);
  const double hu = (u1 - u0) / (nu - 1), hv = (v1 - v0) / (nv - 1);
  for (int j = 0; j < nv; ++j)
    for (int i = 0; i < nu; ++i) {
      const double u = u0 + i * hu, v = v0 + j * hv;
      if (spec.family == Family::VerticalPlane) {
        if (!(u > 0.0)) throw DomainViolation("vertical_mesh: vertical plane needs u > 0");
        mesh.vertices.push_back({spec.c, u, v});
      } else {
        mesh.vertices.push_back({u, profile(spec, u).a, v});
      }
    }
  emit_faces(mesh, nu, nv);
  mesh.validate();
  return mesh;
}

void write_obj(const Mesh& mesh, const std::string& path) {
  std::ostringstream out;
  for (const auto& v : mesh.vertices)
    out << "v " << detail::format_g17(v[0]) << ' ' << detail::format_g17(v[1]) << ' '
        << detail::format_g17(v[2]) << '\n';
  for (const auto& f : mesh.faces)
    out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
  detail::atomic_write(path, out.str());
}

}  // namespace h2r
