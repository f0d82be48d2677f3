#include "h2r/solve.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>

#include "io_util.hpp"

namespace h2r {

namespace {

using detail::format_g17;

// Flux through the x-face between (i, j) and (i+1, j):
//   q = u / sqrt(1 + Y^2 (u^2 + v^2)),
// u the normal (x-) derivative, v the tangential (y-) derivative averaged
// over the four neighbors, Y the face-center height.  emit(p, q, d) reports
// d(flux)/d(node p,q) for the Newton matrix.
template <class Emit>
double x_face_flux(const GridField& g, int i, int j, Emit&& emit) {
  const double hx = g.hx(), hy = g.hy();
  const double u = (g.at(i + 1, j) - g.at(i, j)) / hx;
  const double v =
      (g.at(i, j + 1) + g.at(i + 1, j + 1) - g.at(i, j - 1) - g.at(i + 1, j - 1)) / (4.0 * hy);
  const double Y = g.y(j);
  const double K = 1.0 + Y * Y * (u * u + v * v);
  const double K32 = K * std::sqrt(K);
  const double dfu = (1.0 + Y * Y * v * v) / K32;
  const double dfv = -Y * Y * u * v / K32;

  emit(i + 1, j, dfu / hx);
  emit(i, j, -dfu / hx);
  emit(i, j + 1, dfv / (4.0 * hy));
  emit(i + 1, j + 1, dfv / (4.0 * hy));
  emit(i, j - 1, -dfv / (4.0 * hy));
  emit(i + 1, j - 1, -dfv / (4.0 * hy));
  return u / std::sqrt(K);
}

// Flux through the y-face between (i, j) and (i, j+1); Y is evaluated at
// the face center y_j + hy/2.
template <class Emit>
double y_face_flux(const GridField& g, int i, int j, Emit&& emit) {
  const double hx = g.hx(), hy = g.hy();
  const double u = (g.at(i, j + 1) - g.at(i, j)) / hy;
  const double v =
      (g.at(i + 1, j) + g.at(i + 1, j + 1) - g.at(i - 1, j) - g.at(i - 1, j + 1)) / (4.0 * hx);
  const double Y = g.y(j) + 0.5 * hy;
  const double K = 1.0 + Y * Y * (u * u + v * v);
  const double K32 = K * std::sqrt(K);
  const double dfu = (1.0 + Y * Y * v * v) / K32;
  const double dfv = -Y * Y * u * v / K32;

  emit(i, j + 1, dfu / hy);
  emit(i, j, -dfu / hy);
  emit(i + 1, j, dfv / (4.0 * hx));
  emit(i + 1, j + 1, dfv / (4.0 * hx));
  emit(i - 1, j, -dfv / (4.0 * hx));
  emit(i - 1, j + 1, -dfv / (4.0 * hx));
  return u / std::sqrt(K);
}

struct NoEmit {
  void operator()(int, int, double) const {}
};

// Residual at interior node (i, j): centered divergence of the face
// fluxes; emit receives the residual's derivative w.r.t. each stencil node.
template <class Emit>
double node_residual(const GridField& g, int i, int j, Emit&& emit) {
  const double hx = g.hx(), hy = g.hy();
  auto scaled = [&](double s) {
    return [&emit, s](int p, int q, double d) { emit(p, q, s * d); };
  };
  const double fe = x_face_flux(g, i, j, scaled(1.0 / hx));
  const double fw = x_face_flux(g, i - 1, j, scaled(-1.0 / hx));
  const double fn = y_face_flux(g, i, j, scaled(1.0 / hy));
  const double fs = y_face_flux(g, i, j - 1, scaled(-1.0 / hy));
  return (fe - fw) / hx + (fn - fs) / hy;
}

// Discrete area: cell-centered gradients, one quadrature point per cell.
// Used only by the descent fallback's line search.
double discrete_area(const GridField& g) {
  const double hx = g.hx(), hy = g.hy();
  double acc = 0.0;
  for (int j = 0; j + 1 < g.ny; ++j)
    for (int i = 0; i + 1 < g.nx; ++i) {
      const double u =
          (g.at(i + 1, j) + g.at(i + 1, j + 1) - g.at(i, j) - g.at(i, j + 1)) / (2.0 * hx);
      const double v =
          (g.at(i, j + 1) + g.at(i + 1, j + 1) - g.at(i, j) - g.at(i + 1, j)) / (2.0 * hy);
      const double Y = g.y(j) + 0.5 * hy;
      acc += std::sqrt(1.0 + Y * Y * (u * u + v * v)) / (Y * Y);
    }
  return acc * hx * hy;
}

int interior_index(const GridField& g, int i, int j) { return (j - 1) * (g.nx - 2) + (i - 1); }

}  // namespace

std::vector<double> assemble_residual(const GridField& g) {
  std::vector<double> r;
  r.reserve(static_cast<size_t>(g.interior_count()));
  for (int j = 1; j + 1 < g.ny; ++j)
    for (int i = 1; i + 1 < g.nx; ++i) r.push_back(node_residual(g, i, j, NoEmit{}));
  return r;
}

double residual_max(const GridField& g) {
  double m = 0.0;
  for (double v : assemble_residual(g)) m = std::max(m, std::fabs(v));
  return m;
}

GridField harmonic_extension(const GridField& boundary) {
  const GridField& b = boundary;
  const int n = b.interior_count();
  const double ax = 1.0 / (b.hx() * b.hx()), ay = 1.0 / (b.hy() * b.hy());

  Eigen::SparseMatrix<double> A(n, n);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<size_t>(n) * 5);

  for (int j = 1; j + 1 < b.ny; ++j)
    for (int i = 1; i + 1 < b.nx; ++i) {
      const int row = interior_index(b, i, j);
      trips.emplace_back(row, row, 2.0 * (ax + ay));
      auto couple = [&](int p, int q, double coeff) {
        if (b.on_boundary(p, q))
          rhs(row) += coeff * b.at(p, q);
        else
          trips.emplace_back(row, interior_index(b, p, q), -coeff);
      };
      couple(i + 1, j, ax);
      couple(i - 1, j, ax);
      couple(i, j + 1, ay);
      couple(i, j - 1, ay);
    }
  A.setFromTriplets(trips.begin(), trips.end());

  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu(A);
  if (lu.info() != Eigen::Success) throw SingularJacobian(boundary);
  const Eigen::VectorXd sol = lu.solve(rhs);

  GridField out = boundary;
  for (int j = 1; j + 1 < out.ny; ++j)
    for (int i = 1; i + 1 < out.nx; ++i) out.at(i, j) = sol(interior_index(out, i, j));
  return out;
}

NonConvergence::NonConvergence(SolveReport r, GridField it)
    : std::runtime_error("solve_dirichlet: no convergence after " + std::to_string(r.iterations) +
                         " iterations (max residual " + format_g17(r.residual_max) + ")"),
      report(std::move(r)),
      iterate(std::move(it)) {}

SingularJacobian::SingularJacobian(GridField it)
    : std::runtime_error("solve_dirichlet: singular linearized system"), iterate(std::move(it)) {}

std::string SolveReport::to_text() const {
  std::ostringstream out;
  out << "converged = " << (converged ? "true" : "false") << '\n';
  out << "iterations = " << iterations << '\n';
  out << "descent_steps = " << descent_steps << '\n';
  out << "residual_max = " << format_g17(residual_max) << '\n';
  out << "residual_norm = " << format_g17(residual_norm) << '\n';
  out << "step_lengths =";
  for (double s : step_lengths) out << ' ' << format_g17(s);
  out << '\n';
  out << "residual_path =";
  for (double s : residual_path) out << ' ' << format_g17(s);
  out << '\n';
  return out.str();
}

std::pair<GridField, SolveReport> solve_dirichlet(const GridField& g, const SolveOptions& opts,
                                                  bool use_interior_seed) {
  GridField x = use_interior_seed ? g : harmonic_extension(g);
  const int n = x.interior_count();
  SolveReport rep;

  auto eval = [&](const GridField& field) {
    const std::vector<double> r = assemble_residual(field);
    Eigen::VectorXd v(n);
    for (int k = 0; k < n; ++k) v(k) = r[static_cast<size_t>(k)];
    return v;
  };

  Eigen::VectorXd R = eval(x);

  for (int it = 0; it < opts.max_iter; ++it) {
    rep.residual_max = R.lpNorm<Eigen::Infinity>();
    rep.residual_norm = R.norm();
    if (rep.residual_max <= opts.tol) {
      rep.converged = true;
      break;
    }

    // Linearize: J delta = -R.
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<size_t>(n) * 9);
    for (int j = 1; j + 1 < x.ny; ++j)
      for (int i = 1; i + 1 < x.nx; ++i) {
        const int row = interior_index(x, i, j);
        node_residual(x, i, j, [&](int p, int q, double d) {
          if (!x.on_boundary(p, q)) trips.emplace_back(row, interior_index(x, p, q), d);
        });
      }
    Eigen::SparseMatrix<double> J(n, n);
    J.setFromTriplets(trips.begin(), trips.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu(J);
    if (lu.info() != Eigen::Success) throw SingularJacobian(x);
    const Eigen::VectorXd delta = lu.solve(-R);

    ++rep.iterations;

    // Armijo on the residual 2-norm.
    const double base_norm = R.norm();
    double alpha = 1.0;
    bool accepted = false;
    for (int bt = 0; bt <= opts.max_backtracks; ++bt, alpha *= 0.5) {
      GridField trial = x;
      for (int j = 1; j + 1 < trial.ny; ++j)
        for (int i = 1; i + 1 < trial.nx; ++i)
          trial.at(i, j) += alpha * delta(interior_index(trial, i, j));
      const Eigen::VectorXd Rt = eval(trial);
      if (Rt.norm() < base_norm) {
        x = std::move(trial);
        R = Rt;
        rep.step_lengths.push_back(alpha);
        accepted = true;
        break;
      }
    }

    if (!accepted) {
      // Area-descent fallback: f += beta * R decreases the discrete area to
      // first order (the residual is the negative area gradient density).
      const double area0 = discrete_area(x);
      double beta = 0.25 * std::min(x.hx(), x.hy()) * std::min(x.hx(), x.hy());
      bool improved = false;
      for (int bt = 0; bt <= opts.max_backtracks; ++bt, beta *= 0.5) {
        GridField trial = x;
        for (int j = 1; j + 1 < trial.ny; ++j)
          for (int i = 1; i + 1 < trial.nx; ++i)
            trial.at(i, j) += beta * R(interior_index(trial, i, j));
        if (discrete_area(trial) < area0) {
          x = std::move(trial);
          R = eval(x);
          rep.step_lengths.push_back(0.0);
          ++rep.descent_steps;
          improved = true;
          break;
        }
      }
      if (!improved) break;  // stalled; reported as non-convergence below
    }

    rep.residual_path.push_back(R.lpNorm<Eigen::Infinity>());
    if (opts.verbose)
      std::cerr << "newton it " << rep.iterations << "  max|R| = " << rep.residual_path.back()
                << '\n';
  }

  rep.residual_max = R.lpNorm<Eigen::Infinity>();
  rep.residual_norm = R.norm();
  if (!rep.converged && rep.residual_max <= opts.tol) rep.converged = true;
  if (!rep.converged) throw NonConvergence(rep, x);
  return {x, rep};
}

}  // namespace h2r
