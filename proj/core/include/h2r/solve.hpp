#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "h2r/grid.hpp"

namespace h2r {

struct SolveOptions {
  double tol = 1e-10;       // convergence: max |residual| at interior nodes
  int max_iter = 50;        // Newton iterations
  int max_backtracks = 20;  // Armijo halvings per iteration
  bool verbose = false;     // iteration log to stderr
};

struct SolveReport {
  bool converged = false;
  int iterations = 0;
  double residual_max = 0.0;          // final max |residual|
  double residual_norm = 0.0;         // final 2-norm
  std::vector<double> step_lengths;   // accepted damping per iteration
  std::vector<double> residual_path;  // max |residual| after each iteration
  int descent_steps = 0;              // fallback gradient-descent iterations used

  std::string to_text() const;
};

/// Newton failed to reach tol within max_iter; carries the report and the
/// last iterate.
struct NonConvergence : std::runtime_error {
  SolveReport report;
  GridField iterate;
  NonConvergence(SolveReport r, GridField it);
};

/// The linearized system was numerically singular; carries the iterate at
/// which factorization failed.
struct SingularJacobian : std::runtime_error {
  GridField iterate;
  explicit SingularJacobian(GridField it);
};

/// Interior residual of the flux-form discretization of the minimal
/// surface equation Div( grad f / sqrt(1 + y^2 |grad f|^2) ) = 0:
/// face-centered fluxes with y at face centers, divergence by centered
/// differences.  Returns (ny-2) x (nx-2) values, row-major in j.
std::vector<double> assemble_residual(const GridField& g);

/// Max |assemble_residual| (0 for grids with no interior).
double residual_max(const GridField& g);

/// Solution of the 5-point flat Laplace equation with g's boundary data;
/// the standard Newton seed.
GridField harmonic_extension(const GridField& boundary);

/// Damped Newton iteration for the Dirichlet problem with g's perimeter
/// data (interior values of g are used as the starting iterate when
/// `use_interior_seed`, else the harmonic extension seeds).  Line search
/// halves the step until the residual 2-norm decreases; when a Newton step
/// cannot decrease it at all, one explicit area-descent step is taken
/// instead.  Throws NonConvergence / SingularJacobian.
std::pair<GridField, SolveReport> solve_dirichlet(const GridField& g, const SolveOptions& opts = {},
                                                  bool use_interior_seed = false);

}  // namespace h2r
