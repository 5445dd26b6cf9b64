#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "spectral/spectral.hpp"

namespace semilinear {

struct ContinuationConfig {
  int N = 16;                 // largest sine index of the ansatz
  double lambda_start = 18.5;  // first solve, seeded by alpha0 * sin sin
  std::vector<double> lambda_grid;  // targets, solved in the listed order
  double alpha0 = 4.0;
  double newton_tol = 1e-13;   // max-norm of the coefficient update
  int max_iters = 60;

  void validate() const;
};

struct NewtonResult {
  FloatExpansion omega;
  std::vector<double> update_norms;  // max-norm of each Newton update
  double residual = 0.0;             // l2 norm of the Galerkin residual
};

// Galerkin residual coefficients F(i,j) = integral of (-Lap w - lambda w - w^3)
// sin(i pi x) sin(j pi y), for the modes of w.
FloatExpansion galerkin_residual(double lambda, const FloatExpansion& w);

// Galerkin Newton iteration for -Lap u = lambda u + u^3. Throws SolverError
// on non-convergence or when the iterate collapses to the zero solution.
NewtonResult newton_solve(double lambda, const FloatExpansion& omega0, const ContinuationConfig& cfg);

using SolveLog = std::function<void(double lambda, const NewtonResult&)>;

// Solves at lambda_start from alpha0 * sin sin, then along lambda_grid, each
// solve seeded by the previous one. Keys are the grid values.
std::map<double, FloatExpansion> continuation(const ContinuationConfig& cfg, const SolveLog& log = {});

// File name used for a solution at lambda, e.g. omega_0.1.csv.
std::string omega_filename(double lambda);

}  // namespace semilinear
