#include "solver/solver.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace semilinear {

void ContinuationConfig::validate() const {
  if (N < 1) throw InvalidArgument("N must be at least 1");
  if (!(alpha0 > 0.0)) throw InvalidArgument("alpha0 must be positive");
  if (!(newton_tol > 0.0)) throw InvalidArgument("newton_tol must be positive");
  if (max_iters < 1) throw InvalidArgument("max_iters must be positive");
  const double lambda1 = 2.0 * std::numbers::pi * std::numbers::pi;
  for (double l : lambda_grid)
    if (!(l >= 0.0 && l < lambda1)) throw InvalidArgument("grid value outside [0, lambda_1)");
  if (!(lambda_start >= 0.0 && lambda_start < lambda1))
    throw InvalidArgument("lambda_start outside [0, lambda_1)");
}

namespace {

double laplace_eigenvalue(int i, int j) {
  return (static_cast<double>(i) * i + static_cast<double>(j) * j) * std::numbers::pi * std::numbers::pi;
}

}  // namespace

FloatExpansion galerkin_residual(double lambda, const FloatExpansion& w) {
  const FloatExpansion cube = cube_to_sine(w);
  FloatExpansion f(w.max_index());
  for (int p = 0; p < w.modes(); ++p)
    for (int q = 0; q < w.modes(); ++q) {
      const double d = laplace_eigenvalue(2 * p + 1, 2 * q + 1);
      f.at(p, q) = 0.25 * ((d - lambda) * w.at(p, q) - cube.at(p, q));
    }
  return f;
}

NewtonResult newton_solve(double lambda, const FloatExpansion& omega0, const ContinuationConfig& cfg) {
  if (omega0.modes() > FloatExpansion::modes_for(cfg.N))
    throw InvalidArgument("initial expansion larger than the ansatz");
  NewtonResult res;
  res.omega = omega0.resized(cfg.N);
  const int n = res.omega.modes();
  const int dim = n * n;
  double last = INFINITY;
  for (int it = 0; it < cfg.max_iters; ++it) {
    FloatExpansion& w = res.omega;
    const FloatExpansion f = galerkin_residual(lambda, w);
    const auto sq = [&] {
      const auto s = signed_table(w);
      return convolve(s, s);
    }();
    const auto images = mode_images(sq, w.max_index(), w.max_index());
    // J(p,q) = 1/4 (d_p - lambda) delta_pq - 3 * integral w^2 phi_p phi_q,
    // and the integral equals 1/4 of coefficient p in w^2 phi_q.
    Eigen::MatrixXd jac(dim, dim);
    Eigen::VectorXd rhs(dim);
    for (int q = 0; q < dim; ++q)
      for (int p = 0; p < dim; ++p) jac(p, q) = -0.75 * images[q].data()[p];
    for (int p = 0; p < dim; ++p) {
      const int i = 2 * (p / n) + 1;
      const int j = 2 * (p % n) + 1;
      jac(p, p) += 0.25 * (laplace_eigenvalue(i, j) - lambda);
      rhs(p) = -f.data()[p];
    }
    const Eigen::VectorXd v = jac.partialPivLu().solve(rhs);
    double vmax = 0.0;
    for (int p = 0; p < dim; ++p) {
      w.data()[p] += v(p);
      vmax = std::max(vmax, std::fabs(v(p)));
    }
    if (!std::isfinite(vmax)) throw SolverError("Newton iteration produced non-finite values", last);
    res.update_norms.push_back(vmax);
    last = vmax;
    double amax = 0.0;
    for (double a : w.data()) amax = std::max(amax, std::fabs(a));
    if (vmax < cfg.newton_tol) {
      if (amax < 1e-8)
        throw SolverError("trivial-branch collapse: Newton converged to the zero solution", vmax);
      const FloatExpansion r = galerkin_residual(lambda, w);
      double s = 0.0;
      for (double x : r.data()) s += x * x;
      res.residual = std::sqrt(s);
      return res;
    }
  }
  throw SolverError("Newton iteration did not converge within max_iters", last);
}

std::map<double, FloatExpansion> continuation(const ContinuationConfig& cfg, const SolveLog& log) {
  cfg.validate();
  FloatExpansion seed(cfg.N);
  seed.at(0, 0) = cfg.alpha0;
  NewtonResult start;
  try {
    start = newton_solve(cfg.lambda_start, seed, cfg);
  } catch (const SolverError& e) {
    throw SolverError(std::string(e.what()) + " (lambda = " + std::to_string(cfg.lambda_start) + ")",
                      e.last_residual());
  }
  FloatExpansion cur = start.omega;
  std::map<double, FloatExpansion> out;
  for (double lam : cfg.lambda_grid) {
    NewtonResult r;
    try {
      r = newton_solve(lam, cur, cfg);
    } catch (const SolverError& e) {
      throw SolverError(std::string(e.what()) + " (lambda = " + std::to_string(lam) + ")", e.last_residual());
    }
    if (log) log(lam, r);
    cur = r.omega;
    out[lam] = r.omega;
  }
  return out;
}

std::string omega_filename(double lambda) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "omega_%.10g.csv", lambda);
  return buf;
}

}  // namespace semilinear
