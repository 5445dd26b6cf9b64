#pragma once

// Two-sided bounds for the eigenvalue problem
//   <u, v>_{H} = kappa * integral W u v   for all v,
// with <u, v>_H = integral grad u . grad v + sigma u v and the weight
//   W^(s) = sigma + lambda + 3 [(1 - s) c0 + s w^2],  0 <= s <= 1,
// restricted to the odd-odd (reflection symmetric) sine modes. At s = 0 the
// weight is constant and the spectrum is explicit; eigenvalues increase with
// s because W^(s) decreases.

#include <optional>
#include <vector>

#include "interval/matrix.hpp"
#include "spectral/spectral.hpp"

namespace semilinear {

struct WeightFunction {
  Interval sigma{1.0};
  Interval lambda{0.0};
  IntervalExpansion omega;
  double c0 = 0.0;  // constant bound for w^2 on the square
  double s = 1.0;   // homotopy parameter

  // sigma + lambda + 3 (1 - s) c0
  Interval constant_part() const;
  // c0 = sup_bound(w)^2 rounded up.
  static double c0_from(const IntervalExpansion& w);
};

struct EigenEnclosure {
  int index = 0;  // 1-based
  double lower = 0.0;
  double upper = 0.0;
};

struct RitzData {
  IntervalMatrix A1;  // H inner products of the trial functions
  IntervalMatrix A0;  // integral W phi_i phi_j
  IntervalMatrix A2;  // H inner products of (-Lap + sigma)^{-1} (W phi_i)
};

// Direct assembly for arbitrary trial functions.
RitzData assemble(const std::vector<IntervalExpansion>& trial, const WeightFunction& w);

// Enclosures of the Rayleigh-Ritz values; their upper endpoints bound the
// first m eigenvalues from above.
std::vector<Interval> rr_upper(const RitzData& data);

// Lehmann lower bounds given rho <= kappa_{m+1}. Entry i holds a lower bound
// for kappa_{i+1}, or nothing when the pencil did not produce one.
std::vector<std::optional<double>> lehmann_bounds(const RitzData& data, double rho);
// As lehmann_bounds, but requires a bound for every index and checks that the
// Rayleigh-Ritz values lie below rho.
std::vector<double> lehmann_lower(const RitzData& data, double rho);

// First `count` eigenvalues of the constant-weight problem at s = 0, as
// enclosures in ascending order.
std::vector<Interval> base_spectrum(const WeightFunction& w, int count);

struct EigenConfig {
  int basis_max = 31;  // largest sine index of the Ritz basis
  int m_max = 16;      // most trial functions used in one homotopy step
  int base_count = 40;
  double min_step = 1e-4;
  double ritz_margin = 1e-6;
};

struct HomotopyStep {
  double s = 0.0;
  int m = 0;
  double rho = 0.0;
};

struct HomotopyResult {
  double rho = 0.0;  // lower bound for kappa_{m+1} at s = 1
  std::vector<double> lower;  // lower bounds for kappa_1, kappa_2, ... at s = 1
  std::vector<HomotopyStep> steps;
};

// Precomputed Galerkin data of one weight on a fixed sine basis.
class EigenSystem {
 public:
  EigenSystem(const WeightFunction& w, const EigenConfig& cfg);

  int dim() const noexcept { return dim_; }
  const WeightFunction& weight() const noexcept { return w_; }
  const EigenConfig& config() const noexcept { return cfg_; }

  // Full-basis matrices at homotopy parameter s.
  IntervalMatrix a1() const;
  IntervalMatrix a0(double s) const;
  IntervalMatrix a2(double s) const;

  // Float Ritz values and vectors of the full basis at s (ascending).
  void ritz(double s, Eigen::VectorXd& values, Eigen::MatrixXd& vectors) const;

  // Rigorous matrices for the first m Ritz vectors.
  RitzData restrict(double s, const Eigen::MatrixXd& vectors, int m) const;

  // Adaptive chain from s = 0 to s = 1; returns rho <= kappa_{m_target+1}.
  // With an explicit schedule, every listed step must succeed.
  HomotopyResult homotopy(int m_target, const std::vector<double>& schedule = {}) const;

 private:
  WeightFunction w_;
  EigenConfig cfg_;
  int nb_ = 0;   // basis modes per axis
  int dim_ = 0;  // nb_^2
  std::vector<Interval> dtilde_;  // (i^2 + j^2) pi^2 + sigma per basis mode
  IntervalMatrix g_;              // integral w^2 phi_p phi_q
  IntervalMatrix m_;              // 1/4 sum_k E_kp E_kq / dtilde_k
};

HomotopyResult homotopy_bound(const WeightFunction& target, int m, const std::vector<double>& steps = {},
                              const EigenConfig& cfg = {});

// K = max{ k1/(1 - k1), k2/(k2 - 1) } from an upper bound of kappa_1 and a
// lower bound of kappa_2. Requires kappa_1 < 1 < kappa_2.
Interval compute_K(const std::vector<EigenEnclosure>& enclosures);

struct GridEigenResult {
  std::vector<EigenEnclosure> kappa;  // kappa_1, kappa_2
  Interval K;
  HomotopyResult homotopy;
};

// Enclosures of kappa_1 and kappa_2 of the target weight (s = 1) and K.
GridEigenResult grid_eigen_bounds(const WeightFunction& target, const EigenConfig& cfg = {});

}  // namespace semilinear
