#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eigenbounds/eigen.hpp"
#include "spectral/spectral.hpp"

namespace semilinear {

struct EmbeddingPack {
  Interval sigma;
  Interval gamma;  // 3 C4^3
  Interval C1;     // H^{-1} <- L^inf, sqrt(|Omega|) C2
  Interval C2;     // 1 / sqrt(lambda_1 + sigma)
  Interval C4;     // H^1_0 -> L^4
  Interval C6;     // H^1_0 -> L^6
};

// Embedding constants of the unit square for the H^1_0 norm with shift sigma.
// C4^4 = 1/(4 (pi^2 + sigma)) and C6^6 = (9/4) pi^4 / (2 pi^2 + sigma)^3; the
// C6 formula needs sigma <= pi^2.
EmbeddingPack make_embedding_pack(const Interval& sigma);

struct GridPoint {
  Interval lambda;
  IntervalExpansion omega;
  Interval delta;         // H^{-1} defect bound
  Interval K;             // bound for the inverse linearization
  Interval l4_norm;
  Interval l6_norm;
  Interval h01_norm;
  Interval sup_norm_bound;
};

// Norm fields of a grid point computed from omega.
void fill_norms(GridPoint& gp, const Interval& sigma);

struct InterpolatedDefect {
  Interval delta;
  Interval tau;
  Interval rho;
};

// Defect bound valid on the whole subinterval between two adjacent grid points.
InterpolatedDefect interp_defect(const GridPoint& left, const GridPoint& right, const EmbeddingPack& pack);

struct InterpolatedK {
  Interval K;
  Interval mu;
  Interval nu;
  Interval zeta;
};

// K bound on the neighbourhood of gp reaching halfway to each given neighbour.
// Throws VerificationFailure if zeta >= 1.
InterpolatedK interp_K(const GridPoint& gp, const GridPoint* left, const GridPoint* right,
                       const EmbeddingPack& pack);

// psi(alpha) = alpha/K - gamma alpha^2 (l4 + C4 alpha)
Interval psi(const Interval& alpha, const Interval& K, const Interval& l4, const EmbeddingPack& pack);
// Maximizer of psi.
Interval alpha_bar(const Interval& K, const Interval& l4, const EmbeddingPack& pack);
// Closed form of psi(alpha_bar).
Interval psi_max(const Interval& K, const Interval& l4, const EmbeddingPack& pack);
// 2 K gamma alpha (l4 + C4 alpha) < 1, verified at the upper end of alpha.
bool contraction_check(const Interval& alpha, const Interval& K, const Interval& l4, const EmbeddingPack& pack);

struct AlphaResult {
  Interval alpha;
  Interval alpha_bar;
};

// Smallest dyadic-bisected alpha in (0, alpha_bar] with delta <= psi(alpha),
// to relative width 1e-3. Throws VerificationFailure when the defect is too
// large for any alpha.
AlphaResult alpha_min(const Interval& delta, const Interval& K, const Interval& l4, const EmbeddingPack& pack);

struct HalfIntervalCertificate {
  int subinterval = 0;  // i: between grid points i-1 and i
  bool right_half = false;
  Interval lambda_lo;
  Interval lambda_hi;
  Interval delta;
  Interval K;
  Interval l4_bound;
  Interval alpha;
  Interval alpha_bar;
  Interval eta;
  Interval h01_lower;
  // aux quantities
  Interval rho, tau, mu, nu, zeta;
  bool check_defect = false;       // delta <= psi(alpha)
  bool check_contraction = false;  // at alpha
  bool check_eta = false;          // contraction at alpha + eta
  bool check_nontrivial = false;   // interpolated H^1_0 norm > alpha
  std::string failure;             // empty when valid

  bool valid() const {
    return failure.empty() && check_defect && check_contraction && check_eta && check_nontrivial;
  }
};

struct BranchResult {
  std::vector<HalfIntervalCertificate> certificates;
  Interval eta;
  bool all_valid = false;
  // Index of the first invalid certificate, if any.
  std::optional<std::size_t> first_failure;
};

// Certificates for the 2M half-intervals of a grid with M+1 points.
BranchResult verify_branch(const std::vector<GridPoint>& grid, const EmbeddingPack& pack);

}  // namespace semilinear
