#include "branch/branch.hpp"

#include <cmath>

#include "interval/constants.hpp"

namespace semilinear {

EmbeddingPack make_embedding_pack(const Interval& sigma) {
  const DomainConstants& k = constants();
  if (!sigma.certainly_positive()) throw InvalidArgument("sigma must be positive");
  if (!(sigma.hi() <= k.pi_sq.lo())) throw InvalidArgument("the L6 embedding bound needs sigma <= pi^2");
  EmbeddingPack p;
  p.sigma = sigma;
  p.C4 = root(Interval(1.0) / (Interval(4.0) * (k.pi_sq + sigma)), 4);
  p.gamma = Interval(3.0) * pow(p.C4, 3);
  p.C2 = Interval(1.0) / sqrt(k.lambda1 + sigma);
  p.C1 = p.C2;
  const Interval two_pi_sq_sigma = k.lambda1 + sigma;
  p.C6 = root(rational(9, 4) * sqr(k.pi_sq) / pow(two_pi_sq_sigma, 3), 6);
  return p;
}

void fill_norms(GridPoint& gp, const Interval& sigma) {
  const auto q = quadratic_norms(gp.omega, sigma);
  gp.h01_norm = sqrt(clamp_nonnegative(q.h01_sq));
  gp.l4_norm = root(clamp_nonnegative(quartic_sum(gp.omega)), 4);
  gp.l6_norm = root(clamp_nonnegative(sextic_sum(gp.omega)), 6);
  gp.sup_norm_bound = sup_bound(gp.omega);
}

InterpolatedDefect interp_defect(const GridPoint& left, const GridPoint& right, const EmbeddingPack& pack) {
  const IntervalExpansion diff = right.omega - left.omega;
  const Interval dsup = sup_bound(diff);
  const Interval wmax = max(left.sup_norm_bound, right.sup_norm_bound);
  const Interval dl = right.lambda - left.lambda;
  InterpolatedDefect r;
  r.tau = clamp_nonnegative(rational(1, 4) * pack.C1 * dl * dsup);
  r.rho = rational(3, 4) * pack.C1 * wmax * sqr(dsup);
  r.delta = max(left.delta, right.delta) + r.tau + r.rho;
  return r;
}

namespace {

Interval h01_distance(const GridPoint& a, const GridPoint& b, const Interval& sigma) {
  return sqrt(clamp_nonnegative(quadratic_norms(a.omega - b.omega, sigma).h01_sq));
}

}  // namespace

InterpolatedK interp_K(const GridPoint& gp, const GridPoint* left, const GridPoint* right,
                       const EmbeddingPack& pack) {
  InterpolatedK r;
  r.mu = Interval(0.0);
  r.nu = Interval(0.0);
  const Interval half(0.5);
  if (left) {
    r.mu = max(r.mu, half * (gp.lambda - left->lambda));
    r.nu = max(r.nu, half * h01_distance(gp, *left, pack.sigma));
  }
  if (right) {
    r.mu = max(r.mu, half * (right->lambda - gp.lambda));
    r.nu = max(r.nu, half * h01_distance(*right, gp, pack.sigma));
  }
  r.mu = Interval(0.0, std::max(r.mu.hi(), 0.0));
  const Interval lambda1_sigma = constants().lambda1 + pack.sigma;
  r.zeta = gp.K * (r.mu / lambda1_sigma + Interval(2.0) * pack.gamma * (gp.l4_norm + pack.C4 * r.nu) * r.nu);
  if (!(r.zeta.hi() < 1.0))
    throw VerificationFailure("grid too coarse near lambda = " + std::to_string(gp.lambda.mid()) +
                              ": zeta = " + to_string(r.zeta) + " >= 1");
  r.K = gp.K / (Interval(1.0) - r.zeta);
  return r;
}

Interval psi(const Interval& alpha, const Interval& K, const Interval& l4, const EmbeddingPack& pack) {
  return alpha / K - pack.gamma * sqr(alpha) * (l4 + pack.C4 * alpha);
}

Interval alpha_bar(const Interval& K, const Interval& l4, const EmbeddingPack& pack) {
  const Interval three_c4 = Interval(3.0) * pack.C4;
  return (sqrt(sqr(l4) + three_c4 / (K * pack.gamma)) - l4) / three_c4;
}

Interval psi_max(const Interval& K, const Interval& l4, const EmbeddingPack& pack) {
  // psi(alpha_bar) = gamma alpha_bar^2 (l4 + 2 C4 alpha_bar) with
  // alpha_bar = 1 / (gamma K (R + l4)), R = sqrt(l4^2 + 3 C4 / (gamma K)).
  const Interval r = sqrt(sqr(l4) + Interval(3.0) * pack.C4 / (pack.gamma * K));
  return (l4 + Interval(2.0) * r) / (Interval(3.0) * pack.gamma * sqr(K) * sqr(r + l4));
}

bool contraction_check(const Interval& alpha, const Interval& K, const Interval& l4, const EmbeddingPack& pack) {
  const Interval a(alpha.hi());
  const Interval v = Interval(2.0) * K * pack.gamma * a * (l4 + pack.C4 * a);
  return v.hi() < 1.0;
}

AlphaResult alpha_min(const Interval& delta, const Interval& K, const Interval& l4, const EmbeddingPack& pack) {
  AlphaResult r;
  r.alpha_bar = alpha_bar(K, l4, pack);
  const double top = r.alpha_bar.mid();
  auto passes = [&](double a) { return delta.hi() <= psi(Interval(a), K, l4, pack).lo(); };
  if (!(top > 0.0) || !passes(top))
    throw VerificationFailure("defect too large: recompute omega more accurately or refine the grid (delta = " +
                              to_string(delta) + ", psi(alpha_bar) = " + to_string(psi_max(K, l4, pack)) + ")");
  if (delta.hi() == 0.0) {
    r.alpha = Interval(0.0, std::ldexp(top, -10));
    return r;
  }
  double lo = 0.0;
  double hi = top;
  for (int it = 0; it < 200 && hi - lo > 1e-3 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (passes(mid))
      hi = mid;
    else
      lo = mid;
  }
  r.alpha = Interval(hi);
  return r;
}

BranchResult verify_branch(const std::vector<GridPoint>& grid, const EmbeddingPack& pack) {
  if (grid.size() < 2) throw InvalidArgument("branch verification needs at least two grid points");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i].lambda.lo() >= grid[i - 1].lambda.lo() && grid[i].lambda.hi() >= grid[i - 1].lambda.hi()))
      throw InvalidArgument("grid must be ordered by lambda");
  const std::size_t n = grid.size();

  std::vector<std::optional<InterpolatedK>> ks(n);
  std::vector<std::string> kfail(n);
  for (std::size_t i = 0; i < n; ++i) {
    try {
      ks[i] = interp_K(grid[i], i > 0 ? &grid[i - 1] : nullptr, i + 1 < n ? &grid[i + 1] : nullptr, pack);
    } catch (const VerificationFailure& e) {
      kfail[i] = e.what();
    }
  }

  BranchResult res;
  for (std::size_t i = 1; i < n; ++i) {
    const GridPoint& a = grid[i - 1];
    const GridPoint& b = grid[i];
    const InterpolatedDefect d = interp_defect(a, b, pack);
    const Interval mid = Interval(0.5) * (a.lambda + b.lambda);
    const Interval l4_mid = Interval(0.5) * (a.l4_norm + b.l4_norm);
    const Interval h_lower =
        min(a.h01_norm, b.h01_norm) - sqrt(clamp_nonnegative(quadratic_norms(b.omega - a.omega, pack.sigma).h01_sq));
    for (int half = 0; half < 2; ++half) {
      const std::size_t gi = half == 0 ? i - 1 : i;
      HalfIntervalCertificate c;
      c.subinterval = static_cast<int>(i);
      c.right_half = half == 1;
      c.lambda_lo = half == 0 ? a.lambda : mid;
      c.lambda_hi = half == 0 ? mid : b.lambda;
      c.delta = d.delta;
      c.rho = d.rho;
      c.tau = d.tau;
      c.l4_bound = half == 0 ? max(a.l4_norm, l4_mid) : max(l4_mid, b.l4_norm);
      c.h01_lower = h_lower;
      if (!ks[gi]) {
        c.failure = "K: " + kfail[gi];
      } else {
        c.K = ks[gi]->K;
        c.mu = ks[gi]->mu;
        c.nu = ks[gi]->nu;
        c.zeta = ks[gi]->zeta;
        try {
          const AlphaResult ar = alpha_min(c.delta, c.K, c.l4_bound, pack);
          c.alpha = ar.alpha;
          c.alpha_bar = ar.alpha_bar;
          c.check_defect = c.delta.hi() <= psi(Interval(c.alpha.hi()), c.K, c.l4_bound, pack).lo();
          c.check_contraction = contraction_check(c.alpha, c.K, c.l4_bound, pack);
          c.check_nontrivial = c.h01_lower.lo() > c.alpha.hi();
          if (!c.check_defect) c.failure = "defect inequality delta <= psi(alpha) fails";
          else if (!c.check_contraction) c.failure = "contraction inequality fails at alpha";
          else if (!c.check_nontrivial) c.failure = "nontriviality: interpolated norm not above alpha";
        } catch (const VerificationFailure& e) {
          c.failure = e.what();
        }
      }
      res.certificates.push_back(std::move(c));
    }
  }

  // Largest dyadic eta <= 2^-10 for which every valid certificate keeps the
  // contraction inequality at alpha + eta.
  res.eta = Interval(0.0);
  for (int e = -10; e >= -80; --e) {
    const double eta = std::ldexp(1.0, e);
    bool ok = true;
    for (const auto& c : res.certificates) {
      if (!c.failure.empty()) continue;
      if (!contraction_check(Interval(c.alpha.hi()) + Interval(eta), c.K, c.l4_bound, pack)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      res.eta = Interval(eta);
      break;
    }
  }
  for (auto& c : res.certificates) {
    if (!c.failure.empty()) continue;
    c.eta = res.eta;
    c.check_eta = res.eta.certainly_positive();
    if (!c.check_eta) c.failure = "no uniform eta > 0 keeps the contraction inequality";
  }
  res.all_valid = true;
  for (std::size_t k = 0; k < res.certificates.size(); ++k)
    if (!res.certificates[k].valid()) {
      res.all_valid = false;
      if (!res.first_failure) res.first_failure = k;
    }
  return res;
}

}  // namespace semilinear
