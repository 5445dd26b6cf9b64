#include "endgame/endgame.hpp"

#include "interval/constants.hpp"

namespace semilinear {

SupNormPack SupNormPack::unit_square() {
  SupNormPack p;
  p.C0_hat = Interval(1.0);
  p.C1_hat = rational(11548, 10000) * sqrt(rational(2, 3));
  p.C2_hat = rational(22361, 100000) * sqrt(rational(28, 45));
  return p;
}

Interval sup_error_bound(const Interval& alpha, const Interval& delta_hat, const Interval& l6_norm,
                         const Interval& lambda_bar, const SupNormPack& pack, const EmbeddingPack& emb) {
  const Interval& c6 = emb.C6;
  const Interval linear = (pack.C0_hat + lambda_bar * pack.C2_hat) / sqrt(constants().lambda1 + emb.sigma) + pack.C1_hat;
  const Interval cubic = Interval(3.0) * c6 * pack.C2_hat *
                         (sqr(l6_norm) + c6 * l6_norm * alpha + rational(1, 3) * sqr(c6) * sqr(alpha));
  return (linear + cubic) * alpha + pack.C2_hat * delta_hat;
}

Interval sup_error_bound(const Interval& alpha, const Interval& delta_hat, const IntervalExpansion& omega,
                         const Interval& lambda_bar, const SupNormPack& pack, const EmbeddingPack& emb) {
  const Interval l6 = root(clamp_nonnegative(sextic_sum(omega)), 6);
  return sup_error_bound(alpha, delta_hat, l6, lambda_bar, pack, emb);
}

Interval uniqueness_bound(const Interval& lambda_bar) {
  if (!lambda_bar.certainly_positive()) throw InvalidArgument("lambda_bar must be positive");
  return sqrt(lambda_bar / Interval(2.0));
}

Interval uniqueness_bound_general(const Interval& lambda_bar) {
  const DomainConstants& k = constants();
  const Interval p(3.0);
  return sqrt((k.lambda2 - k.lambda1) / p) * sqrt(lambda_bar / k.lambda1);
}

ThresholdResult uniqueness_threshold(const IntervalExpansion& omega, const Interval& sup_err,
                                     const Interval& lambda_bar) {
  ThresholdResult r;
  r.center = eval_center(omega);
  r.sup_bound = r.center + sup_err;
  r.threshold = uniqueness_bound(lambda_bar);
  r.passed = r.sup_bound.hi() < r.threshold.lo();
  return r;
}

}  // namespace semilinear
