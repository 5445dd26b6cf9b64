#include "defect/defect.hpp"

#include "interval/constants.hpp"

namespace semilinear {

Interval l2_defect(const IntervalExpansion& w, const Interval& lambda) {
  if (!positivity_check(w))
    throw VerificationFailure("l2_defect: positivity of the approximation is not verified");
  const Interval& pi_sq = constants().pi_sq;
  auto weight = [&](int i, int j) { return Interval(static_cast<double>(i * i + j * j)) * pi_sq - lambda; };

  Interval quad(0.0);
  for (int p = 0; p < w.modes(); ++p)
    for (int q = 0; q < w.modes(); ++q)
      quad += sqr(weight(2 * p + 1, 2 * q + 1) * w.at(p, q));
  quad = Interval(0.25) * quad;

  const Interval cross = quartic_sum(w, weight);
  const Interval sextic = sextic_sum(w);
  const Interval sq = quad - Interval(2.0) * cross + sextic;
  return sqrt(clamp_nonnegative(sq));
}

Interval h_minus1_defect(const Interval& delta_hat, const Interval& sigma) {
  if (delta_hat.lo() < 0.0) throw InvalidArgument("negative defect bound");
  return delta_hat / sqrt(constants().lambda1 + sigma);
}

DefectBounds defect_bounds(const IntervalExpansion& w, const Interval& lambda, const Interval& sigma) {
  DefectBounds d;
  d.lambda = lambda;
  d.delta_hat = l2_defect(w, lambda);
  d.delta = h_minus1_defect(d.delta_hat, sigma);
  return d;
}

}  // namespace semilinear
