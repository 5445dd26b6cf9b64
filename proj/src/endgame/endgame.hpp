#pragma once

#include "branch/branch.hpp"

namespace semilinear {

// Constants of the embedding H^2 -> C on the unit square:
// ||u||_inf <= C0 ||u||_2 + C1 ||grad u||_2 + C2 ||Hessian u||_2.
struct SupNormPack {
  Interval C0_hat{1.0};
  Interval C1_hat;
  Interval C2_hat;

  static SupNormPack unit_square();
};

// Bound for ||u - w||_inf at lambda_bar, from the H^1_0 error alpha and the
// L2 defect delta_hat.
Interval sup_error_bound(const Interval& alpha, const Interval& delta_hat, const Interval& l6_norm,
                         const Interval& lambda_bar, const SupNormPack& pack, const EmbeddingPack& emb);
Interval sup_error_bound(const Interval& alpha, const Interval& delta_hat, const IntervalExpansion& omega,
                         const Interval& lambda_bar, const SupNormPack& pack, const EmbeddingPack& emb);

// sqrt(lambda_bar / 2): positive solutions with sup norm below it at
// lambda_bar are unique on [lambda_bar, lambda_1).
Interval uniqueness_bound(const Interval& lambda_bar);
// The general form ((lambda_2 - lambda_1)/p)^{1/(p-1)} (lambda_bar/lambda_1)^{1/(p-1)} for p = 3.
Interval uniqueness_bound_general(const Interval& lambda_bar);

struct ThresholdResult {
  Interval center;     // w(1/2, 1/2)
  Interval sup_bound;  // center + sup error
  Interval threshold;  // sqrt(lambda_bar / 2)
  bool passed = false;
};

ThresholdResult uniqueness_threshold(const IntervalExpansion& omega, const Interval& sup_err,
                                     const Interval& lambda_bar);

}  // namespace semilinear
