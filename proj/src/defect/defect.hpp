#pragma once

#include "spectral/spectral.hpp"

namespace semilinear {

struct DefectBounds {
  Interval lambda;
  Interval delta_hat;  // L2 norm of -Lap w - lambda w - w^3
  Interval delta;      // H^{-1} norm bound
};

// Enclosure of the L2 norm of -Lap w - lambda w - w^3. Expands the square
// into a quadratic part, twice the weighted quartic cross term, and the
// sextic integral. Refuses expansions whose positivity is not verified,
// because dropping the modulus in |w|^3 needs w > 0.
Interval l2_defect(const IntervalExpansion& w, const Interval& lambda);

// delta_hat / sqrt(lambda_1 + sigma).
Interval h_minus1_defect(const Interval& delta_hat, const Interval& sigma);

DefectBounds defect_bounds(const IntervalExpansion& w, const Interval& lambda, const Interval& sigma);

}  // namespace semilinear
