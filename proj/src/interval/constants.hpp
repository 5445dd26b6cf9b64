#pragma once

#include "interval/interval.hpp"

namespace semilinear {

struct DomainConstants {
  Interval pi;
  Interval pi_sq;
  Interval lambda1;  // first Dirichlet eigenvalue of the unit square, 2 pi^2
  Interval lambda2;  // second Dirichlet eigenvalue, 5 pi^2
};

// pi as the two doubles adjacent to it.
Interval pi_enclosure();

const DomainConstants& constants();

}  // namespace semilinear
