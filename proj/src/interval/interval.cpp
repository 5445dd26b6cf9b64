#include "interval/interval.hpp"

#include <cstdio>
#include <ostream>

#include "interval/constants.hpp"

namespace semilinear {

std::string to_string(const Interval& x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", x.lo(), x.hi());
  return buf;
}

std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << to_string(x); }

Interval pi_enclosure() {
  // 0x1.921fb54442d18p+1 is the largest double below pi.
  constexpr double below = 0x1.921fb54442d18p+1;
  return Interval(below, rounding::next_up(below));
}

const DomainConstants& constants() {
  static const DomainConstants c = [] {
    DomainConstants d;
    d.pi = pi_enclosure();
    d.pi_sq = sqr(d.pi);
    d.lambda1 = Interval(2.0) * d.pi_sq;
    d.lambda2 = Interval(5.0) * d.pi_sq;
    return d;
  }();
  return c;
}

}  // namespace semilinear
