#include <doctest.h>

#include <cmath>
#include <random>

#include "defect/defect.hpp"
#include "interval/constants.hpp"
#include "solver/solver.hpp"

using namespace semilinear;

namespace {

// ||-Lap w - lambda w - w^3||^2 for w = a sin sin, from the one-dimensional
// integrals of sin^2, sin^4 and sin^6 (1/2, 3/8, 5/16).
Interval single_mode_closed_form(double a, double lambda) {
  const Interval A(a);
  const Interval g = constants().lambda1 - Interval(lambda);
  return sqrt(clamp_nonnegative(sqr(g) * sqr(A) / Interval(4.0) -
                                Interval(2.0) * g * Interval(9.0) * pow(A, 4) / Interval(64.0) +
                                Interval(25.0) * pow(A, 6) / Interval(256.0)));
}

FloatExpansion branch_point(double lambda) {
  ContinuationConfig cfg;
  for (int k = 185; k / 10.0 > lambda; k -= 2) cfg.lambda_grid.push_back(k / 10.0);
  cfg.lambda_grid.push_back(lambda);
  return continuation(cfg).at(lambda);
}

}  // namespace

TEST_CASE("single-mode defect matches the closed form") {
  std::mt19937_64 g(31);
  std::uniform_real_distribution<double> ua(0.1, 6.0), ul(0.0, 19.0);
  for (int t = 0; t < 20; ++t) {
    const double a = ua(g), lam = ul(g);
    IntervalExpansion w(1);
    w.set(1, 1, Interval(a));
    const Interval got = l2_defect(w, Interval(lam));
    const Interval ref = single_mode_closed_form(a, lam);
    CHECK(got.overlaps(ref));
    CHECK(got.width() <= 1e-9 * std::max(1.0, ref.mid()));
  }
}

TEST_CASE("defect refuses expansions without verified positivity") {
  IntervalExpansion w(3);
  w.set(1, 1, Interval(1.0));
  w.set(3, 3, Interval(0.5));
  CHECK_THROWS_AS(l2_defect(w, Interval(1.0)), VerificationFailure);
}

TEST_CASE("defect agrees with the exact residual expansion") {
  // The residual is a finite sine series: (d - lambda) a - coefficients of
  // w^3. Parseval gives its squared norm independently of the quartic and
  // sextic sums.
  const FloatExpansion wf = branch_point(6.1);
  const IntervalExpansion w = to_interval(wf);
  const Interval lam(6.1);
  const IntervalExpansion cube = cube_to_sine(w);
  Interval s(0.0);
  for (int p = 0; p < cube.modes(); ++p)
    for (int q = 0; q < cube.modes(); ++q) {
      const int i = 2 * p + 1, j = 2 * q + 1;
      const Interval lin = (Interval(static_cast<double>(i * i + j * j)) * constants().pi_sq - lam) * w.coeff(i, j);
      s += sqr(lin - cube.at(p, q));
    }
  const Interval parseval = sqrt(Interval(0.25) * s);
  const Interval got = l2_defect(w, lam);
  CHECK(got.overlaps(parseval));
  // Expanding the square cancels terms of size 1e3 down to 1e-10, which
  // leaves a rounding floor of a few 1e-5 on the norm.
  CHECK(got.hi() <= parseval.hi() + 5e-5);
}

TEST_CASE("defect dominates quadrature of the residual") {
  const FloatExpansion w = branch_point(10.1);
  // The residual has indices up to 45; M = 72 nodes integrate its square exactly.
  const int M = 72;
  double q = 0.0;
  const FloatExpansion cube = cube_to_sine(w);
  FloatExpansion lin(w.max_index());
  for (int p = 0; p < w.modes(); ++p)
    for (int r = 0; r < w.modes(); ++r) {
      const int i = 2 * p + 1, j = 2 * r + 1;
      lin.at(p, r) = ((i * i + j * j) * M_PI * M_PI - 10.1) * w.at(p, r);
    }
  for (int a = 0; a < M; ++a)
    for (int b = 0; b < M; ++b) {
      const double x = (a + 0.5) / M, y = (b + 0.5) / M;
      const double v = eval_float(lin, x, y) - std::pow(eval_float(w, x, y), 3);
      q += v * v;
    }
  const double quad = std::sqrt(q / (M * M));
  const Interval got = l2_defect(to_interval(w), Interval(10.1));
  CHECK(got.hi() >= quad * (1 - 1e-6));
  CHECK(got.hi() <= quad + 5e-5);
}

TEST_CASE("H^-1 defect scaling") {
  const Interval d = h_minus1_defect(Interval(1.0), Interval(1.0));
  CHECK(d.contains(1.0 / std::sqrt(2 * M_PI * M_PI + 1.0)));
  CHECK_THROWS_AS(h_minus1_defect(Interval(-1.0, 1.0), Interval(1.0)), InvalidArgument);
  IntervalExpansion w(1);
  w.set(1, 1, Interval(2.0));
  const DefectBounds b = defect_bounds(w, Interval(3.0), Interval(1.0));
  CHECK(b.delta.overlaps(b.delta_hat / sqrt(constants().lambda1 + Interval(1.0))));
}
