#include <doctest.h>

#include <cmath>
#include <random>

#include "branch/branch.hpp"
#include "interval/constants.hpp"
#include "solver/solver.hpp"

using namespace semilinear;

TEST_CASE("embedding constants") {
  const EmbeddingPack p = make_embedding_pack(Interval(1.0));
  CHECK(p.gamma.lo() > 0.17);
  CHECK(p.gamma.hi() < 0.2);
  const double c4 = std::pow(1.0 / (4.0 * (M_PI * M_PI + 1.0)), 0.25);
  CHECK(p.C4.contains(c4));
  CHECK(p.gamma.contains(3 * std::sqrt(2.0) / (4 * std::pow(M_PI * M_PI + 1.0, 0.75))) );
  CHECK(p.C2.contains(1.0 / std::sqrt(2 * M_PI * M_PI + 1.0)));
  CHECK(p.C6.contains(std::pow(2.25 * std::pow(M_PI, 4) / std::pow(2 * M_PI * M_PI + 1.0, 3), 1.0 / 6)));
  CHECK_THROWS_AS(make_embedding_pack(Interval(0.0)), InvalidArgument);
  CHECK_THROWS_AS(make_embedding_pack(Interval(10.0)), InvalidArgument);
}

TEST_CASE("psi at alpha_bar equals the closed form") {
  const EmbeddingPack p = make_embedding_pack(Interval(1.0));
  std::mt19937_64 g(4);
  std::uniform_real_distribution<double> uk(1.0, 20.0), ul(0.0, 3.0);
  for (int t = 0; t < 50; ++t) {
    const Interval K(uk(g)), l4(ul(g));
    const Interval ab = alpha_bar(K, l4, p);
    const Interval direct = psi(ab, K, l4, p);
    const Interval closed = psi_max(K, l4, p);
    CHECK(direct.overlaps(closed));
    CHECK(std::fabs(direct.mid() - closed.mid()) <= 1e-12 * closed.mid());
    // alpha_bar maximizes psi
    CHECK(psi(Interval(ab.mid() * 0.99), K, l4, p).hi() <= closed.hi());
    CHECK(psi(Interval(ab.mid() * 1.01), K, l4, p).hi() <= closed.hi());
  }
}

TEST_CASE("alpha_min") {
  const EmbeddingPack p = make_embedding_pack(Interval(1.0));
  const Interval K(2.0), l4(1.5);
  const AlphaResult z = alpha_min(Interval(0.0), K, l4, p);
  CHECK(z.alpha.lo() == 0.0);
  CHECK(z.alpha.hi() == std::ldexp(z.alpha_bar.mid(), -10));

  const Interval delta(1e-3);
  const AlphaResult a = alpha_min(delta, K, l4, p);
  CHECK(delta.hi() <= psi(a.alpha, K, l4, p).lo());
  CHECK(a.alpha.hi() <= a.alpha_bar.hi());
  // the smallest such alpha is close to K delta for small defects
  CHECK(a.alpha.hi() == doctest::Approx(2e-3).epsilon(0.02));
  // contraction holds automatically below alpha_bar
  CHECK(contraction_check(a.alpha, K, l4, p));

  CHECK_THROWS_WITH_AS(alpha_min(Interval(1.0), K, l4, p), doctest::Contains("defect too large"),
                       VerificationFailure);
}

TEST_CASE("contraction holds for every alpha below alpha_bar") {
  const EmbeddingPack p = make_embedding_pack(Interval(1.0));
  std::mt19937_64 g(9);
  std::uniform_real_distribution<double> uk(1.0, 20.0), ul(0.0, 3.0), uf(0.0, 0.999);
  for (int t = 0; t < 200; ++t) {
    const Interval K(uk(g)), l4(ul(g));
    const double a = uf(g) * alpha_bar(K, l4, p).lo();
    CHECK(contraction_check(Interval(a), K, l4, p));
  }
}

TEST_CASE("alpha from grid data near lambda = 0") {
  ContinuationConfig cc;
  for (int k = 185; k >= 1; k -= 2) cc.lambda_grid.push_back(k / 10.0);
  cc.lambda_grid.push_back(0.0);
  const auto sols = continuation(cc);
  const EmbeddingPack p = make_embedding_pack(Interval(1.0));
  GridPoint a, b;
  a.lambda = Interval(0.0);
  b.lambda = rational(1, 10);
  a.omega = to_interval(sols.at(0.0));
  b.omega = to_interval(sols.at(0.1));
  fill_norms(a, p.sigma);
  fill_norms(b, p.sigma);
  a.delta = Interval(4.7e-5);
  b.delta = Interval(4.3e-5);
  const InterpolatedDefect d = interp_defect(a, b, p);
  CHECK(d.delta.hi() >= 4.7e-5);
  CHECK(d.tau.lo() >= 0.0);
  CHECK(d.rho.lo() >= 0.0);
  // interpolated defect on [0, 0.1] is of order 6e-4
  CHECK(d.delta.hi() == doctest::Approx(5.943e-4).epsilon(0.1));

  a.K = Interval(1.67);
  b.K = Interval(1.668);
  const InterpolatedK k = interp_K(a, nullptr, &b, p);
  CHECK(k.mu.hi() == doctest::Approx(0.05));
  CHECK(k.K.lo() >= a.K.hi());
  const AlphaResult ar = alpha_min(d.delta, k.K, max(a.l4_norm, Interval(0.5) * (a.l4_norm + b.l4_norm)), p);
  CHECK(ar.alpha.hi() == doctest::Approx(0.0010378).epsilon(0.1));

  GridPoint far = b;
  far.lambda = Interval(15.0);
  far.omega = Interval(2.0) * b.omega;
  CHECK_THROWS_WITH_AS(interp_K(a, nullptr, &far, p), doctest::Contains("grid too coarse"), VerificationFailure);
}

TEST_CASE("verify_branch input validation") {
  const EmbeddingPack p = make_embedding_pack(Interval(1.0));
  CHECK_THROWS_AS(verify_branch({}, p), InvalidArgument);
  GridPoint a, b;
  a.lambda = Interval(1.0);
  b.lambda = Interval(0.5);
  a.omega = b.omega = IntervalExpansion(1);
  CHECK_THROWS_AS(verify_branch({a, b}, p), InvalidArgument);
}
