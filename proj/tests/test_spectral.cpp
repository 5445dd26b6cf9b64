#include <doctest.h>

#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "spectral/spectral.hpp"

using namespace semilinear;

namespace {

FloatExpansion random_expansion(std::mt19937_64& g, int max_index) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FloatExpansion w(max_index);
  for (auto& c : w.data()) c = u(g);
  w.at(0, 0) = 2.0 + u(g);
  return w;
}

}  // namespace

TEST_CASE("single-mode integrals are exact") {
  IntervalExpansion w(1);
  w.set(1, 1, Interval(1.0));
  CHECK(sextic_sum(w) == Interval(25.0 / 256.0));
  CHECK(quartic_sum(w) == Interval(9.0 / 64.0));
  const auto q = quadratic_norms(w, Interval(0.0));
  CHECK(q.l2_sq == Interval(0.25));
}

TEST_CASE("sextic sum agrees with the 12-index enumeration") {
  std::mt19937_64 g(2024);
  int disagreements = 0;
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int N = 1 + 2 * static_cast<int>(g() % 3);  // 1, 3, 5
    const FloatExpansion w = random_expansion(g, N);
    const auto [ref, mag] = oracle::brute_force({&w, &w, &w, &w, &w, &w});
    const Interval got = sextic_sum(to_interval(w));
    if (!oracle::agrees(got, ref, mag)) ++disagreements;
    worst = std::max(worst, std::fabs(got.mid() - static_cast<double>(ref)) / std::max(1.0, std::fabs(static_cast<double>(ref))));
  }
  CHECK(disagreements == 0);
  CHECK(worst <= 1e-11);
}

TEST_CASE("weighted quartic sum agrees with the 8-index enumeration") {
  std::mt19937_64 g(77);
  for (int t = 0; t < 20; ++t) {
    const int N = 1 + 2 * static_cast<int>(g() % 3);
    const FloatExpansion w = random_expansion(g, N);
    FloatExpansion wa(N);
    for (int p = 0; p < w.modes(); ++p)
      for (int q = 0; q < w.modes(); ++q) wa.at(p, q) = (p + 2.0 * q + 1.0) * w.at(p, q);
    const auto [ref, mag] = oracle::brute_force({&wa, &w, &w, &w});
    const Interval got =
        quartic_sum(to_interval(w), [](int i, int j) { return Interval((i - 1) / 2 + 2.0 * ((j - 1) / 2) + 1.0); });
    CHECK(oracle::agrees(got, ref, mag));
  }
}

TEST_CASE("cube_to_sine matches the pointwise cube") {
  std::mt19937_64 g(5);
  const FloatExpansion w = random_expansion(g, 9);
  const FloatExpansion c = cube_to_sine(w);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    const double x = u(g), y = u(g);
    const double v = eval_float(w, x, y);
    CHECK(eval_float(c, x, y) == doctest::Approx(v * v * v).epsilon(1e-11).scale(10.0));
  }
  const CosineExpansion<double> sq = square_to_cosine(w);
  const double x = 0.3, y = 0.7;
  double s = 0.0;
  for (int k = 0; k <= sq.max_index(); k += 2)
    for (int l = 0; l <= sq.max_index(); l += 2) s += sq.coeff(k, l) * std::cos(k * M_PI * x) * std::cos(l * M_PI * y);
  CHECK(s == doctest::Approx(std::pow(eval_float(w, x, y), 2)).epsilon(1e-12));
}

TEST_CASE("integrals agree with midpoint quadrature") {
  // The midpoint rule with M nodes integrates cos(k pi x) exactly for even
  // 0 < k < 2M, so it is exact on w^6 once M > 3 * max_index.
  std::mt19937_64 g(11);
  const FloatExpansion w = random_expansion(g, 5);
  const int M = 64;
  double q4 = 0.0, q6 = 0.0, q2 = 0.0;
  for (int a = 0; a < M; ++a)
    for (int b = 0; b < M; ++b) {
      const double v = eval_float(w, (a + 0.5) / M, (b + 0.5) / M);
      q2 += v * v;
      q4 += std::pow(v, 4);
      q6 += std::pow(v, 6);
    }
  const double h = 1.0 / (M * M);
  const IntervalExpansion wi = to_interval(w);
  CHECK(sextic_sum(wi).mid() == doctest::Approx(q6 * h).epsilon(1e-11));
  CHECK(quartic_sum(wi).mid() == doctest::Approx(q4 * h).epsilon(1e-11));
  CHECK(quadratic_norms(wi, Interval(1.0)).l2_sq.mid() == doctest::Approx(q2 * h).epsilon(1e-12));
}

TEST_CASE("transposition leaves integrals unchanged and scaling is homogeneous") {
  std::mt19937_64 g(3);
  const IntervalExpansion w = to_interval(random_expansion(g, 7));
  CHECK(sextic_sum(w).overlaps(sextic_sum(w.transposed())));
  CHECK(quartic_sum(w).overlaps(quartic_sum(w.transposed())));
  const Interval c(1.5);
  const Interval scaled = sextic_sum(c * w);
  CHECK(scaled.overlaps(pow(c, 6) * sextic_sum(w)));
}

TEST_CASE("center evaluation and positivity check") {
  IntervalExpansion w(3);
  w.set(1, 1, Interval(1.0));
  w.set(1, 3, Interval(0.2));
  CHECK(eval_center(w).contains(0.8));
  CHECK(eval_center(IntervalExpansion(5)) == Interval(0.0));

  IntervalExpansion p(3);
  p.set(1, 1, Interval(1.0));
  CHECK(positivity_check(p));
  p.set(3, 3, Interval(0.5));
  CHECK_FALSE(positivity_check(p));
  p.set(3, 3, Interval(0.05));
  CHECK(positivity_check(p));
}

TEST_CASE("positivity check implies positivity on a fine grid") {
  std::mt19937_64 g(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int accepted = 0;
  for (int t = 0; t < 200; ++t) {
    FloatExpansion w(7);
    for (int p = 0; p < w.modes(); ++p)
      for (int q = 0; q < w.modes(); ++q) w.at(p, q) = 0.6 * u(g) / std::pow((2 * p + 1) * (2 * q + 1), 1.5);
    w.at(0, 0) = 1.0;
    if (!positivity_check(to_interval(w))) continue;
    ++accepted;
    double mn = INFINITY;
    for (int a = 1; a < 100; ++a)
      for (int b = 1; b < 100; ++b) mn = std::min(mn, eval_float(w, a / 100.0, b / 100.0));
    CHECK(mn > 0.0);
  }
  CHECK(accepted > 10);
  CHECK(accepted < 200);
}

TEST_CASE("sextic sum cost grows no faster than N^6") {
  std::mt19937_64 g(1);
  auto time_for = [&](int N) {
    const IntervalExpansion w = to_interval(random_expansion(g, N));
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < 3; ++r) (void)sextic_sum(w);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };
  const double t8 = time_for(8);
  const double t16 = time_for(16);
  CHECK(t16 <= 100.0 * std::max(t8, 1e-3));
}

TEST_CASE("CSV round trip and validation") {
  std::mt19937_64 g(8);
  const FloatExpansion w = random_expansion(g, 5);
  const FloatExpansion r = parse_csv(to_csv(w));
  CHECK(r.data() == w.data());
  CHECK_THROWS_AS(parse_csv("i,j,coeff\n2,1,0.5\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_csv("i,j,coeff\n-1,1,0.5\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_csv("i,j,coeff\n1,1\n"), IoError);
  CHECK_THROWS_AS(read_csv("/nonexistent/omega.csv"), IoError);
}

TEST_CASE("sine expansions reject even indices") {
  FloatExpansion w(5);
  CHECK_THROWS_AS(w.set(2, 1, 1.0), InvalidArgument);
  CHECK(w.coeff(2, 1) == 0.0);
  CHECK_THROWS_AS(product_to_sine<double>({w}, w), InvalidArgument);
}
