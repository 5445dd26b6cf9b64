#pragma once

// Reference computations for tests: exact rationals (GMP), correctly rounded
// bounds (MPFR) and quad-precision enumerations. Nothing here uses the
// library's interval arithmetic or convolution tables.

#include <gmpxx.h>
#include <mpfr.h>
#include <quadmath.h>

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "common/error.hpp"
#include "spectral/expansion.hpp"

namespace oracle {

inline mpq_class exact(double x) {
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

// Downward and upward rounding of an MPFR computation at 256 bits, as exact
// rationals.
template <class F>
void mpfr_bracket(F f, mpq_class& lo, mpq_class& hi) {
  mpfr_t d, u;
  mpfr_init2(d, 256);
  mpfr_init2(u, 256);
  f(d, MPFR_RNDD);
  f(u, MPFR_RNDU);
  mpfr_get_q(lo.get_mpq_t(), d);
  mpfr_get_q(hi.get_mpq_t(), u);
  mpfr_clear(d);
  mpfr_clear(u);
}

template <class I>
bool encloses(const I& r, const mpq_class& lo, const mpq_class& hi) {
  return exact(r.lo()) <= lo && hi <= exact(r.hi());
}

// Random doubles spanning many binades, with occasional tiny and huge
// magnitudes.
class DoubleSource {
 public:
  explicit DoubleSource(unsigned seed) : gen_(seed) {}
  double operator()() {
    std::uniform_real_distribution<double> mant(1.0, 2.0);
    std::uniform_int_distribution<int> coin(0, 19);
    const int c = coin(gen_);
    int e;
    if (c == 0) e = std::uniform_int_distribution<int>(-1000, -940)(gen_);
    else if (c == 1) e = std::uniform_int_distribution<int>(300, 480)(gen_);
    else e = std::uniform_int_distribution<int>(-40, 40)(gen_);
    const double v = std::ldexp(mant(gen_), e);
    return coin(gen_) < 10 ? -v : v;
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

struct SweepResult {
  int checked = 0;
  int violations = 0;
};

// Random +, -, *, /, sqrt on random intervals; each result must contain the
// exact range computed with rationals (sqrt: 256-bit directed MPFR bounds).
template <class I>
SweepResult containment_sweep(unsigned seed, int count) {
  DoubleSource src(seed);
  SweepResult res;
  std::uniform_int_distribution<int> op(0, 4), kind(0, 3);
  auto random_interval = [&] {
    double a = src();
    double b = src();
    switch (kind(src.engine())) {
      case 0: b = a; break;
      case 1: b = a * (1.0 + std::ldexp(1.0, -40)); break;
      default: break;
    }
    if (b < a) std::swap(a, b);
    return I(a, b);
  };
  for (int n = 0; n < count; ++n) {
    const I a = random_interval();
    const I b = random_interval();
    std::vector<mpq_class> vals;
    I r;
    try {
      switch (op(src.engine())) {
        case 0:
          r = a + b;
          vals = {exact(a.lo()) + exact(b.lo()), exact(a.hi()) + exact(b.hi())};
          break;
        case 1:
          r = a - b;
          vals = {exact(a.lo()) - exact(b.hi()), exact(a.hi()) - exact(b.lo())};
          break;
        case 2:
          r = a * b;
          for (double x : {a.lo(), a.hi()})
            for (double y : {b.lo(), b.hi()}) vals.push_back(exact(x) * exact(y));
          break;
        case 3:
          if (b.contains_zero()) continue;
          r = a / b;
          for (double x : {a.lo(), a.hi()})
            for (double y : {b.lo(), b.hi()}) vals.push_back(exact(x) / exact(y));
          break;
        default: {
          const I c = abs(a);
          r = sqrt(c);
          mpq_class l1, h1, l2, h2;
          mpfr_bracket([&](mpfr_t v, mpfr_rnd_t m) { mpfr_set_d(v, c.lo(), m); mpfr_sqrt(v, v, m); }, l1, h1);
          mpfr_bracket([&](mpfr_t v, mpfr_rnd_t m) { mpfr_set_d(v, c.hi(), m); mpfr_sqrt(v, v, m); }, l2, h2);
          vals = {l1, h2};
          break;
        }
      }
    } catch (const semilinear::NumericError&) {
      continue;  // overflow is reported, never enclosed
    }
    mpq_class lo = vals[0], hi = vals[0];
    for (const auto& v : vals) {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
    ++res.checked;
    if (!encloses(r, lo, hi)) ++res.violations;
  }
  return res;
}

// Integral over (0,1) of prod sin(i_k pi x): with sin = (e^{+} - e^{-})/2i only
// sign choices with sum s_k i_k = 0 survive, so the value is
// (2i)^{-n} * (signed count of such choices), an exact rational.
inline long long signed_zero_sum_count(const std::vector<int>& idx) {
  const int n = static_cast<int>(idx.size());
  long long count = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    int sum = 0, neg = 0;
    for (int k = 0; k < n; ++k) {
      if (mask & (1 << k)) {
        sum -= idx[k];
        ++neg;
      } else {
        sum += idx[k];
      }
    }
    if (sum == 0) count += (neg % 2 == 0) ? 1 : -1;
  }
  return count;
}

// (2i)^{-n} as a real factor for even n.
inline double sign_factor(int n) { return (n / 2) % 2 == 0 ? std::ldexp(1.0, -n) : -std::ldexp(1.0, -n); }

// Brute force over all 2n indices of integral prod_k w_k(x, y), each w_k a
// sine expansion, in quad precision. Returns the value and an accumulated
// magnitude for the error allowance.
inline std::pair<__float128, __float128> brute_force(const std::vector<const semilinear::FloatExpansion*>& ws) {
  const int n = static_cast<int>(ws.size());
  const int m = ws[0]->modes();
  std::vector<std::vector<int>> tuples;
  std::vector<double> weights;
  std::vector<int> cur(n, 0);
  // All index tuples with a nonzero one-dimensional integral.
  for (;;) {
    std::vector<int> idx(n);
    for (int k = 0; k < n; ++k) idx[k] = 2 * cur[k] + 1;
    const long long c = signed_zero_sum_count(idx);
    if (c != 0) {
      tuples.push_back(cur);
      weights.push_back(sign_factor(n) * static_cast<double>(c));
    }
    int k = 0;
    while (k < n && ++cur[k] == m) cur[k++] = 0;
    if (k == n) break;
  }
  __float128 sum = 0, mag = 0;
  for (std::size_t a = 0; a < tuples.size(); ++a)
    for (std::size_t b = 0; b < tuples.size(); ++b) {
      __float128 t = static_cast<__float128>(weights[a]) * weights[b];
      for (int k = 0; k < n; ++k) t *= ws[k]->at(tuples[a][k], tuples[b][k]);
      sum += t;
      mag += t < 0 ? -t : t;
    }
  return {sum, mag};
}

// An enclosure agrees with a quad-precision reference when they meet after
// widening by the accumulated rounding allowance.
template <class I>
bool agrees(const I& got, __float128 ref, __float128 mag) {
  const double allowance = static_cast<double>(mag * static_cast<__float128>(1e-25));
  const double r = static_cast<double>(ref);
  return got.lo() - allowance <= r + allowance && r - allowance <= got.hi() + allowance;
}

}  // namespace oracle
