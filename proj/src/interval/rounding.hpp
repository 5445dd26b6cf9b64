#pragma once

// Directed rounding primitives built on round-to-nearest hardware arithmetic.
//
// Two policies are provided. ErrorFreeRounding recovers the exact rounding
// error of each operation (TwoSum, FMA residuals) and steps one ulp outward
// only when the rounded result is on the wrong side; its results equal those
// of true directed rounding. UlpInflation always steps one ulp outward, which
// is valid because a correctly rounded result is within half an ulp.
//
// The active policy for the library is selected at configure time with
// SEMILINEAR_ROUNDING_INFLATE.

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

namespace semilinear::rounding {

inline double next_up(double x) noexcept {
  if (std::isnan(x) || x == std::numeric_limits<double>::infinity()) return x;
  if (x == 0.0) return std::numeric_limits<double>::denorm_min();
  auto bits = std::bit_cast<std::uint64_t>(x);
  bits = x > 0.0 ? bits + 1 : bits - 1;
  return std::bit_cast<double>(bits);
}

inline double next_down(double x) noexcept { return -next_up(-x); }

// Below this magnitude the FMA residual of a product or quotient may itself be
// rounded, so both policies fall back to unconditional inflation.
inline constexpr double kResidualSafeMin = 0x1p-960;

// std::fma is correctly rounded whether or not the target has an FMA unit.
inline double fused(double a, double b, double c) noexcept { return std::fma(a, b, c); }

struct ErrorFreeRounding {
  static constexpr const char* name = "error-free-directed";

  static void add(double a, double b, double& lo, double& hi) noexcept {
    const double s = a + b;
    if (!std::isfinite(s)) {
      lo = hi = s;
      return;
    }
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    lo = err < 0.0 ? next_down(s) : s;
    hi = err > 0.0 ? next_up(s) : s;
  }

  static void mul(double a, double b, double& lo, double& hi) noexcept {
    const double p = a * b;
    if (!std::isfinite(p)) {
      lo = hi = p;
      return;
    }
    if (p == 0.0 && (a == 0.0 || b == 0.0)) {
      lo = hi = 0.0;
      return;
    }
    if (std::fabs(p) < kResidualSafeMin) {
      lo = next_down(p);
      hi = next_up(p);
      return;
    }
    const double err = fused(a, b, -p);
    lo = err < 0.0 ? next_down(p) : p;
    hi = err > 0.0 ? next_up(p) : p;
  }

  static void div(double a, double b, double& lo, double& hi) noexcept {
    const double q = a / b;
    if (!std::isfinite(q)) {
      lo = hi = q;
      return;
    }
    if (a == 0.0) {
      lo = hi = 0.0;
      return;
    }
    if (std::fabs(q) < kResidualSafeMin || std::fabs(a) < kResidualSafeMin) {
      lo = next_down(q);
      hi = next_up(q);
      return;
    }
    // a - q*b is exact; its sign relative to b tells where a/b lies.
    const double rem = fused(-q, b, a);
    const double dir = b > 0.0 ? rem : -rem;
    lo = dir < 0.0 ? next_down(q) : q;
    hi = dir > 0.0 ? next_up(q) : q;
  }

  static void sqrt(double a, double& lo, double& hi) noexcept {
    const double s = std::sqrt(a);
    if (!std::isfinite(s) || s == 0.0) {
      lo = hi = s;
      return;
    }
    if (a < kResidualSafeMin) {
      lo = next_down(s);
      hi = next_up(s);
      return;
    }
    const double rem = fused(-s, s, a);
    lo = rem < 0.0 ? next_down(s) : s;
    hi = rem > 0.0 ? next_up(s) : s;
  }
};

struct UlpInflation {
  static constexpr const char* name = "ulp-inflation";

  static void widen(double r, double& lo, double& hi) noexcept {
    if (!std::isfinite(r)) {
      lo = hi = r;
      return;
    }
    lo = next_down(r);
    hi = next_up(r);
  }
  static void add(double a, double b, double& lo, double& hi) noexcept { widen(a + b, lo, hi); }
  static void mul(double a, double b, double& lo, double& hi) noexcept {
    if (a == 0.0 || b == 0.0) {
      lo = hi = 0.0;
      return;
    }
    widen(a * b, lo, hi);
  }
  static void div(double a, double b, double& lo, double& hi) noexcept {
    if (a == 0.0 && b != 0.0) {
      lo = hi = 0.0;
      return;
    }
    widen(a / b, lo, hi);
  }
  static void sqrt(double a, double& lo, double& hi) noexcept {
    const double s = std::sqrt(a);
    if (s == 0.0) {
      lo = hi = 0.0;
      return;
    }
    widen(s, lo, hi);
    if (lo < 0.0) lo = 0.0;
  }
};

#ifdef SEMILINEAR_ROUNDING_INFLATE
using Active = UlpInflation;
#else
using Active = ErrorFreeRounding;
#endif

}  // namespace semilinear::rounding
