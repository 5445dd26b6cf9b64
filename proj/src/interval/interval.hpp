#pragma once

// Closed floating-point intervals with outward rounding.
//
// Every operation returns an interval that encloses the exact real result for
// all operands drawn from the input intervals. A non-finite endpoint raises
// NumericError immediately, so no verification can silently continue with an
// invalid enclosure.

#include <algorithm>
#include <cmath>
#include <iosfwd>
#include <string>

#include "common/error.hpp"
#include "interval/rounding.hpp"

namespace semilinear {

template <class Rounding>
class BasicInterval {
 public:
  using rounding_type = Rounding;

  constexpr BasicInterval() noexcept = default;
  // Point interval. Implicit so that exact double constants mix naturally.
  BasicInterval(double x) : lo_(x), hi_(x) {  // NOLINT(google-explicit-constructor)
    if (!std::isfinite(x)) throw NumericError("non-finite interval endpoint");
  }
  BasicInterval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
      throw NumericError("non-finite interval endpoint");
    if (!(lo <= hi)) throw InvalidArgument("interval lower endpoint exceeds upper endpoint");
  }

  constexpr double lo() const noexcept { return lo_; }
  constexpr double hi() const noexcept { return hi_; }
  double mid() const noexcept {
    const double m = 0.5 * lo_ + 0.5 * hi_;
    return std::clamp(m, lo_, hi_);
  }
  // Upper bound on the half width.
  double rad() const noexcept {
    const double m = mid();
    return std::max(up_sub(m, lo_), up_sub(hi_, m));
  }
  // Upper bound on hi - lo.
  double width() const noexcept { return up_sub(hi_, lo_); }
  // Upper bound on max |x|.
  double mag() const noexcept { return std::max(std::fabs(lo_), std::fabs(hi_)); }
  // Lower bound on min |x|.
  double mig() const noexcept {
    if (lo_ > 0.0) return lo_;
    if (hi_ < 0.0) return -hi_;
    return 0.0;
  }

  bool is_point() const noexcept { return lo_ == hi_; }
  bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
  bool contains_zero() const noexcept { return lo_ <= 0.0 && 0.0 <= hi_; }
  bool subset_of(const BasicInterval& o) const noexcept { return o.lo_ <= lo_ && hi_ <= o.hi_; }
  bool overlaps(const BasicInterval& o) const noexcept { return lo_ <= o.hi_ && o.lo_ <= hi_; }

  // Certainly-comparisons: true only if the relation holds for every pair of
  // points of the two intervals.
  bool certainly_less(const BasicInterval& o) const noexcept { return hi_ < o.lo_; }
  bool certainly_less_equal(const BasicInterval& o) const noexcept { return hi_ <= o.lo_; }
  bool certainly_positive() const noexcept { return lo_ > 0.0; }
  bool certainly_negative() const noexcept { return hi_ < 0.0; }

  friend bool operator==(const BasicInterval& a, const BasicInterval& b) noexcept {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

  BasicInterval operator-() const noexcept { return raw(-hi_, -lo_); }
  BasicInterval operator+() const noexcept { return *this; }

  friend BasicInterval operator+(const BasicInterval& a, const BasicInterval& b) {
    double l, h, dummy;
    Rounding::add(a.lo_, b.lo_, l, dummy);
    Rounding::add(a.hi_, b.hi_, dummy, h);
    return checked(l, h);
  }
  friend BasicInterval operator-(const BasicInterval& a, const BasicInterval& b) {
    double l, h, dummy;
    Rounding::add(a.lo_, -b.hi_, l, dummy);
    Rounding::add(a.hi_, -b.lo_, dummy, h);
    return checked(l, h);
  }
  friend BasicInterval operator*(const BasicInterval& a, const BasicInterval& b) {
    if (a.lo_ >= 0.0 && b.lo_ >= 0.0) return mul_endpoints(a.lo_, b.lo_, a.hi_, b.hi_);
    if (a.hi_ <= 0.0 && b.hi_ <= 0.0) return mul_endpoints(a.hi_, b.hi_, a.lo_, b.lo_);
    if (a.lo_ >= 0.0 && b.hi_ <= 0.0) return mul_endpoints(a.hi_, b.lo_, a.lo_, b.hi_);
    if (a.hi_ <= 0.0 && b.lo_ >= 0.0) return mul_endpoints(a.lo_, b.hi_, a.hi_, b.lo_);
    // At least one operand straddles zero: take the hull of all four products.
    double l = 0.0, h = 0.0;
    bool first = true;
    for (double x : {a.lo_, a.hi_})
      for (double y : {b.lo_, b.hi_}) {
        double pl, ph;
        Rounding::mul(x, y, pl, ph);
        if (first) {
          l = pl;
          h = ph;
          first = false;
        } else {
          l = std::min(l, pl);
          h = std::max(h, ph);
        }
      }
    return checked(l, h);
  }
  friend BasicInterval operator/(const BasicInterval& a, const BasicInterval& b) {
    if (b.contains_zero()) throw NumericError("interval division by an interval containing zero");
    double l = 0.0, h = 0.0;
    bool first = true;
    for (double x : {a.lo_, a.hi_})
      for (double y : {b.lo_, b.hi_}) {
        double ql, qh;
        Rounding::div(x, y, ql, qh);
        if (first) {
          l = ql;
          h = qh;
          first = false;
        } else {
          l = std::min(l, ql);
          h = std::max(h, qh);
        }
      }
    return checked(l, h);
  }

  BasicInterval& operator+=(const BasicInterval& o) { return *this = *this + o; }
  BasicInterval& operator-=(const BasicInterval& o) { return *this = *this - o; }
  BasicInterval& operator*=(const BasicInterval& o) { return *this = *this * o; }
  BasicInterval& operator/=(const BasicInterval& o) { return *this = *this / o; }

  static BasicInterval hull(const BasicInterval& a, const BasicInterval& b) noexcept {
    return raw(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
  }
  // Throws InvalidArgument for disjoint operands.
  static BasicInterval intersect(const BasicInterval& a, const BasicInterval& b) {
    const double l = std::max(a.lo_, b.lo_);
    const double h = std::min(a.hi_, b.hi_);
    if (l > h) throw InvalidArgument("intersection of disjoint intervals");
    return raw(l, h);
  }
  static BasicInterval entire_nonnegative_upto(double hi) { return BasicInterval(0.0, hi); }

  // Assembles an interval from endpoints that are already known to be ordered
  // and finite.
  static BasicInterval raw(double lo, double hi) noexcept {
    BasicInterval r;
    r.lo_ = lo;
    r.hi_ = hi;
    return r;
  }

  static BasicInterval checked(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw NumericError("interval overflow");
    return raw(lo, hi);
  }

  // Directed scalar helpers exposed for code that works on endpoints.
  static double down_add(double a, double b) noexcept {
    double l, h;
    Rounding::add(a, b, l, h);
    return l;
  }
  static double up_add(double a, double b) noexcept {
    double l, h;
    Rounding::add(a, b, l, h);
    return h;
  }
  static double up_sub(double a, double b) noexcept { return up_add(a, -b); }
  static double down_mul(double a, double b) noexcept {
    double l, h;
    Rounding::mul(a, b, l, h);
    return l;
  }
  static double up_mul(double a, double b) noexcept {
    double l, h;
    Rounding::mul(a, b, l, h);
    return h;
  }
  static double down_div(double a, double b) noexcept {
    double l, h;
    Rounding::div(a, b, l, h);
    return l;
  }
  static double up_div(double a, double b) noexcept {
    double l, h;
    Rounding::div(a, b, l, h);
    return h;
  }

 private:
  static BasicInterval mul_endpoints(double al, double bl, double ah, double bh) {
    double l, h, dummy;
    Rounding::mul(al, bl, l, dummy);
    Rounding::mul(ah, bh, dummy, h);
    return checked(l, h);
  }

  double lo_ = 0.0;
  double hi_ = 0.0;
};

using Interval = BasicInterval<rounding::Active>;

template <class R>
BasicInterval<R> sqr(const BasicInterval<R>& a) {
  using I = BasicInterval<R>;
  const double m = a.mig();
  const double M = a.mag();
  return I::checked(I::down_mul(m, m), I::up_mul(M, M));
}

template <class R>
BasicInterval<R> sqrt(const BasicInterval<R>& a) {
  if (a.lo() < 0.0) throw NumericError("square root of an interval with negative part");
  double l, h, dummy;
  R::sqrt(a.lo(), l, dummy);
  R::sqrt(a.hi(), dummy, h);
  return BasicInterval<R>::checked(std::max(l, 0.0), h);
}

// Natural power. Even powers of a straddling interval start at zero.
template <class R>
BasicInterval<R> pow(const BasicInterval<R>& a, unsigned n) {
  using I = BasicInterval<R>;
  if (n == 0) return I(1.0);
  if (n == 1) return a;
  auto pow_up = [n](double x) {
    double r = x;
    for (unsigned k = 1; k < n; ++k) r = I::up_mul(r, x);
    return r;
  };
  auto pow_down = [n](double x) {
    double r = x;
    for (unsigned k = 1; k < n; ++k) r = I::down_mul(r, x);
    return r;
  };
  if (n % 2 == 0) {
    const double m = a.mig();
    const double M = a.mag();
    return I::checked(pow_down(m), pow_up(M));
  }
  // Odd power is monotone. For negative endpoints use symmetry.
  auto odd_down = [&](double x) { return x >= 0.0 ? pow_down(x) : -pow_up(-x); };
  auto odd_up = [&](double x) { return x >= 0.0 ? pow_up(x) : -pow_down(-x); };
  return I::checked(odd_down(a.lo()), odd_up(a.hi()));
}

// n-th root of a nonnegative interval, n >= 1. The endpoint candidates from
// std::pow are corrected until a directed power check confirms them.
template <class R>
BasicInterval<R> root(const BasicInterval<R>& a, unsigned n) {
  using I = BasicInterval<R>;
  if (n == 0) throw InvalidArgument("zeroth root");
  if (a.lo() < 0.0) throw NumericError("root of an interval with negative part");
  if (n == 1) return a;
  if (n == 2) return sqrt(a);
  auto pow_up = [n](double x) {
    double r = x;
    for (unsigned k = 1; k < n; ++k) r = I::up_mul(r, x);
    return r;
  };
  auto pow_down = [n](double x) {
    double r = x;
    for (unsigned k = 1; k < n; ++k) r = I::down_mul(r, x);
    return r;
  };
  const double inv = 1.0 / static_cast<double>(n);
  double l = a.lo() == 0.0 ? 0.0 : std::pow(a.lo(), inv);
  while (l > 0.0 && pow_up(l) > a.lo()) l = rounding::next_down(l);
  double h = a.hi() == 0.0 ? 0.0 : std::pow(a.hi(), inv);
  while (pow_down(h) < a.hi()) h = rounding::next_up(h);
  return I::checked(std::max(l, 0.0), h);
}

template <class R>
BasicInterval<R> abs(const BasicInterval<R>& a) noexcept {
  return BasicInterval<R>::raw(a.mig(), a.mag());
}

template <class R>
BasicInterval<R> max(const BasicInterval<R>& a, const BasicInterval<R>& b) noexcept {
  return BasicInterval<R>::raw(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

template <class R>
BasicInterval<R> min(const BasicInterval<R>& a, const BasicInterval<R>& b) noexcept {
  return BasicInterval<R>::raw(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

// Keeps only the nonnegative part. Used where the exact quantity is known to
// be nonnegative (a squared norm), but its enclosure dips below zero.
template <class R>
BasicInterval<R> clamp_nonnegative(const BasicInterval<R>& a) {
  if (a.hi() < 0.0) throw VerificationFailure("enclosure of a nonnegative quantity is negative");
  return BasicInterval<R>::raw(std::max(a.lo(), 0.0), a.hi());
}

// Enclosure of the rational number num/den.
template <class R = rounding::Active>
BasicInterval<R> rational(long long num, long long den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  const auto exact_double = [](long long v) {
    return v >= -(1LL << 53) && v <= (1LL << 53);
  };
  if (!exact_double(num) || !exact_double(den))
    throw InvalidArgument("rational operand exceeds 53-bit exact range");
  return BasicInterval<R>(static_cast<double>(num)) / BasicInterval<R>(static_cast<double>(den));
}

std::string to_string(const Interval& x);
std::ostream& operator<<(std::ostream& os, const Interval& x);

}  // namespace semilinear
