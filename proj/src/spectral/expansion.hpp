#pragma once

// Double sine and cosine series on the unit square.
//
//   SineExpansion:    f = sum a(i,j) sin(i pi x) sin(j pi y),  i, j odd
//   CosineExpansion:  f = sum c(k,l) cos(k pi x) cos(l pi y),  k, l even >= 0
//
// Products of odd-odd sine series stay in one of these two classes: an odd
// number of factors gives an odd-odd sine series, an even number gives an
// even-even cosine series. Coefficient type T is double or Interval.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "common/error.hpp"
#include "interval/interval.hpp"

namespace semilinear {

template <class T>
class SineExpansion {
 public:
  SineExpansion() = default;
  // Zero expansion with odd indices up to max_index.
  explicit SineExpansion(int max_index) : n_(modes_for(max_index)), c_(n_ * n_, T(0.0)) {}

  static int modes_for(int max_index) {
    if (max_index < 1) throw InvalidArgument("sine expansion needs max index >= 1");
    return (max_index + 1) / 2;
  }

  // Number of odd modes per axis; indices 1, 3, ..., 2*modes()-1.
  int modes() const noexcept { return n_; }
  int max_index() const noexcept { return 2 * n_ - 1; }
  std::size_t size() const noexcept { return c_.size(); }

  // Access by mode position p, q (index 2p+1, 2q+1).
  T& at(int p, int q) { return c_[static_cast<std::size_t>(p) * n_ + q]; }
  const T& at(int p, int q) const { return c_[static_cast<std::size_t>(p) * n_ + q]; }

  // Access by odd index; even or out-of-range indices read as zero.
  T coeff(int i, int j) const {
    if (i < 1 || j < 1 || i % 2 == 0 || j % 2 == 0 || i > max_index() || j > max_index())
      return T(0.0);
    return at((i - 1) / 2, (j - 1) / 2);
  }
  void set(int i, int j, const T& v) {
    if (i < 1 || j < 1 || i % 2 == 0 || j % 2 == 0)
      throw InvalidArgument("sine expansion accepts odd indices only");
    if (i > max_index() || j > max_index()) throw InvalidArgument("index exceeds expansion size");
    at((i - 1) / 2, (j - 1) / 2) = v;
  }

  std::vector<T>& data() noexcept { return c_; }
  const std::vector<T>& data() const noexcept { return c_; }

  SineExpansion transposed() const {
    SineExpansion r(max_index());
    for (int p = 0; p < n_; ++p)
      for (int q = 0; q < n_; ++q) r.at(q, p) = at(p, q);
    return r;
  }

  // Copy with modes beyond max_index dropped or zero-padded.
  SineExpansion resized(int max_index) const {
    SineExpansion r(max_index);
    const int m = std::min(n_, r.n_);
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q) r.at(p, q) = at(p, q);
    return r;
  }

 private:
  int n_ = 0;
  std::vector<T> c_;
};

template <class T>
class CosineExpansion {
 public:
  CosineExpansion() = default;
  // Even indices 0, 2, ..., max_index.
  explicit CosineExpansion(int max_index)
      : n_(max_index / 2 + 1), c_(static_cast<std::size_t>(n_) * n_, T(0.0)) {}

  int modes() const noexcept { return n_; }
  int max_index() const noexcept { return 2 * (n_ - 1); }
  T& at(int p, int q) { return c_[static_cast<std::size_t>(p) * n_ + q]; }
  const T& at(int p, int q) const { return c_[static_cast<std::size_t>(p) * n_ + q]; }
  T coeff(int k, int l) const {
    if (k < 0 || l < 0 || k % 2 != 0 || l % 2 != 0 || k > max_index() || l > max_index())
      return T(0.0);
    return at(k / 2, l / 2);
  }

 private:
  int n_ = 0;
  std::vector<T> c_;
};

template <class T>
SineExpansion<T> operator-(const SineExpansion<T>& a, const SineExpansion<T>& b) {
  const int m = std::max(a.max_index(), b.max_index());
  SineExpansion<T> r(m);
  for (int p = 0; p < r.modes(); ++p)
    for (int q = 0; q < r.modes(); ++q) r.at(p, q) = a.coeff(2 * p + 1, 2 * q + 1) - b.coeff(2 * p + 1, 2 * q + 1);
  return r;
}

template <class T>
SineExpansion<T> operator*(const T& s, const SineExpansion<T>& a) {
  SineExpansion<T> r(a.max_index());
  for (std::size_t k = 0; k < a.size(); ++k) r.data()[k] = s * a.data()[k];
  return r;
}

using FloatExpansion = SineExpansion<double>;
using IntervalExpansion = SineExpansion<Interval>;

// Point-interval copy of a float expansion.
IntervalExpansion to_interval(const FloatExpansion& a);
// Midpoints of an interval expansion.
FloatExpansion to_float(const IntervalExpansion& a);

}  // namespace semilinear
