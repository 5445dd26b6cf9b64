#pragma once

// Signed-index partial-sum tables.
//
// Writing sin(i pi x) = (e^{i pi i x} - e^{-i pi i x}) / 2i turns an odd-odd
// sine series into a signed lattice S(k,l) = sgn(k) sgn(l) a(|k|,|l|) with
// f = (-1/4) sum S(k,l) e^{i pi (k x + l y)}. A product of n such series has
// the lattice S1 * ... * Sn (two-dimensional discrete convolution) and the
// prefactor (-1/4)^n. Entry (k,l) of that convolution is the sum over all
// signed index combinations i1 + s2 i2 + ... = k, which is the quantity the
// product-to-sum identities produce; the sign patterns are carried by the
// signed indices instead of an explicit loop over them.
//
// A table holds only lattice points whose coordinates have the table's
// parity (odd for an odd number of factors, even otherwise).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "spectral/expansion.hpp"

namespace semilinear {

template <class T>
class PartialSumTable {
 public:
  PartialSumTable() = default;
  PartialSumTable(int extent, int factors)
      : k_(extent), factors_(factors), w_(2 * extent + 1),
        v_(static_cast<std::size_t>(w_) * w_, T(0.0)) {}

  // Largest |k| or |l| stored.
  int extent() const noexcept { return k_; }
  // Number of sine factors in the product this table represents.
  int factors() const noexcept { return factors_; }
  bool odd() const noexcept { return factors_ % 2 == 1; }
  // First stored coordinate, either -extent or -extent+1 depending on parity.
  int first() const noexcept { return ((k_ % 2 != 0) == odd()) ? -k_ : -k_ + 1; }

  T& at(int k, int l) { return v_[idx(k, l)]; }
  const T& at(int k, int l) const { return v_[idx(k, l)]; }
  T get(int k, int l) const {
    if (k < -k_ || k > k_ || l < -k_ || l > k_) return T(0.0);
    return v_[idx(k, l)];
  }

 private:
  std::size_t idx(int k, int l) const {
    return static_cast<std::size_t>(k + k_) * w_ + static_cast<std::size_t>(l + k_);
  }

  int k_ = 0;
  int factors_ = 0;
  int w_ = 1;
  std::vector<T> v_;
};

template <class T>
PartialSumTable<T> signed_table(const SineExpansion<T>& a) {
  const int K = a.max_index();
  PartialSumTable<T> t(K, 1);
  for (int p = 0; p < a.modes(); ++p)
    for (int q = 0; q < a.modes(); ++q) {
      const T& c = a.at(p, q);
      const int i = 2 * p + 1;
      const int j = 2 * q + 1;
      t.at(i, j) = c;
      t.at(-i, -j) = c;
      t.at(-i, j) = -c;
      t.at(i, -j) = -c;
    }
  return t;
}

// Two-dimensional convolution. Accumulation runs over the left operand in
// row-major ascending order, then the right operand likewise, so the result
// is bit-reproducible.
template <class T>
PartialSumTable<T> convolve(const PartialSumTable<T>& a, const PartialSumTable<T>& b) {
  PartialSumTable<T> r(a.extent() + b.extent(), a.factors() + b.factors());
  const int a0 = a.first();
  const int b0 = b.first();
  // Nonzero entries of b, gathered once.
  struct Entry {
    int k, l;
    T v;
  };
  std::vector<Entry> nb;
  for (int k = b0; k <= b.extent(); k += 2)
    for (int l = b0; l <= b.extent(); l += 2) {
      const T& v = b.at(k, l);
      if (!(v == T(0.0))) nb.push_back({k, l, v});
    }
  for (int k = a0; k <= a.extent(); k += 2)
    for (int l = a0; l <= a.extent(); l += 2) {
      const T& va = a.at(k, l);
      if (va == T(0.0)) continue;
      for (const Entry& e : nb) r.at(k + e.k, l + e.l) += va * e.v;
    }
  return r;
}

// sum over (k,l) of a(k,l) * b(-k,-l): the constant term of the product.
template <class T>
T pair_sum(const PartialSumTable<T>& a, const PartialSumTable<T>& b) {
  T s(0.0);
  if (a.odd() != b.odd()) return s;
  const int K = std::min(a.extent(), b.extent());
  const int k0 = ((K % 2 != 0) == a.odd()) ? -K : -K + 1;
  for (int k = k0; k <= K; k += 2)
    for (int l = k0; l <= K; l += 2) s += a.at(k, l) * b.at(-k, -l);
  return s;
}

// Scale (-1/4)^n of an n-factor table, exact as a power of two.
inline double table_scale(int factors) {
  const double m = std::ldexp(1.0, -2 * factors);
  return factors % 2 == 0 ? m : -m;
}

// Sine coefficients of an odd-factor product table.
template <class T>
SineExpansion<T> to_sine(const PartialSumTable<T>& t) {
  if (!t.odd()) throw InvalidArgument("even number of sine factors gives a cosine series");
  const int K = t.extent() % 2 == 0 ? t.extent() - 1 : t.extent();
  SineExpansion<T> r(K);
  // coefficient = -4 * (-1/4)^n * t(k,l)
  const double s = -4.0 * table_scale(t.factors());
  for (int p = 0; p < r.modes(); ++p)
    for (int q = 0; q < r.modes(); ++q) r.at(p, q) = T(s) * t.at(2 * p + 1, 2 * q + 1);
  return r;
}

// Cosine coefficients of an even-factor product table.
template <class T>
CosineExpansion<T> to_cosine(const PartialSumTable<T>& t) {
  if (t.odd()) throw InvalidArgument("odd number of sine factors gives a sine series");
  const int K = t.extent() % 2 == 0 ? t.extent() : t.extent() - 1;
  CosineExpansion<T> r(K);
  const double s = table_scale(t.factors());
  for (int p = 0; p < r.modes(); ++p)
    for (int q = 0; q < r.modes(); ++q) {
      const double w = (p > 0 ? 2.0 : 1.0) * (q > 0 ? 2.0 : 1.0);
      r.at(p, q) = T(s * w) * t.at(2 * p, 2 * q);
    }
  return r;
}

}  // namespace semilinear
