#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spectral/expansion.hpp"
#include "spectral/partial_sums.hpp"

namespace semilinear {

// Non-rigorous pointwise value, for diagnostics.
double eval_float(const FloatExpansion& w, double x, double y);

// Enclosure of w(1/2, 1/2) using the exact signs sin(i pi / 2) = +-1.
Interval eval_center(const IntervalExpansion& w);

// Proves w > 0 on the open square when it returns true. Uses
// w = sin(pi x) sin(pi y) * sum a(i,j) D_i(x) D_j(y), where the
// Dirichlet-type factor D_i = sin(i pi x) / sin(pi x) lies in [2 - i, i].
// false is inconclusive.
bool positivity_check(const IntervalExpansion& w);

struct QuadraticNorms {
  Interval l2_sq;   // integral of w^2
  Interval h01_sq;  // integral of |grad w|^2 + sigma w^2
};
QuadraticNorms quadratic_norms(const IntervalExpansion& w, const Interval& sigma);

// Upper bound for the sup norm: sum of |a(i,j)|.
Interval sup_bound(const IntervalExpansion& w);

// Sine coefficients of the product factors[0] * ... * factors[n-1] * phi.
// The number of factors must be even so that the product is a sine series.
template <class T>
SineExpansion<T> product_to_sine(const std::vector<SineExpansion<T>>& factors,
                                 const SineExpansion<T>& phi) {
  if (factors.size() % 2 != 0)
    throw InvalidArgument("product_to_sine needs an even number of extra factors");
  PartialSumTable<T> t = signed_table(phi);
  for (const auto& f : factors) t = convolve(t, signed_table(f));
  return to_sine(t);
}

// Cosine coefficients of w^2.
template <class T>
CosineExpansion<T> square_to_cosine(const SineExpansion<T>& w) {
  const auto s = signed_table(w);
  return to_cosine(convolve(s, s));
}

// Sine coefficients of w^3.
template <class T>
SineExpansion<T> cube_to_sine(const SineExpansion<T>& w) {
  const auto s = signed_table(w);
  return to_sine(convolve(convolve(s, s), s));
}

// For f given by an even-factor table and every basis mode phi_p with odd
// indices up to basis_max, the sine coefficients of f * phi_p, truncated to
// indices up to out_max. Modes are ordered row-major by (i, j).
template <class T>
std::vector<SineExpansion<T>> mode_images(const PartialSumTable<T>& f, int basis_max, int out_max) {
  if (f.odd()) throw InvalidArgument("mode_images needs an even-factor table");
  const int nb = SineExpansion<T>::modes_for(basis_max);
  const double scale = -4.0 * table_scale(f.factors() + 1);
  std::vector<SineExpansion<T>> out;
  out.reserve(static_cast<std::size_t>(nb) * nb);
  for (int pa = 0; pa < nb; ++pa)
    for (int pb = 0; pb < nb; ++pb) {
      const int a = 2 * pa + 1;
      const int b = 2 * pb + 1;
      SineExpansion<T> r(out_max);
      for (int p = 0; p < r.modes(); ++p)
        for (int q = 0; q < r.modes(); ++q) {
          const int k = 2 * p + 1;
          const int l = 2 * q + 1;
          // phi's signed lattice is +1 at (a,b), (-a,-b) and -1 at (-a,b), (a,-b).
          T s = f.get(k - a, l - b);
          s += f.get(k + a, l + b);
          s -= f.get(k + a, l - b);
          s -= f.get(k - a, l + b);
          r.at(p, q) = T(scale) * s;
        }
      out.push_back(std::move(r));
    }
  return out;
}

// Per-index weight, evaluated for odd i, j.
using IndexWeight = std::function<Interval(int i, int j)>;

// Integral of w^4, or with a weight, integral of (sum weight(i,j) a(i,j)
// sin sin) * w^3. Pairs two two-factor tables.
Interval quartic_sum(const IntervalExpansion& w, const IndexWeight& weight = {});

// Integral of w^6. Pairs the three-factor table T with T(-k,-l).
Interval sextic_sum(const IntervalExpansion& w);

// CSV with header "i,j,coeff"; coefficients in round-trip precision. The
// reader rejects even or nonpositive indices.
void write_csv(const std::string& path, const FloatExpansion& w);
FloatExpansion read_csv(const std::string& path);
std::string to_csv(const FloatExpansion& w);
FloatExpansion parse_csv(const std::string& text, const std::string& origin = "<string>");

}  // namespace semilinear
