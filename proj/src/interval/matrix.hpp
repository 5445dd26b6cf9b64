#pragma once

#include <Eigen/Dense>
#include <vector>

#include "interval/interval.hpp"

namespace semilinear {

class IntervalMatrix {
 public:
  IntervalMatrix() = default;
  IntervalMatrix(int rows, int cols) : r_(rows), c_(cols), v_(static_cast<std::size_t>(rows) * cols, Interval(0.0)) {}

  int rows() const noexcept { return r_; }
  int cols() const noexcept { return c_; }
  Interval& operator()(int i, int j) { return v_[static_cast<std::size_t>(i) * c_ + j]; }
  const Interval& operator()(int i, int j) const { return v_[static_cast<std::size_t>(i) * c_ + j]; }

  Eigen::MatrixXd mid() const;
  // Exact symmetry of every entry.
  bool symmetric() const;
  // Copies the upper triangle into the lower one.
  void symmetrize_from_upper();

  friend IntervalMatrix operator+(const IntervalMatrix& a, const IntervalMatrix& b);
  friend IntervalMatrix operator-(const IntervalMatrix& a, const IntervalMatrix& b);
  friend IntervalMatrix operator*(const Interval& s, const IntervalMatrix& a);

 private:
  int r_ = 0, c_ = 0;
  std::vector<Interval> v_;
};

// X^T A X for a float matrix X; the result is symmetric when A is.
IntervalMatrix congruence(const Eigen::MatrixXd& x, const IntervalMatrix& a);

// True only if every symmetric matrix inside A is positive definite, shown by
// completing an interval Cholesky factorization with positive pivots.
bool verified_positive_definite(const IntervalMatrix& a);

// Upper bound on the Frobenius norm.
double frobenius_upper(const IntervalMatrix& a);

// Enclosures of all eigenvalues of the symmetric definite pencil A x = t B x,
// ascending. Valid for every pair of symmetric matrices drawn from A and B.
// Throws VerificationFailure if B is not shown positive definite or the
// transformed problem is too far from diagonal.
std::vector<Interval> pencil_eigenvalues(const IntervalMatrix& a, const IntervalMatrix& b);

}  // namespace semilinear
