#include "interval/matrix.hpp"

#include <algorithm>

namespace semilinear {

Eigen::MatrixXd IntervalMatrix::mid() const {
  Eigen::MatrixXd m(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(i, j) = (*this)(i, j).mid();
  return m;
}

bool IntervalMatrix::symmetric() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = i + 1; j < c_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

void IntervalMatrix::symmetrize_from_upper() {
  for (int i = 0; i < r_; ++i)
    for (int j = i + 1; j < c_; ++j) (*this)(j, i) = (*this)(i, j);
}

IntervalMatrix operator+(const IntervalMatrix& a, const IntervalMatrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw InvalidArgument("matrix shape mismatch");
  IntervalMatrix r(a.r_, a.c_);
  for (std::size_t k = 0; k < a.v_.size(); ++k) r.v_[k] = a.v_[k] + b.v_[k];
  return r;
}

IntervalMatrix operator-(const IntervalMatrix& a, const IntervalMatrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw InvalidArgument("matrix shape mismatch");
  IntervalMatrix r(a.r_, a.c_);
  for (std::size_t k = 0; k < a.v_.size(); ++k) r.v_[k] = a.v_[k] - b.v_[k];
  return r;
}

IntervalMatrix operator*(const Interval& s, const IntervalMatrix& a) {
  IntervalMatrix r(a.r_, a.c_);
  for (std::size_t k = 0; k < a.v_.size(); ++k) r.v_[k] = s * a.v_[k];
  return r;
}

IntervalMatrix congruence(const Eigen::MatrixXd& x, const IntervalMatrix& a) {
  const int n = a.rows();
  const int m = static_cast<int>(x.cols());
  if (x.rows() != n || a.cols() != n) throw InvalidArgument("congruence shape mismatch");
  // AX, then X^T (AX); only the upper triangle of the result is formed.
  IntervalMatrix ax(n, m);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Interval& aik = a(i, k);
      if (aik == Interval(0.0)) continue;
      for (int j = 0; j < m; ++j) {
        const double xkj = x(k, j);
        if (xkj != 0.0) ax(i, j) += aik * Interval(xkj);
      }
    }
  IntervalMatrix r(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      Interval s(0.0);
      for (int k = 0; k < n; ++k) {
        const double xki = x(k, i);
        if (xki != 0.0) s += Interval(xki) * ax(k, j);
      }
      r(i, j) = s;
    }
  r.symmetrize_from_upper();
  return r;
}

bool verified_positive_definite(const IntervalMatrix& a) {
  const int n = a.rows();
  if (n != a.cols()) return false;
  IntervalMatrix l(n, n);
  for (int j = 0; j < n; ++j) {
    Interval d = a(j, j);
    for (int k = 0; k < j; ++k) d -= sqr(l(j, k));
    if (!d.certainly_positive()) return false;
    l(j, j) = sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      Interval s = a(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return true;
}

double frobenius_upper(const IntervalMatrix& a) {
  Interval s(0.0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += sqr(a(i, j));
  return sqrt(Interval(s.hi())).hi();
}

std::vector<Interval> pencil_eigenvalues(const IntervalMatrix& a, const IntervalMatrix& b) {
  const int n = a.rows();
  if (n == 0 || a.cols() != n || b.rows() != n || b.cols() != n)
    throw InvalidArgument("pencil needs square matrices of equal size");
  if (!a.symmetric() || !b.symmetric()) throw InvalidArgument("pencil matrices must be symmetric");

  // Approximate B-orthonormal eigenvectors. The congruence with them is exact
  // in interval arithmetic, so X only needs to be nonsingular; a good X makes
  // the transformed pencil nearly (diag, I).
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(a.mid(), b.mid());
  if (es.info() != Eigen::Success) throw VerificationFailure("float pencil eigensolver failed");
  const Eigen::MatrixXd x = es.eigenvectors();

  const IntervalMatrix at = congruence(x, a);
  IntervalMatrix bt = congruence(x, b);
  for (int i = 0; i < n; ++i) bt(i, i) -= Interval(1.0);
  // ||X^T B X - I||_2 <= eps < 1 makes X^T B X positive definite (so X is
  // nonsingular and B definite) and the eigenvalues of (X^T B X)^{-1} lie in
  // [1/(1+eps), 1/(1-eps)].
  const double eps = frobenius_upper(bt);
  if (!(eps < 1.0)) throw VerificationFailure("pencil transformation not close enough to identity");
  const Interval one(1.0);
  const Interval theta = Interval::hull(one / (one + Interval(eps)), one / (one - Interval(eps)));

  // Eigenvalues of the transformed A: diagonal part plus an off-diagonal
  // perturbation of 2-norm at most its Frobenius norm.
  IntervalMatrix off = at;
  std::vector<double> dlo(n), dhi(n);
  for (int i = 0; i < n; ++i) {
    dlo[i] = at(i, i).lo();
    dhi[i] = at(i, i).hi();
    off(i, i) = Interval(0.0);
  }
  const double r = frobenius_upper(off);
  std::sort(dlo.begin(), dlo.end());
  std::sort(dhi.begin(), dhi.end());

  // Ostrowski: the pencil eigenvalue is theta_i * lambda_i(A~) with theta_i in
  // the range above; interval multiplication covers either sign.
  std::vector<Interval> out(n);
  for (int i = 0; i < n; ++i) {
    const Interval ai(Interval::down_add(dlo[i], -r), Interval::up_add(dhi[i], r));
    out[i] = theta * ai;
  }
  return out;
}

}  // namespace semilinear
