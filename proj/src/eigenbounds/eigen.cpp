#include "eigenbounds/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "interval/constants.hpp"

namespace semilinear {

namespace {

Interval dtilde(int i, int j, const Interval& sigma) {
  return Interval(static_cast<double>(i) * i + static_cast<double>(j) * j) * constants().pi_sq + sigma;
}

// 1/4 sum over common modes of a(k) b(k) f(k).
template <class F>
Interval quarter_dot(const IntervalExpansion& a, const IntervalExpansion& b, F f) {
  const int n = std::min(a.modes(), b.modes());
  Interval s(0.0);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) s += a.at(p, q) * b.at(p, q) * f(2 * p + 1, 2 * q + 1);
  return Interval(0.25) * s;
}

}  // namespace

Interval WeightFunction::constant_part() const {
  return sigma + lambda + Interval(3.0) * (Interval(1.0) - Interval(s)) * Interval(c0);
}

double WeightFunction::c0_from(const IntervalExpansion& w) {
  const double b = sup_bound(w).hi();
  return Interval::up_mul(b, b);
}

RitzData assemble(const std::vector<IntervalExpansion>& trial, const WeightFunction& w) {
  const int m = static_cast<int>(trial.size());
  if (m == 0) throw InvalidArgument("assemble needs at least one trial function");
  const Interval c = w.constant_part();
  const Interval three_s = Interval(3.0) * Interval(w.s);
  std::vector<IntervalExpansion> wphi;
  wphi.reserve(trial.size());
  for (const auto& phi : trial) {
    IntervalExpansion prod = product_to_sine<Interval>({w.omega, w.omega}, phi);
    IntervalExpansion r(prod.max_index());
    for (int p = 0; p < r.modes(); ++p)
      for (int q = 0; q < r.modes(); ++q)
        r.at(p, q) = c * phi.coeff(2 * p + 1, 2 * q + 1) + three_s * prod.at(p, q);
    wphi.push_back(std::move(r));
  }
  const auto one = [](int, int) { return Interval(1.0); };
  const auto dt = [&](int i, int j) { return dtilde(i, j, w.sigma); };
  const auto inv_dt = [&](int i, int j) { return Interval(1.0) / dtilde(i, j, w.sigma); };
  RitzData d{IntervalMatrix(m, m), IntervalMatrix(m, m), IntervalMatrix(m, m)};
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      d.A1(i, j) = quarter_dot(trial[i], trial[j], dt);
      d.A0(i, j) = quarter_dot(wphi[i], trial[j], one);
      d.A2(i, j) = quarter_dot(wphi[i], wphi[j], inv_dt);
    }
  d.A1.symmetrize_from_upper();
  d.A0.symmetrize_from_upper();
  d.A2.symmetrize_from_upper();
  if (!verified_positive_definite(d.A1))
    throw VerificationFailure("trial functions not verified linearly independent (A1 not positive definite)");
  if (!verified_positive_definite(d.A0)) throw VerificationFailure("A0 not verified positive definite");
  return d;
}

std::vector<Interval> rr_upper(const RitzData& data) {
  auto ev = pencil_eigenvalues(data.A1, data.A0);
  for (std::size_t i = 1; i < ev.size(); ++i)
    if (ev[i].hi() < ev[i - 1].hi()) ev[i] = Interval(ev[i].lo(), ev[i - 1].hi());
  return ev;
}

std::vector<std::optional<double>> lehmann_bounds(const RitzData& data, double rho) {
  const int m = data.A1.rows();
  const Interval r(rho);
  const IntervalMatrix lhs = data.A1 - r * data.A0;
  const IntervalMatrix rhs = data.A1 - (Interval(2.0) * r) * data.A0 + sqr(r) * data.A2;
  if (!verified_positive_definite(rhs))
    throw VerificationFailure("Lehmann: shifted matrix not verified positive definite");
  const auto tau = pencil_eigenvalues(lhs, rhs);
  std::vector<std::optional<double>> out(m);
  // rho t / (t - 1) decreases in t for t < 0, so the upper endpoint of each
  // negative tau gives the weakest, hence valid, bound.
  for (int i = 0; i < m; ++i) {
    if (!(tau[i].hi() < 0.0)) continue;
    const Interval t(tau[i].hi());
    out[m - 1 - i] = (r * t / (t - Interval(1.0))).lo();
  }
  return out;
}

std::vector<double> lehmann_lower(const RitzData& data, double rho) {
  const auto rr = rr_upper(data);
  if (!(rr.back().hi() < rho))
    throw VerificationFailure("Lehmann: Rayleigh-Ritz values not below rho");
  const auto b = lehmann_bounds(data, rho);
  std::vector<double> out;
  for (const auto& x : b) {
    if (!x) throw VerificationFailure("Lehmann: fewer negative pencil eigenvalues than trial functions");
    out.push_back(*x);
  }
  return out;
}

std::vector<Interval> base_spectrum(const WeightFunction& w, int count) {
  if (count < 1) throw InvalidArgument("base_spectrum count must be positive");
  const int B = 2 * count + 1;
  std::vector<std::pair<int, int>> modes;
  for (int i = 1; i <= B; i += 2)
    for (int j = 1; j <= B; j += 2) modes.emplace_back(i, j);
  std::stable_sort(modes.begin(), modes.end(), [](auto a, auto b) {
    return a.first * a.first + a.second * a.second < b.first * b.first + b.second * b.second;
  });
  WeightFunction w0 = w;
  w0.s = 0.0;
  const Interval c = w0.constant_part();
  std::vector<Interval> out;
  for (int k = 0; k < count; ++k) out.push_back(dtilde(modes[k].first, modes[k].second, w.sigma) / c);
  return out;
}

EigenSystem::EigenSystem(const WeightFunction& w, const EigenConfig& cfg) : w_(w), cfg_(cfg) {
  nb_ = IntervalExpansion::modes_for(cfg.basis_max);
  dim_ = nb_ * nb_;
  dtilde_.resize(dim_);
  for (int p = 0; p < dim_; ++p) dtilde_[p] = dtilde(2 * (p / nb_) + 1, 2 * (p % nb_) + 1, w.sigma);

  const auto s = signed_table(w.omega);
  const auto sq = convolve(s, s);
  const int out_max = 2 * nb_ - 1 + sq.extent();
  const auto images = mode_images(sq, 2 * nb_ - 1, out_max);
  const int nout = images.front().modes();
  const int kdim = nout * nout;

  // E(k, p): coefficient k of w^2 phi_p, stored column-wise.
  std::vector<Interval> e(static_cast<std::size_t>(kdim) * dim_);
  for (int p = 0; p < dim_; ++p)
    std::copy(images[p].data().begin(), images[p].data().end(), e.begin() + static_cast<std::size_t>(p) * kdim);
  auto basis_row = [&](int p) { return (p / nb_) * nout + (p % nb_); };

  g_ = IntervalMatrix(dim_, dim_);
  for (int p = 0; p < dim_; ++p)
    for (int q = p; q < dim_; ++q) {
      const Interval a = e[static_cast<std::size_t>(q) * kdim + basis_row(p)];
      const Interval b = e[static_cast<std::size_t>(p) * kdim + basis_row(q)];
      g_(p, q) = Interval(0.25) * Interval::intersect(a, b);
    }
  g_.symmetrize_from_upper();

  std::vector<Interval> inv(kdim);
  for (int k = 0; k < kdim; ++k) inv[k] = Interval(1.0) / dtilde(2 * (k / nout) + 1, 2 * (k % nout) + 1, w.sigma);
  std::vector<Interval> es(static_cast<std::size_t>(kdim) * dim_);
  for (int p = 0; p < dim_; ++p)
    for (int k = 0; k < kdim; ++k)
      es[static_cast<std::size_t>(p) * kdim + k] = e[static_cast<std::size_t>(p) * kdim + k] * inv[k];
  m_ = IntervalMatrix(dim_, dim_);
  for (int p = 0; p < dim_; ++p) {
    const Interval* ep = &es[static_cast<std::size_t>(p) * kdim];
    for (int q = p; q < dim_; ++q) {
      const Interval* eq = &e[static_cast<std::size_t>(q) * kdim];
      Interval acc(0.0);
      for (int k = 0; k < kdim; ++k) acc += ep[k] * eq[k];
      m_(p, q) = Interval(0.25) * acc;
    }
  }
  m_.symmetrize_from_upper();
}

IntervalMatrix EigenSystem::a1() const {
  IntervalMatrix a(dim_, dim_);
  for (int p = 0; p < dim_; ++p) a(p, p) = Interval(0.25) * dtilde_[p];
  return a;
}

IntervalMatrix EigenSystem::a0(double s) const {
  WeightFunction w = w_;
  w.s = s;
  const Interval c = Interval(0.25) * w.constant_part();
  const Interval t = Interval(3.0) * Interval(s);
  IntervalMatrix a(dim_, dim_);
  for (int p = 0; p < dim_; ++p)
    for (int q = p; q < dim_; ++q) a(p, q) = t * g_(p, q);
  for (int p = 0; p < dim_; ++p) a(p, p) += c;
  a.symmetrize_from_upper();
  return a;
}

IntervalMatrix EigenSystem::a2(double s) const {
  WeightFunction w = w_;
  w.s = s;
  const Interval c = w.constant_part();
  const Interval t = Interval(3.0) * Interval(s) * c;
  const Interval u = Interval(9.0) * sqr(Interval(s));
  IntervalMatrix a(dim_, dim_);
  for (int p = 0; p < dim_; ++p)
    for (int q = p; q < dim_; ++q) {
      Interval v = t * g_(p, q) * (Interval(1.0) / dtilde_[p] + Interval(1.0) / dtilde_[q]) + u * m_(p, q);
      if (p == q) v += Interval(0.25) * sqr(c) / dtilde_[p];
      a(p, q) = v;
    }
  a.symmetrize_from_upper();
  return a;
}

void EigenSystem::ritz(double s, Eigen::VectorXd& values, Eigen::MatrixXd& vectors) const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim_, dim_);
  for (int p = 0; p < dim_; ++p) a(p, p) = 0.25 * dtilde_[p].mid();
  const Eigen::MatrixXd b = a0(s).mid();
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(a, b);
  if (es.info() != Eigen::Success) throw VerificationFailure("float Ritz eigensolver failed");
  values = es.eigenvalues();
  vectors = es.eigenvectors();
}

RitzData EigenSystem::restrict(double s, const Eigen::MatrixXd& vectors, int m) const {
  const Eigen::MatrixXd t = vectors.leftCols(m);
  return RitzData{congruence(t, a1()), congruence(t, a0(s)), congruence(t, a2(s))};
}

HomotopyResult EigenSystem::homotopy(int m_target, const std::vector<double>& schedule) const {
  if (m_target < 1) throw InvalidArgument("homotopy target index must be positive");
  HomotopyResult res;
  const auto base = base_spectrum(w_, std::max(cfg_.base_count, cfg_.m_max + 2));
  std::vector<double> lower;
  for (const auto& b : base) lower.push_back(b.lo());
  const int mcap = std::min({cfg_.m_max, dim_ - 1, static_cast<int>(lower.size()) - 1});
  if (m_target > mcap) throw InvalidArgument("homotopy target index exceeds the trial space");

  if (!schedule.empty()) {
    if (schedule.back() != 1.0) throw InvalidArgument("homotopy schedule must end at s = 1");
    for (std::size_t i = 0; i < schedule.size(); ++i)
      if (!(schedule[i] > 0.0 && schedule[i] <= 1.0) || (i > 0 && !(schedule[i] > schedule[i - 1])))
        throw InvalidArgument("homotopy schedule must increase within (0, 1]");
  }

  // One Lehmann step at t with the largest feasible m >= need. Updates
  // `lower` and returns the m used, or 0.
  auto step = [&](double t, int need) -> int {
    Eigen::VectorXd ev;
    Eigen::MatrixXd vec;
    ritz(t, ev, vec);
    int m = 0;
    for (int mm = 1; mm <= mcap; ++mm)
      if (lower[mm] > ev(mm - 1) * (1.0 + cfg_.ritz_margin)) m = mm;
    if (m < need) return 0;
    const RitzData data = restrict(t, vec, m);
    const double rho = lower[m];
    std::vector<std::optional<double>> lows;
    try {
      const auto rr = rr_upper(data);
      if (!(rr.back().hi() < rho)) return 0;
      lows = lehmann_bounds(data, rho);
    } catch (const VerificationFailure&) {
      return 0;
    }
    bool any = false;
    for (int j = 0; j < m; ++j)
      if (lows[j]) {
        lower[j] = std::max(lower[j], *lows[j]);
        any = true;
      }
    if (!any) return 0;
    for (std::size_t j = 1; j < lower.size(); ++j) lower[j] = std::max(lower[j], lower[j - 1]);
    res.steps.push_back({t, m, rho});
    return m;
  };

  double s = 0.0;
  int mprev = mcap;
  if (!schedule.empty()) {
    for (double t : schedule) {
      const int need = t == 1.0 ? m_target : 1;
      if (step(t, need) == 0)
        throw VerificationFailure("homotopy chain breaks at s = " + std::to_string(t));
    }
  } else {
    while (s < 1.0) {
      double t = 1.0;
      int m = 0;
      for (;;) {
        const int need = t == 1.0 ? m_target : std::max(std::max(3, m_target), mprev - 2);
        m = step(t, need);
        if (m > 0) break;
        t = s + 0.5 * (t - s);
        if (t - s < cfg_.min_step)
          throw VerificationFailure("homotopy chain breaks after s = " + std::to_string(s));
      }
      s = t;
      mprev = m;
    }
  }
  res.rho = lower[m_target];
  res.lower = lower;
  return res;
}

HomotopyResult homotopy_bound(const WeightFunction& target, int m, const std::vector<double>& steps,
                              const EigenConfig& cfg) {
  return EigenSystem(target, cfg).homotopy(m, steps);
}

Interval compute_K(const std::vector<EigenEnclosure>& enclosures) {
  if (enclosures.size() < 2) throw InvalidArgument("compute_K needs kappa_1 and kappa_2");
  const Interval one(1.0);
  const Interval k1(enclosures[0].upper);
  const Interval k2(enclosures[1].lower);
  if (!(k1.hi() < 1.0 && k2.lo() > 1.0))
    throw VerificationFailure("eigenvalue straddling of 1 not established; K undefined");
  return max(k1 / (one - k1), k2 / (k2 - one));
}

GridEigenResult grid_eigen_bounds(const WeightFunction& target, const EigenConfig& cfg) {
  WeightFunction w = target;
  w.s = 1.0;
  const EigenSystem sys(w, cfg);
  GridEigenResult res;
  res.homotopy = sys.homotopy(2);
  Eigen::VectorXd ev;
  Eigen::MatrixXd vec;
  sys.ritz(1.0, ev, vec);
  const RitzData data = sys.restrict(1.0, vec, 2);
  const auto rr = rr_upper(data);
  const auto lo = lehmann_lower(data, res.homotopy.rho);
  for (int i = 0; i < 2; ++i) {
    EigenEnclosure e;
    e.index = i + 1;
    e.lower = std::max(lo[i], res.homotopy.lower[i]);
    e.upper = rr[i].hi();
    if (e.lower > e.upper) throw VerificationFailure("eigenvalue bounds cross; enclosure machinery inconsistent");
    res.kappa.push_back(e);
  }
  res.K = compute_K(res.kappa);
  return res;
}

}  // namespace semilinear
