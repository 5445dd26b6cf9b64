#include "pipeline/pipeline.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "interval/constants.hpp"
#include "pipeline/records.hpp"
#include "solver/solver.hpp"

namespace semilinear {

namespace fs = std::filesystem;

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Proved: return "PROVED";
    case Verdict::ProvedOnSubinterval: return "PROVED_ON_SUBINTERVAL";
    case Verdict::Failed: return "FAILED";
  }
  return "FAILED";
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 computation failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string build_fingerprint() {
  std::ostringstream os;
#if defined(__clang__)
  os << "clang " << __clang_version__;
#elif defined(__GNUC__)
  os << "gcc " << __VERSION__;
#else
  os << "unknown compiler";
#endif
  os << "; C++ " << __cplusplus << "; rounding " << rounding::Active::name;
#if defined(__FMA__)
  os << "; hardware fma";
#else
  os << "; libm fma";
#endif
  return os.str();
}

namespace {

// Four significant digits for progress messages.
std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

std::string slice_key(const ProblemParams& p, const Decimal& lambda, const FloatExpansion& omega) {
  std::ostringstream os;
  os << "grid-point v2|sigma=" << p.sigma.num << '/' << p.sigma.den << "|lambda=" << lambda.num << '/'
     << lambda.den << "|basis_max=" << p.eigen.basis_max << "|m_max=" << p.eigen.m_max
     << "|base_count=" << p.eigen.base_count << "|min_step=" << p.eigen.min_step
     << "|ritz_margin=" << p.eigen.ritz_margin << "|rounding=" << rounding::Active::name << "|\n"
     << to_csv(omega);
  return sha256_hex(os.str());
}

// Positivity, defect, eigenvalue enclosures and norms of one grid point.
void verify_point(GridRecord& r, const FloatExpansion& omega, const ProblemParams& p) {
  const IntervalExpansion w = to_interval(omega);
  const Interval lambda = r.lambda.interval();
  const Interval sigma = p.sigma.interval();
  r.error_module = "spectral";
  r.positive = positivity_check(w);
  if (!r.positive) throw VerificationFailure("positivity of omega not verified");
  r.center = eval_center(w);
  r.error_module = "defect";
  const DefectBounds d = defect_bounds(w, lambda, sigma);
  r.delta_hat = d.delta_hat;
  r.delta = d.delta;
  r.error_module = "eigen";
  WeightFunction wf;
  wf.sigma = sigma;
  wf.lambda = lambda;
  wf.omega = w;
  wf.c0 = WeightFunction::c0_from(w);
  const GridEigenResult ge = grid_eigen_bounds(wf, p.eigen);
  r.kappa = ge.kappa;
  r.K = ge.K;
  r.rho = ge.homotopy.rho;
  r.homotopy = ge.homotopy.steps;
  r.error_module = "branch";
  GridPoint gp;
  gp.omega = w;
  fill_norms(gp, sigma);
  r.l4_norm = gp.l4_norm;
  r.l6_norm = gp.l6_norm;
  r.h01_norm = gp.h01_norm;
  r.sup_norm = gp.sup_norm_bound;
  r.error_module.clear();
}

bool overlaps(const Interval& a, const Interval& b) { return a.overlaps(b); }

std::vector<SelfCheck> self_checks(const ProblemParams& p, const EmbeddingPack& pack) {
  std::vector<SelfCheck> out;
  const DomainConstants& k = constants();
  const Interval sigma = p.sigma.interval();

  {
    SelfCheck c{"embedding-constants", false, ""};
    const Interval closed = Interval(3.0) * sqrt(Interval(2.0)) /
                            (Interval(4.0) * pow(root(k.pi_sq + sigma, 4), 3));
    c.passed = pack.gamma.hi() < 0.2 && overlaps(closed, pack.gamma);
    c.detail = "gamma = " + to_string(pack.gamma) + ", required < 1/5";
    out.push_back(c);
  }
  {
    SelfCheck c{"sextic-single-mode", true, ""};
    for (double a : {1.0, 3.0}) {
      IntervalExpansion w(5);
      w.set(1, 1, Interval(a));
      Interval s6 = sextic_sum(w);
      if (p.fault == Fault::Sextic) s6 = s6 * Interval(1.0 + 0x1p-30);
      const Interval exact = Interval(25.0) * pow(Interval(a), 6) / Interval(256.0);
      const Interval s4 = quartic_sum(w);
      const Interval exact4 = Interval(9.0) * pow(Interval(a), 4) / Interval(64.0);
      if (!(exact.subset_of(s6) && exact4.subset_of(s4))) c.passed = false;
      c.detail += "a=" + std::to_string(a) + ": sextic " + to_string(s6) + "; ";
    }
    out.push_back(c);
  }
  {
    SelfCheck c{"single-mode-defect", true, ""};
    for (const auto& [a, lam] : std::vector<std::pair<double, double>>{{1.5, 0.0}, {3.0, 10.0}, {0.5, 18.0}}) {
      IntervalExpansion w(3);
      w.set(1, 1, Interval(a));
      Interval got = l2_defect(w, Interval(lam));
      if (p.fault == Fault::SingleMode) got = got + Interval(1e-3);
      const Interval A(a);
      const Interval g = k.lambda1 - Interval(lam);
      const Interval closed = sqrt(clamp_nonnegative(sqr(g) * sqr(A) / Interval(4.0) -
                                                     Interval(2.0) * g * Interval(9.0) * pow(A, 4) / Interval(64.0) +
                                                     Interval(25.0) * pow(A, 6) / Interval(256.0)));
      if (!overlaps(got, closed)) c.passed = false;
      c.detail += "a=" + std::to_string(a) + " lambda=" + std::to_string(lam) + ": " + to_string(got) + "; ";
    }
    out.push_back(c);
  }
  {
    SelfCheck c{"base-spectrum", true, ""};
    WeightFunction wf;
    wf.sigma = sigma;
    wf.lambda = Interval(1.0);
    wf.omega = IntervalExpansion(1);
    wf.c0 = 2.0;
    wf.s = 0.0;
    const auto base = base_spectrum(wf, 5);
    for (const auto& b : base)
      if (!(b.width() <= 1e-9 * b.mig())) c.passed = false;
    // Exact modes as trial functions: Lehmann bounds must be sharp.
    std::vector<IntervalExpansion> trial;
    for (const auto& [i, j] : std::vector<std::pair<int, int>>{{1, 1}, {1, 3}, {3, 1}}) {
      IntervalExpansion phi(3);
      phi.set(i, j, Interval(1.0));
      trial.push_back(phi);
    }
    const RitzData data = assemble(trial, wf);
    std::vector<double> low = lehmann_lower(data, base[3].lo());
    if (p.fault == Fault::BaseSpectrum) low[0] -= 1e-3;
    for (int i = 0; i < 3; ++i)
      if (!(std::abs(low[i] - base[i].mid()) <= 1e-8 * base[i].mid())) c.passed = false;
    c.detail = "kappa_1 lower " + std::to_string(low[0]) + " vs " + to_string(base[0]);
    out.push_back(c);
  }
  return out;
}

void fail(ProofCertificate& cert, const std::string& module, const std::string& reason, const std::string& location) {
  cert.verdict = Verdict::Failed;
  cert.module = module;
  cert.reason = reason;
  cert.location = location;
}

std::string half_interval_label(const ProofCertificate& cert, const HalfIntervalCertificate& c) {
  const Decimal& a = cert.grid[c.subinterval - 1];
  const Decimal& b = cert.grid[c.subinterval];
  const Decimal m = midpoint(a, b);
  return c.right_half ? "[" + m.str() + ", " + b.str() + "]" : "[" + a.str() + ", " + m.str() + "]";
}

}  // namespace

ProofCertificate run(const ProblemParams& params, const PipelineLog& log) {
  params.validate();
  ProofCertificate cert;
  cert.params = params;
  cert.grid = params.grid();
  cert.sup_pack = SupNormPack::unit_square();
  std::mutex log_mu;
  auto say = [&](const std::string& s) {
    if (!log) return;
    std::lock_guard<std::mutex> lock(log_mu);
    log(s);
  };

  cert.embedding = make_embedding_pack(params.sigma.interval());
  if (params.fault == Fault::Constants) cert.embedding.gamma = cert.embedding.gamma * Interval(1.25);
  cert.self_checks = self_checks(params, cert.embedding);
  for (const auto& c : cert.self_checks) {
    say("self-check " + c.name + ": " + (c.passed ? "ok" : "FAILED"));
    if (!c.passed) {
      fail(cert, "self-check", "self-check failed: " + c.detail, c.name);
      return cert;
    }
  }

  const fs::path out_dir = params.out_dir;
  if (!params.out_dir.empty()) {
    fs::create_directories(out_dir / "omega");
    fs::create_directories(out_dir / "cache");
  }

  // Continuation from lambda_bar down to 0.
  ContinuationConfig cc;
  cc.N = params.N;
  cc.alpha0 = params.alpha0;
  cc.newton_tol = params.newton_tol;
  cc.max_iters = params.max_iters;
  cc.lambda_start = params.lambda_bar.value();
  for (auto it = cert.grid.rbegin(); it != cert.grid.rend(); ++it) cc.lambda_grid.push_back(it->value());
  const std::size_t n = cert.grid.size();
  cert.points.resize(n);
  for (std::size_t i = 0; i < n; ++i) cert.points[i].lambda = cert.grid[i];
  std::map<double, NewtonResult> solves;
  try {
    continuation(cc, [&](double lam, const NewtonResult& r) {
      solves[lam] = r;
      say("newton lambda=" + Decimal::parse(std::to_string(lam)).str() + " iterations=" +
          std::to_string(r.update_norms.size()) + " residual=" + short_num(r.residual));
    });
  } catch (const SolverError& e) {
    fail(cert, "solver", e.what(), "continuation");
    return cert;
  }
  std::vector<FloatExpansion> omegas(n);
  for (std::size_t i = 0; i < n; ++i) {
    const NewtonResult& r = solves.at(cert.grid[i].value());
    omegas[i] = r.omega;
    cert.points[i].newton_updates = r.update_norms;
    cert.points[i].newton_residual = r.residual;
    cert.points[i].hash = slice_key(params, cert.grid[i], r.omega);
    if (!params.out_dir.empty()) write_csv((out_dir / "omega" / omega_filename(cert.grid[i].value())).string(), r.omega);
  }

  // Grid points in parallel; each worker writes only its own slot.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      GridRecord& r = cert.points[i];
      const fs::path cache_file = out_dir / "cache" / (r.hash + ".json");
      if (params.resume && !params.out_dir.empty() && fs::exists(cache_file)) {
        try {
          std::ifstream in(cache_file);
          verified_from_json(nlohmann::json::parse(in), r);
          say("grid lambda=" + r.lambda.str() + " reused from cache");
          continue;
        } catch (const std::exception& e) {
          say("grid lambda=" + r.lambda.str() + " cache unreadable, recomputing: " + e.what());
        }
      }
      try {
        verify_point(r, omegas[i], params);
        if (!params.out_dir.empty()) write_text(cache_file, verified_json(r).dump(1) + "\n");
        say("grid lambda=" + r.lambda.str() + " delta=" + short_num(r.delta.hi()) + " K=" + short_num(r.K.hi()));
      } catch (const Error& e) {
        r.error = e.what();
        if (r.error_module.empty()) r.error_module = "pipeline";
        say("grid lambda=" + r.lambda.str() + " FAILED in " + r.error_module + ": " + r.error);
      }
    }
  };
  const int nthreads = std::max(1, std::min<int>(params.workers, static_cast<int>(n)));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  if (params.fault == Fault::Defect && cert.points.front().error.empty())
    cert.points.front().delta = cert.points.front().delta * Interval(1e4);
  if (params.fault == Fault::Eigen && cert.points.front().error.empty()) {
    GridRecord& r = cert.points.front();
    r.kappa[0].upper = 1.0;
    try {
      r.K = compute_K(r.kappa);
    } catch (const VerificationFailure& e) {
      r.error = e.what();
      r.error_module = "eigen";
    }
  }

  for (const auto& r : cert.points)
    if (!r.error.empty()) {
      fail(cert, r.error_module, r.error, "grid point lambda = " + r.lambda.str());
      return cert;
    }

  std::vector<GridPoint> gps(n);
  for (std::size_t i = 0; i < n; ++i) {
    const GridRecord& r = cert.points[i];
    GridPoint& g = gps[i];
    g.lambda = r.lambda.interval();
    g.omega = to_interval(omegas[i]);
    g.delta = r.delta;
    g.K = r.K;
    g.l4_norm = r.l4_norm;
    g.l6_norm = r.l6_norm;
    g.h01_norm = r.h01_norm;
    g.sup_norm_bound = r.sup_norm;
  }
  try {
    cert.branch = verify_branch(gps, cert.embedding);
  } catch (const Error& e) {
    fail(cert, "branch", e.what(), "branch");
    return cert;
  }
  if (!cert.branch->all_valid) {
    const auto& c = cert.branch->certificates[*cert.branch->first_failure];
    fail(cert, "branch", c.failure, "half-interval " + half_interval_label(cert, c));
    return cert;
  }
  say("branch: " + std::to_string(cert.branch->certificates.size()) + " half-intervals valid, eta = " +
      to_string(cert.branch->eta));

  EndgameRecord& eg = cert.endgame;
  const GridRecord& last = cert.points.back();
  eg.evaluated = true;
  eg.alpha = Interval(cert.branch->certificates.back().alpha.hi());
  eg.delta_hat = last.delta_hat;
  eg.l6_norm = last.l6_norm;
  const Interval lambda_bar = params.lambda_bar.interval();
  eg.sup_err = sup_error_bound(eg.alpha, eg.delta_hat, eg.l6_norm, lambda_bar, cert.sup_pack, cert.embedding);
  if (params.fault == Fault::Endgame) eg.sup_err = eg.sup_err + uniqueness_bound(lambda_bar);
  const ThresholdResult t = uniqueness_threshold(gps.back().omega, eg.sup_err, lambda_bar);
  eg.center = t.center;
  eg.sup_bound = t.sup_bound;
  eg.threshold = t.threshold;
  eg.passed = t.passed;
  say("endgame: " + to_string(eg.sup_bound) + " vs threshold " + to_string(eg.threshold));

  if (eg.passed) {
    cert.verdict = Verdict::Proved;
  } else {
    eg.note = "sup-norm bound at lambda_bar is not below sqrt(lambda_bar/2); uniqueness beyond the branch not established";
    cert.verdict = Verdict::ProvedOnSubinterval;
    cert.module = "endgame";
    cert.reason = eg.note;
    cert.location = "lambda_bar = " + params.lambda_bar.str();
  }
  return cert;
}

}  // namespace semilinear
