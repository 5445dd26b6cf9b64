#include <semilinear/semilinear.h>

#include <cstdlib>
#include <cstring>
#include <memory>
#include <mutex>
#include <sstream>

#include "interval/constants.hpp"
#include "pipeline/pipeline.hpp"
#include "solver/solver.hpp"

struct sl_params {
  semilinear::ProblemParams p;
};

struct sl_certificate {
  semilinear::ProofCertificate c;
};

struct sl_expansion {
  semilinear::FloatExpansion w;
};

namespace {

thread_local std::string g_last_error;

std::mutex g_log_mu;
sl_log_fn g_log_fn = nullptr;
void* g_log_user = nullptr;

void log_message(const std::string& msg) {
  std::lock_guard<std::mutex> lock(g_log_mu);
  if (g_log_fn) g_log_fn(0, msg.c_str(), g_log_user);
}

sl_status fail(sl_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Runs f and maps library exceptions to status codes.
template <class F>
sl_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return SL_OK;
  } catch (const semilinear::InvalidArgument& e) {
    return fail(SL_INVALID_ARGUMENT, e.what());
  } catch (const semilinear::NumericError& e) {
    return fail(SL_NUMERIC_ERROR, e.what());
  } catch (const semilinear::VerificationFailure& e) {
    return fail(SL_VERIFICATION_FAILED, e.what());
  } catch (const semilinear::SolverError& e) {
    return fail(SL_SOLVER_ERROR, e.what());
  } catch (const semilinear::IoError& e) {
    return fail(SL_IO_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SL_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(SL_INTERNAL_ERROR, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sl_interval to_c(const semilinear::Interval& x) { return {x.lo(), x.hi()}; }

}  // namespace

extern "C" {

const char* sl_version(void) { return "1.0.0"; }

const char* sl_status_string(sl_status status) {
  switch (status) {
    case SL_OK: return "ok";
    case SL_INVALID_ARGUMENT: return "invalid argument";
    case SL_NUMERIC_ERROR: return "numeric error";
    case SL_VERIFICATION_FAILED: return "verification failed";
    case SL_SOLVER_ERROR: return "solver error";
    case SL_IO_ERROR: return "I/O error";
    case SL_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* sl_last_error(void) { return g_last_error.c_str(); }

void sl_set_log_callback(sl_log_fn fn, void* user) {
  std::lock_guard<std::mutex> lock(g_log_mu);
  g_log_fn = fn;
  g_log_user = user;
}

sl_status sl_params_create(sl_params** out) {
  if (!out) return fail(SL_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { *out = new sl_params(); });
}

void sl_params_destroy(sl_params* params) { delete params; }

sl_status sl_params_set(sl_params* params, const char* key, const char* value) {
  if (!params || !key || !value) return fail(SL_INVALID_ARGUMENT, "null argument");
  return guarded([&] { params->p.set(key, value); });
}

sl_status sl_params_load_file(sl_params* params, const char* path) {
  if (!params || !path) return fail(SL_INVALID_ARGUMENT, "null argument");
  return guarded([&] { params->p.load_file(path); });
}

sl_status sl_run(const sl_params* params, sl_certificate** out) {
  if (!params || !out) return fail(SL_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto cert = std::make_unique<sl_certificate>();
    cert->c = semilinear::run(params->p, log_message);
    *out = cert.release();
  });
}

void sl_certificate_destroy(sl_certificate* cert) { delete cert; }

sl_status sl_certificate_verdict(const sl_certificate* cert, sl_verdict* out) {
  if (!cert || !out) return fail(SL_INVALID_ARGUMENT, "null argument");
  switch (cert->c.verdict) {
    case semilinear::Verdict::Proved: *out = SL_VERDICT_PROVED; break;
    case semilinear::Verdict::ProvedOnSubinterval: *out = SL_VERDICT_PROVED_ON_SUBINTERVAL; break;
    case semilinear::Verdict::Failed: *out = SL_VERDICT_FAILED; break;
  }
  g_last_error.clear();
  return SL_OK;
}

sl_status sl_certificate_json(const sl_certificate* cert, char** out) {
  if (!cert || !out) return fail(SL_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(semilinear::certificate_json(cert->c)); });
}

sl_status sl_certificate_summary(const sl_certificate* cert, char** out) {
  if (!cert || !out) return fail(SL_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(semilinear::summary_text(cert->c)); });
}

sl_status sl_certificate_emit(const sl_certificate* cert, const char* out_dir, const char* formats) {
  if (!cert || !out_dir || !formats) return fail(SL_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<std::string> list;
    std::stringstream ss(formats);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) list.push_back(item);
    semilinear::emit(cert->c, out_dir, list);
  });
}

void sl_string_free(char* s) { std::free(s); }

sl_status sl_constants_get(double sigma, sl_constants* out) {
  if (!out) return fail(SL_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& k = semilinear::constants();
    const auto pack = semilinear::make_embedding_pack(semilinear::Interval(sigma));
    *out = sl_constants{to_c(k.pi), to_c(k.lambda1), to_c(k.lambda2), to_c(pack.gamma),
                        to_c(pack.C4), to_c(pack.C6), to_c(pack.C2)};
  });
}

sl_status sl_solve(const sl_params* params, double lambda, sl_expansion** out) {
  if (!params || !out) return fail(SL_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto& p = params->p;
    p.validate();
    semilinear::ContinuationConfig cc;
    cc.N = p.N;
    cc.alpha0 = p.alpha0;
    cc.newton_tol = p.newton_tol;
    cc.max_iters = p.max_iters;
    cc.lambda_start = p.lambda_bar.value();
    const auto grid = p.grid();
    for (auto it = grid.rbegin(); it != grid.rend(); ++it)
      if (it->value() > lambda) cc.lambda_grid.push_back(it->value());
    cc.lambda_grid.push_back(lambda);
    const auto sols = semilinear::continuation(cc, [](double lam, const semilinear::NewtonResult& r) {
      std::ostringstream os;
      os << "newton lambda=" << lam << " iterations=" << r.update_norms.size() << " residual=" << r.residual;
      log_message(os.str());
    });
    *out = new sl_expansion{sols.at(lambda)};
  });
}

sl_status sl_expansion_read_csv(const char* path, sl_expansion** out) {
  if (!path || !out) return fail(SL_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new sl_expansion{semilinear::read_csv(path)}; });
}

sl_status sl_expansion_write_csv(const sl_expansion* e, const char* path) {
  if (!e || !path) return fail(SL_INVALID_ARGUMENT, "null argument");
  return guarded([&] { semilinear::write_csv(path, e->w); });
}

void sl_expansion_destroy(sl_expansion* e) { delete e; }

int sl_expansion_max_index(const sl_expansion* e) { return e ? e->w.max_index() : 0; }

double sl_expansion_coeff(const sl_expansion* e, int i, int j) { return e ? e->w.coeff(i, j) : 0.0; }

sl_status sl_expansion_check(const sl_params* params, const sl_expansion* e, const char* lambda,
                             sl_check_report* out) {
  if (!params || !e || !lambda || !out) return fail(SL_INVALID_ARGUMENT, "null argument");
  *out = sl_check_report{};
  return guarded([&] {
    using namespace semilinear;
    const Interval lam = Decimal::parse(lambda).interval();
    const Interval sigma = params->p.sigma.interval();
    const IntervalExpansion w = to_interval(e->w);
    out->positive = positivity_check(w) ? 1 : 0;
    out->center = to_c(eval_center(w));
    if (!out->positive) throw VerificationFailure("positivity of the expansion is not verified");
    const DefectBounds d = defect_bounds(w, lam, sigma);
    out->delta_hat = to_c(d.delta_hat);
    out->delta = to_c(d.delta);
    WeightFunction wf;
    wf.sigma = sigma;
    wf.lambda = lam;
    wf.omega = w;
    wf.c0 = WeightFunction::c0_from(w);
    const GridEigenResult ge = grid_eigen_bounds(wf, params->p.eigen);
    out->kappa1 = {ge.kappa[0].lower, ge.kappa[0].upper};
    out->kappa2 = {ge.kappa[1].lower, ge.kappa[1].upper};
    out->K = to_c(ge.K);
  });
}

}  // extern "C"
