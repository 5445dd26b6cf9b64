// Command-line front end. Uses only the C interface of libsemilinear.

#include <semilinear/semilinear.h>

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

// Exit codes: 0 proved, 1 failed verdict, 2 usage error, 3 runtime error,
// 4 proved on a subinterval only.
constexpr int kExitFailedVerdict = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;
constexpr int kExitSubinterval = 4;

int report(sl_status s, const char* what) {
  std::fprintf(stderr, "error: %s: %s: %s\n", what, sl_status_string(s), sl_last_error());
  return s == SL_INVALID_ARGUMENT ? kExitUsage : kExitRuntime;
}

void log_to_stderr(int, const char* message, void*) { std::fprintf(stderr, "%s\n", message); }

struct ParamsHandle {
  sl_params* p = nullptr;
  ~ParamsHandle() { sl_params_destroy(p); }
};

struct Overrides {
  std::string config;
  std::string lambda_bar, grid_step, sigma, N, workers, out_dir, fault;
  bool resume = false;
};

void add_param_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "TOML-like key = value file");
  cmd->add_option("--lambda-bar", o.lambda_bar, "upper end of the certified branch (default 18.5)");
  cmd->add_option("--grid-step", o.grid_step, "grid spacing (default 0.2)");
  cmd->add_option("--N", o.N, "largest sine index of the approximation (default 16)");
  cmd->add_option("--sigma", o.sigma, "shift in the H^1_0 inner product (default 1)");
}

int build_params(const Overrides& o, ParamsHandle& h) {
  sl_status s = sl_params_create(&h.p);
  if (s != SL_OK) return report(s, "params");
  if (!o.config.empty() && (s = sl_params_load_file(h.p, o.config.c_str())) != SL_OK) return report(s, "config");
  const std::pair<const char*, const std::string*> kv[] = {
      {"lambda_bar", &o.lambda_bar}, {"grid_step", &o.grid_step}, {"sigma", &o.sigma}, {"N", &o.N},
      {"workers", &o.workers},       {"out_dir", &o.out_dir},     {"fault", &o.fault}};
  for (const auto& [key, val] : kv)
    if (!val->empty() && (s = sl_params_set(h.p, key, val->c_str())) != SL_OK) return report(s, key);
  if (o.resume && (s = sl_params_set(h.p, "resume", "true")) != SL_OK) return report(s, "resume");
  return 0;
}

void print_interval(const char* name, sl_interval x) { std::printf("%-10s [%.17g, %.17g]\n", name, x.lo, x.hi); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verified uniqueness of positive solutions of -Lap u = lambda u + u^3 on the unit square"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "suppress progress messages");

  Overrides run_o;
  std::string emit_list = "json,csv,text";
  auto* run = app.add_subcommand("run", "verify the solution branch and write the certificate");
  add_param_flags(run, run_o);
  run->add_option("--workers", run_o.workers, "threads for grid-point verification");
  run->add_flag("--resume", run_o.resume, "reuse cached grid-point results whose inputs match");
  run->add_option("--out-dir", run_o.out_dir, "output directory (default ./out)");
  run->add_option("--emit", emit_list, "comma-separated subset of json,csv,text");
  run->add_option("--inject-fault", run_o.fault, "corrupt one stage (soundness testing)")->group("");

  Overrides solve_o;
  double solve_lambda = 0.0;
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "compute an approximate solution by continuation");
  add_param_flags(solve, solve_o);
  solve->add_option("--lambda", solve_lambda, "target lambda")->required();
  solve->add_option("-o,--output", solve_out, "CSV output (i,j,coeff)")->required();

  Overrides check_o;
  std::string check_file, check_lambda;
  auto* check = app.add_subcommand("check", "verify positivity, defect and eigenvalue bounds of a CSV expansion");
  add_param_flags(check, check_o);
  check->add_option("file", check_file, "CSV expansion")->required();
  check->add_option("--lambda", check_lambda, "lambda as a decimal, e.g. 18.5")->required();

  double const_sigma = 1.0;
  auto* consts = app.add_subcommand("constants", "print verified constants");
  consts->add_option("--sigma", const_sigma, "shift in the H^1_0 inner product");

  CLI11_PARSE(app, argc, argv);
  if (!quiet) sl_set_log_callback(log_to_stderr, nullptr);

  if (*run) {
    if (run_o.out_dir.empty()) run_o.out_dir = "out";
    ParamsHandle h;
    if (int rc = build_params(run_o, h)) return rc;
    sl_certificate* cert = nullptr;
    sl_status s = sl_run(h.p, &cert);
    if (s != SL_OK) return report(s, "run");
    s = sl_certificate_emit(cert, run_o.out_dir.c_str(), emit_list.c_str());
    if (s != SL_OK) {
      sl_certificate_destroy(cert);
      return report(s, "emit");
    }
    char* text = nullptr;
    if (sl_certificate_summary(cert, &text) == SL_OK) {
      std::fputs(text, stdout);
      sl_string_free(text);
    }
    sl_verdict v = SL_VERDICT_FAILED;
    sl_certificate_verdict(cert, &v);
    sl_certificate_destroy(cert);
    if (v == SL_VERDICT_PROVED) return 0;
    return v == SL_VERDICT_PROVED_ON_SUBINTERVAL ? kExitSubinterval : kExitFailedVerdict;
  }

  if (*solve) {
    ParamsHandle h;
    if (int rc = build_params(solve_o, h)) return rc;
    sl_expansion* e = nullptr;
    sl_status s = sl_solve(h.p, solve_lambda, &e);
    if (s != SL_OK) return report(s, "solve");
    s = sl_expansion_write_csv(e, solve_out.c_str());
    std::printf("alpha_11 = %.17g\n", sl_expansion_coeff(e, 1, 1));
    sl_expansion_destroy(e);
    if (s != SL_OK) return report(s, "write");
    return 0;
  }

  if (*check) {
    ParamsHandle h;
    if (int rc = build_params(check_o, h)) return rc;
    sl_expansion* e = nullptr;
    sl_status s = sl_expansion_read_csv(check_file.c_str(), &e);
    if (s != SL_OK) return report(s, "read");
    sl_check_report r;
    s = sl_expansion_check(h.p, e, check_lambda.c_str(), &r);
    sl_expansion_destroy(e);
    std::printf("positive   %s\n", r.positive ? "verified" : "not verified");
    print_interval("center", r.center);
    if (s != SL_OK) return report(s, "check");
    print_interval("delta_hat", r.delta_hat);
    print_interval("delta", r.delta);
    print_interval("kappa1", r.kappa1);
    print_interval("kappa2", r.kappa2);
    print_interval("K", r.K);
    return 0;
  }

  if (*consts) {
    sl_constants c;
    sl_status s = sl_constants_get(const_sigma, &c);
    if (s != SL_OK) return report(s, "constants");
    print_interval("pi", c.pi);
    print_interval("lambda1", c.lambda1);
    print_interval("lambda2", c.lambda2);
    print_interval("gamma", c.gamma);
    print_interval("C2", c.C2);
    print_interval("C4", c.C4);
    print_interval("C6", c.C6);
    return 0;
  }
  return 0;
}
