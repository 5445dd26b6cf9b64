#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pipeline/pipeline.hpp"
#include "pipeline/records.hpp"

namespace semilinear {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string num(double x) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string half_lo(const ProofCertificate& c, const HalfIntervalCertificate& h) {
  return h.right_half ? midpoint(c.grid[h.subinterval - 1], c.grid[h.subinterval]).str()
                      : c.grid[h.subinterval - 1].str();
}

std::string half_hi(const ProofCertificate& c, const HalfIntervalCertificate& h) {
  return h.right_half ? c.grid[h.subinterval].str()
                      : midpoint(c.grid[h.subinterval - 1], c.grid[h.subinterval]).str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

std::string certificate_json(const ProofCertificate& cert) {
  json j;
  j["schema_version"] = 1;
  j["fingerprint"] = build_fingerprint();
  j["params"] = params_json(cert.params);
  json grid = json::array();
  for (const auto& g : cert.grid) grid.push_back(g.str());
  j["grid"] = grid;

  json checks = json::array();
  for (const auto& c : cert.self_checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["self_checks"] = checks;

  const EmbeddingPack& e = cert.embedding;
  j["constants"] = {{"sigma", interval_json(e.sigma)}, {"gamma", interval_json(e.gamma)},
                    {"C1", interval_json(e.C1)},       {"C2", interval_json(e.C2)},
                    {"C4", interval_json(e.C4)},       {"C6", interval_json(e.C6)},
                    {"C0_hat", interval_json(cert.sup_pack.C0_hat)},
                    {"C1_hat", interval_json(cert.sup_pack.C1_hat)},
                    {"C2_hat", interval_json(cert.sup_pack.C2_hat)}};

  json points = json::array();
  for (const auto& r : cert.points) {
    json p;
    p["lambda"] = r.lambda.str();
    p["hash"] = r.hash;
    p["newton"] = {{"update_norms", r.newton_updates}, {"residual", r.newton_residual}};
    if (!r.error.empty()) {
      p["error"] = {{"module", r.error_module}, {"message", r.error}};
    } else if (!r.kappa.empty()) {
      p["verified"] = verified_json(r);
    }
    points.push_back(p);
  }
  j["grid_points"] = points;

  if (cert.branch) {
    json halves = json::array();
    for (const auto& h : cert.branch->certificates) {
      json c;
      c["lambda_lo"] = half_lo(cert, h);
      c["lambda_hi"] = half_hi(cert, h);
      c["subinterval"] = h.subinterval;
      c["right_half"] = h.right_half;
      c["valid"] = h.valid();
      c["checks"] = {{"defect", h.check_defect},
                     {"contraction", h.check_contraction},
                     {"eta", h.check_eta},
                     {"nontrivial", h.check_nontrivial}};
      if (!h.failure.empty()) c["failure"] = h.failure;
      for (const auto& [name, x] : std::initializer_list<std::pair<const char*, const Interval*>>{
               {"delta", &h.delta}, {"K", &h.K}, {"l4_bound", &h.l4_bound}, {"alpha", &h.alpha},
               {"alpha_bar", &h.alpha_bar}, {"eta", &h.eta}, {"h01_lower", &h.h01_lower}, {"rho", &h.rho},
               {"tau", &h.tau}, {"mu", &h.mu}, {"nu", &h.nu}, {"zeta", &h.zeta}})
        c[name] = interval_json(*x);
      halves.push_back(c);
    }
    j["half_intervals"] = halves;
    j["eta"] = interval_json(cert.branch->eta);
  }

  const EndgameRecord& g = cert.endgame;
  json eg;
  eg["evaluated"] = g.evaluated;
  if (g.evaluated) {
    eg["alpha"] = interval_json(g.alpha);
    eg["delta_hat"] = interval_json(g.delta_hat);
    eg["l6_norm"] = interval_json(g.l6_norm);
    eg["omega_center"] = interval_json(g.center);
    eg["sup_err"] = interval_json(g.sup_err);
    eg["sup_bound"] = interval_json(g.sup_bound);
    eg["threshold"] = interval_json(g.threshold);
    eg["passed"] = g.passed;
    if (!g.note.empty()) eg["note"] = g.note;
  }
  j["endgame"] = eg;

  json v;
  v["status"] = verdict_name(cert.verdict);
  if (cert.verdict != Verdict::Proved) v.update({{"module", cert.module}, {"reason", cert.reason}, {"location", cert.location}});
  j["verdict"] = v;
  return j.dump(1) + "\n";
}

std::string eigenvalue_csv(const ProofCertificate& cert) {
  std::ostringstream os;
  os << "lambda,kappa1_lo,kappa1_hi,kappa2_lo,kappa2_hi\n";
  for (const auto& r : cert.points) {
    if (r.kappa.size() < 2) continue;
    os << r.lambda.str() << ',' << num(r.kappa[0].lower) << ',' << num(r.kappa[0].upper) << ','
       << num(r.kappa[1].lower) << ',' << num(r.kappa[1].upper) << '\n';
  }
  return os.str();
}

std::string half_interval_csv(const ProofCertificate& cert) {
  std::ostringstream os;
  os << "lambda_lo,lambda_hi,delta,K,alpha\n";
  if (!cert.branch) return os.str();
  for (const auto& h : cert.branch->certificates) {
    os << half_lo(cert, h) << ',' << half_hi(cert, h) << ',' << num(h.delta.hi()) << ',';
    if (h.failure.rfind("K: ", 0) == 0) {
      os << ",\n";
      continue;
    }
    os << num(h.K.hi()) << ',' << (h.alpha.hi() > 0.0 ? num(h.alpha.hi()) : "") << '\n';
  }
  return os.str();
}

std::string summary_text(const ProofCertificate& cert) {
  std::ostringstream os;
  const std::string lb = cert.params.lambda_bar.str();
  os << "verdict: " << verdict_name(cert.verdict) << '\n';
  switch (cert.verdict) {
    case Verdict::Proved:
      os << "uniqueness certified for lambda in [0, " << lb << "] and, by the small-solution bound"
         << " sqrt(lambda_bar / 2), on [" << lb << ", lambda_1)\n";
      break;
    case Verdict::ProvedOnSubinterval:
      os << "branch of nondegenerate positive solutions certified for lambda in [0, " << lb << "]\n"
         << "uniqueness NOT certified: " << cert.reason << " (" << cert.location << ")\n";
      break;
    case Verdict::Failed:
      os << "failed in " << cert.module << " at " << cert.location << '\n' << "reason: " << cert.reason << '\n';
      break;
  }
  os << "grid points: " << cert.grid.size() << ", sigma = " << cert.params.sigma.str() << ", N = " << cert.params.N
     << '\n';
  if (cert.branch) {
    std::size_t valid = 0;
    double amax = 0.0;
    for (const auto& h : cert.branch->certificates) {
      if (h.valid()) ++valid;
      amax = std::max(amax, h.alpha.hi());
    }
    os << "half-intervals: " << valid << " of " << cert.branch->certificates.size() << " valid, max alpha = "
       << num(amax) << ", eta = " << num(cert.branch->eta.lo()) << '\n';
  }
  if (cert.endgame.evaluated)
    os << "endgame: omega(1/2,1/2) + sup error <= " << num(cert.endgame.sup_bound.hi()) << ", threshold sqrt("
       << lb << "/2) >= " << num(cert.endgame.threshold.lo()) << (cert.endgame.passed ? " (passed)" : " (not passed)")
       << '\n';
  os << "build: " << build_fingerprint() << '\n';
  return os.str();
}

void emit(const ProofCertificate& cert, const std::string& out_dir, const std::vector<std::string>& formats) {
  const fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  for (const auto& f : formats) {
    if (f == "json") {
      write_file(dir / "certificate.json", certificate_json(cert));
    } else if (f == "csv") {
      write_file(dir / "eigenvalues.csv", eigenvalue_csv(cert));
      write_file(dir / "half_intervals.csv", half_interval_csv(cert));
    } else if (f == "text") {
      write_file(dir / "summary.txt", summary_text(cert));
    } else {
      throw InvalidArgument("unknown emit format '" + f + "' (expected json, csv, text)");
    }
  }
}

}  // namespace semilinear
