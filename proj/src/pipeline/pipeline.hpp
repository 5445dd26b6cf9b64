#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "branch/branch.hpp"
#include "defect/defect.hpp"
#include "endgame/endgame.hpp"
#include "pipeline/params.hpp"

namespace semilinear {

struct SelfCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Verified data of one grid point. `error` is set when a stage failed, in
// which case the later fields are unset.
struct GridRecord {
  Decimal lambda;
  std::string hash;  // content hash of the parameter slice and omega
  std::vector<double> newton_updates;
  double newton_residual = 0.0;
  bool positive = false;
  Interval center;  // omega(1/2, 1/2)
  Interval delta_hat;
  Interval delta;
  std::vector<EigenEnclosure> kappa;
  Interval K;
  double rho = 0.0;
  std::vector<HomotopyStep> homotopy;
  Interval l4_norm, l6_norm, h01_norm, sup_norm;
  std::string error;
  std::string error_module;
};

struct EndgameRecord {
  bool evaluated = false;
  Interval alpha;
  Interval delta_hat;
  Interval l6_norm;
  Interval sup_err;
  Interval center;
  Interval sup_bound;
  Interval threshold;
  bool passed = false;
  std::string note;
};

enum class Verdict { Proved, ProvedOnSubinterval, Failed };
std::string verdict_name(Verdict v);

struct ProofCertificate {
  ProblemParams params;
  std::vector<Decimal> grid;
  std::vector<SelfCheck> self_checks;
  EmbeddingPack embedding;
  SupNormPack sup_pack;
  std::vector<GridRecord> points;
  std::optional<BranchResult> branch;
  EndgameRecord endgame;
  Verdict verdict = Verdict::Failed;
  std::string reason;
  std::string module;
  std::string location;
};

using PipelineLog = std::function<void(const std::string&)>;

// Continuation, per-grid-point verification on `workers` threads, branch
// certificates, endgame and verdict. Module errors end in a FAILED verdict
// with the partial certificate rather than an exception; invalid parameters
// throw InvalidArgument.
ProofCertificate run(const ProblemParams& params, const PipelineLog& log = {});

// Writes certificate.json, eigenvalues.csv and half_intervals.csv, summary.txt for the
// formats listed ("json", "csv", "text").
void emit(const ProofCertificate& cert, const std::string& out_dir, const std::vector<std::string>& formats);

std::string certificate_json(const ProofCertificate& cert);
std::string eigenvalue_csv(const ProofCertificate& cert);
std::string half_interval_csv(const ProofCertificate& cert);
std::string summary_text(const ProofCertificate& cert);

// Toolchain and rounding policy, recorded in the certificate.
std::string build_fingerprint();

// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& data);

}  // namespace semilinear
