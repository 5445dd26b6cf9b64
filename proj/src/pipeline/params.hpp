#pragma once

#include <string>
#include <vector>

#include "eigenbounds/eigen.hpp"
#include "interval/interval.hpp"

namespace semilinear {

// Exact decimal value num/den, den > 0. Grid values, sigma and lambda_bar are
// kept in this form so their interval enclosures do not depend on how a
// decimal string rounds to double.
struct Decimal {
  long long num = 0;
  long long den = 1;

  static Decimal parse(const std::string& text);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  Interval interval() const { return rational(num, den); }
  // Shortest decimal form, e.g. "18.5" or "0.05".
  std::string str() const;

  friend bool operator==(const Decimal& a, const Decimal& b) { return a.num * b.den == b.num * a.den; }
  friend bool operator<(const Decimal& a, const Decimal& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(const Decimal& a, const Decimal& b) { return !(b < a); }
};

// Midpoint of two decimals, exact.
Decimal midpoint(const Decimal& a, const Decimal& b);

// Test hook that corrupts one stage so the soundness gate can be exercised.
enum class Fault {
  None,
  Constants,     // gamma inflated past 1/5
  Eigen,         // kappa_1 enclosure at the first grid point pushed to 1
  Defect,        // grid-point defect at lambda = 0 inflated by 1e4
  Sextic,        // sextic engine self-check perturbed
  SingleMode,    // single-mode defect self-check perturbed
  BaseSpectrum,  // base-problem eigenvalue self-check perturbed
  Endgame,       // sup error at lambda_bar increased by the threshold
};

Fault parse_fault(const std::string& name);
std::string fault_name(Fault f);

struct ProblemParams {
  Decimal sigma{1, 1};
  Decimal lambda_bar{185, 10};
  Decimal grid_step{2, 10};
  int N = 16;
  double alpha0 = 4.0;
  double newton_tol = 1e-13;
  int max_iters = 60;
  EigenConfig eigen;
  int workers = 1;
  bool resume = false;
  std::string out_dir;  // empty: nothing written to disk
  Fault fault = Fault::None;

  // key = value setter shared by the config file, the CLI and the C API.
  void set(const std::string& key, const std::string& value);
  // Reads TOML-like "key = value" lines; '#' starts a comment.
  void load_file(const std::string& path);
  void validate() const;

  // 0, h/2, 3h/2, ... up to lambda_bar; lambda_bar is appended when the
  // spacing does not land on it.
  std::vector<Decimal> grid() const;
};

}  // namespace semilinear
