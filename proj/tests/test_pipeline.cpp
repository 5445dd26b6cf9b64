#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "pipeline/pipeline.hpp"

using namespace semilinear;
namespace fs = std::filesystem;

namespace {

// Short branch with a reduced eigen basis so the tests stay fast.
ProblemParams small_params(const std::string& lambda_bar) {
  ProblemParams p;
  p.lambda_bar = Decimal::parse(lambda_bar);
  p.eigen.basis_max = 15;
  p.eigen.m_max = 10;
  return p;
}

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("semilinear_test_" + name);
  fs::remove_all(d);
  return d;
}

}  // namespace

TEST_CASE("decimals") {
  CHECK(Decimal::parse("18.5").str() == "18.5");
  CHECK(Decimal::parse("0.10").str() == "0.1");
  CHECK(Decimal::parse("3").str() == "3");
  CHECK(Decimal::parse("-0.25").str() == "-0.25");
  CHECK(midpoint(Decimal::parse("0"), Decimal::parse("0.1")).str() == "0.05");
  CHECK(midpoint(Decimal::parse("18.3"), Decimal::parse("18.5")).str() == "18.4");
  CHECK(Decimal::parse("0.1").interval().contains(0.1));
  CHECK(Decimal::parse("0.5") == Decimal{1, 2});
  CHECK_THROWS_AS(Decimal::parse("1e3"), InvalidArgument);
  CHECK_THROWS_AS(Decimal::parse(""), InvalidArgument);
}

TEST_CASE("default grid") {
  const ProblemParams p;
  const auto g = p.grid();
  REQUIRE(g.size() == 94);
  CHECK(g[0].str() == "0");
  CHECK(g[1].str() == "0.1");
  CHECK(g[2].str() == "0.3");
  CHECK(g.back().str() == "18.5");
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i - 1] < g[i]);

  ProblemParams q;
  q.lambda_bar = Decimal::parse("5");
  const auto h = q.grid();
  CHECK(h.back().str() == "5");
  CHECK(h[h.size() - 2].str() == "4.9");
}

TEST_CASE("parameter parsing") {
  ProblemParams p;
  p.set("lambda_bar", "15.7");
  p.set("N", "12");
  p.set("resume", "true");
  p.set("fault", "endgame");
  CHECK(p.lambda_bar.str() == "15.7");
  CHECK(p.N == 12);
  CHECK(p.resume);
  CHECK(p.fault == Fault::Endgame);
  CHECK_THROWS_AS(p.set("nonsense", "1"), InvalidArgument);
  CHECK_THROWS_AS(p.set("N", "x"), InvalidArgument);
  CHECK_THROWS_AS(p.set("fault", "everything"), InvalidArgument);

  const fs::path dir = scratch("config");
  fs::create_directories(dir);
  {
    std::ofstream f(dir / "run.toml");
    f << "# comment\nsigma = 1\nlambda_bar = \"10.1\"  # trailing\n\nworkers = 3\n";
  }
  ProblemParams c;
  c.load_file((dir / "run.toml").string());
  CHECK(c.lambda_bar.str() == "10.1");
  CHECK(c.workers == 3);
  {
    std::ofstream f(dir / "bad.toml");
    f << "sigma 1\n";
  }
  CHECK_THROWS_AS(c.load_file((dir / "bad.toml").string()), IoError);
  CHECK_THROWS_AS(c.load_file((dir / "missing.toml").string()), IoError);

  ProblemParams v;
  v.lambda_bar = Decimal::parse("20");
  CHECK_THROWS_AS(v.validate(), InvalidArgument);
  v = ProblemParams{};
  v.sigma = Decimal::parse("0");
  CHECK_THROWS_AS(v.validate(), InvalidArgument);
}

TEST_CASE("short branch: certified, endgame not passed") {
  ProblemParams p = small_params("2.1");
  const ProofCertificate c = run(p);
  CHECK(c.verdict == Verdict::ProvedOnSubinterval);
  REQUIRE(c.branch);
  CHECK(c.branch->all_valid);
  CHECK(c.branch->certificates.size() == 2 * (c.grid.size() - 1));
  CHECK(c.endgame.evaluated);
  CHECK_FALSE(c.endgame.passed);
  const std::string text = summary_text(c);
  CHECK(text.find("PROVED_ON_SUBINTERVAL") != std::string::npos);
  CHECK(text.find("uniqueness NOT certified") != std::string::npos);
  const std::string t2 = half_interval_csv(c);
  CHECK(t2.rfind("lambda_lo,lambda_hi,delta,K,alpha\n0,0.05,", 0) == 0);
  CHECK(eigenvalue_csv(c).rfind("lambda,kappa1_lo,kappa1_hi,kappa2_lo,kappa2_hi\n0,", 0) == 0);
}

TEST_CASE("serial and parallel runs give identical certificates") {
  ProblemParams p = small_params("1.1");
  p.workers = 1;
  const std::string a = certificate_json(run(p));
  p.workers = 8;
  const std::string b = certificate_json(run(p));
  CHECK(a == b);
}

TEST_CASE("resumed run equals the cold run") {
  const fs::path dir = scratch("resume");
  ProblemParams p = small_params("0.7");
  p.out_dir = dir.string();
  const std::string cold = certificate_json(run(p));
  CHECK(fs::exists(dir / "omega" / "omega_0.3.csv"));
  std::size_t cached = 0;
  for (const auto& e : fs::directory_iterator(dir / "cache")) cached += e.is_regular_file();
  CHECK(cached == 5);
  p.resume = true;
  std::vector<std::string> log;
  const std::string warm = certificate_json(run(p, [&](const std::string& s) { log.push_back(s); }));
  CHECK(cold == warm);
  std::size_t reused = 0;
  for (const auto& s : log) reused += s.find("reused from cache") != std::string::npos;
  CHECK(reused == 5);

  emit(run(p), dir.string(), {"json", "csv", "text"});
  CHECK(fs::exists(dir / "certificate.json"));
  CHECK(fs::exists(dir / "eigenvalues.csv"));
  CHECK(fs::exists(dir / "half_intervals.csv"));
  CHECK(fs::exists(dir / "summary.txt"));
  CHECK_THROWS_AS(emit(run(p), dir.string(), {"xml"}), InvalidArgument);
}

TEST_CASE("coarse ansatz fails with a defect diagnosis") {
  ProblemParams p = small_params("2.1");
  p.N = 4;
  const ProofCertificate c = run(p);
  CHECK(c.verdict == Verdict::Failed);
  CHECK(c.reason.find("defect too large") != std::string::npos);
  CHECK(c.location.find("half-interval") != std::string::npos);
  CHECK(summary_text(c).find(c.location) != std::string::npos);
}

TEST_CASE("injected faults block a positive verdict") {
  for (const Fault f : {Fault::Constants, Fault::Sextic, Fault::SingleMode, Fault::BaseSpectrum, Fault::Eigen,
                        Fault::Defect}) {
    ProblemParams p = small_params("0.3");
    p.fault = f;
    const ProofCertificate c = run(p);
    INFO(fault_name(f));
    CHECK(c.verdict == Verdict::Failed);
  }
}

TEST_CASE("certificate JSON layout") {
  ProblemParams p = small_params("0.3");
  const std::string j = certificate_json(run(p));
  CHECK(j.find("\"schema_version\": 1") != std::string::npos);
  CHECK(j.find("\"half_intervals\"") != std::string::npos);
  CHECK(j.find("\"fingerprint\"") != std::string::npos);
  CHECK(j.find("\"status\": \"PROVED_ON_SUBINTERVAL\"") != std::string::npos);
}
