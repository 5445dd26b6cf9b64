#include "pipeline/params.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "interval/constants.hpp"

namespace semilinear {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& key, const std::string& v) {
  int out = 0;
  const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
  if (r.ec != std::errc() || r.ptr != v.data() + v.size())
    throw InvalidArgument("expected an integer for " + key + ", got '" + v + "'");
  return out;
}

double parse_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
  if (r.ec != std::errc() || r.ptr != v.data() + v.size())
    throw InvalidArgument("expected a number for " + key + ", got '" + v + "'");
  return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw InvalidArgument("expected true or false for " + key + ", got '" + v + "'");
}

Decimal reduce(long long num, long long den) {
  const long long g = std::gcd(num, den);
  return g > 1 ? Decimal{num / g, den / g} : Decimal{num, den};
}

}  // namespace

Decimal Decimal::parse(const std::string& text) {
  const std::string t = trim(text);
  std::size_t k = 0;
  bool neg = false;
  if (k < t.size() && (t[k] == '-' || t[k] == '+')) neg = t[k++] == '-';
  long long num = 0;
  long long den = 1;
  bool digits = false;
  bool frac = false;
  for (; k < t.size(); ++k) {
    const char c = t[k];
    if (c == '.' && !frac) {
      frac = true;
      continue;
    }
    if (c < '0' || c > '9') throw InvalidArgument("not a decimal number: '" + text + "'");
    if (num > 100000000000000LL || den > 100000000000000LL)
      throw InvalidArgument("too many digits in '" + text + "'");
    num = num * 10 + (c - '0');
    if (frac) den *= 10;
    digits = true;
  }
  if (!digits) throw InvalidArgument("not a decimal number: '" + text + "'");
  return reduce(neg ? -num : num, den);
}

std::string Decimal::str() const {
  long long scale = 1;
  int places = 0;
  while (scale % den != 0 && places < 18) {
    scale *= 10;
    ++places;
  }
  std::ostringstream os;
  if (scale % den != 0) {
    os << num << '/' << den;
    return os.str();
  }
  const long long n = num * (scale / den);
  const long long a = n < 0 ? -n : n;
  if (n < 0) os << '-';
  os << a / scale;
  if (places > 0) {
    std::string f = std::to_string(a % scale);
    f.insert(0, static_cast<std::size_t>(places) - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    if (!f.empty()) os << '.' << f;
  }
  return os.str();
}

Decimal midpoint(const Decimal& a, const Decimal& b) {
  const long long l = std::lcm(a.den, b.den);
  const long long s = a.num * (l / a.den) + b.num * (l / b.den);
  return s % 2 == 0 ? reduce(s / 2, l) : reduce(s, 2 * l);
}

Fault parse_fault(const std::string& name) {
  static const std::pair<const char*, Fault> table[] = {
      {"none", Fault::None},         {"constants", Fault::Constants},   {"eigen", Fault::Eigen},
      {"defect", Fault::Defect},     {"sextic", Fault::Sextic},         {"single-mode", Fault::SingleMode},
      {"base-spectrum", Fault::BaseSpectrum}, {"endgame", Fault::Endgame},
  };
  for (const auto& [n, f] : table)
    if (name == n) return f;
  throw InvalidArgument("unknown fault '" + name + "'");
}

std::string fault_name(Fault f) {
  switch (f) {
    case Fault::None: return "none";
    case Fault::Constants: return "constants";
    case Fault::Eigen: return "eigen";
    case Fault::Defect: return "defect";
    case Fault::Sextic: return "sextic";
    case Fault::SingleMode: return "single-mode";
    case Fault::BaseSpectrum: return "base-spectrum";
    case Fault::Endgame: return "endgame";
  }
  return "none";
}

void ProblemParams::set(const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (key == "sigma") sigma = Decimal::parse(v);
  else if (key == "lambda_bar") lambda_bar = Decimal::parse(v);
  else if (key == "grid_step") grid_step = Decimal::parse(v);
  else if (key == "N") N = parse_int(key, v);
  else if (key == "alpha0") alpha0 = parse_double(key, v);
  else if (key == "newton_tol") newton_tol = parse_double(key, v);
  else if (key == "max_iters") max_iters = parse_int(key, v);
  else if (key == "basis_max") eigen.basis_max = parse_int(key, v);
  else if (key == "m_max") eigen.m_max = parse_int(key, v);
  else if (key == "base_count") eigen.base_count = parse_int(key, v);
  else if (key == "min_step") eigen.min_step = parse_double(key, v);
  else if (key == "ritz_margin") eigen.ritz_margin = parse_double(key, v);
  else if (key == "workers") workers = parse_int(key, v);
  else if (key == "resume") resume = parse_bool(key, v);
  else if (key == "out_dir") out_dir = v;
  else if (key == "fault") fault = parse_fault(v);
  else throw InvalidArgument("unknown parameter '" + key + "'");
}

void ProblemParams::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw IoError(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    try {
      set(trim(line.substr(0, eq)), value);
    } catch (const InvalidArgument& e) {
      throw InvalidArgument(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

void ProblemParams::validate() const {
  const DomainConstants& k = constants();
  if (!(sigma.num > 0)) throw InvalidArgument("sigma must be positive");
  if (!(sigma.interval().hi() <= k.pi_sq.lo())) throw InvalidArgument("sigma must not exceed pi^2");
  if (!(lambda_bar.num > 0)) throw InvalidArgument("lambda_bar must be positive");
  if (!(lambda_bar.interval().hi() < k.lambda1.lo())) throw InvalidArgument("lambda_bar must be below 2 pi^2");
  if (!(grid_step.num > 0)) throw InvalidArgument("grid_step must be positive");
  if (N < 1) throw InvalidArgument("N must be at least 1");
  if (workers < 1) throw InvalidArgument("workers must be at least 1");
  if (eigen.basis_max < 3) throw InvalidArgument("basis_max must be at least 3");
  if (eigen.m_max < 2) throw InvalidArgument("m_max must be at least 2");
  if (!(eigen.min_step > 0.0 && eigen.min_step < 1.0)) throw InvalidArgument("min_step must lie in (0, 1)");
  if (!(eigen.ritz_margin >= 0.0)) throw InvalidArgument("ritz_margin must be nonnegative");
}

std::vector<Decimal> ProblemParams::grid() const {
  const long long den = std::lcm(2 * grid_step.den, lambda_bar.den);
  const long long h = grid_step.num * (den / grid_step.den);
  const long long top = lambda_bar.num * (den / lambda_bar.den);
  std::vector<Decimal> g{Decimal{0, 1}};
  for (long long x = h / 2; x < top; x += h) g.push_back(reduce(x, den));
  g.push_back(lambda_bar);
  return g;
}

}  // namespace semilinear
