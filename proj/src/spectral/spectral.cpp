#include "spectral/spectral.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "interval/constants.hpp"

namespace semilinear {

IntervalExpansion to_interval(const FloatExpansion& a) {
  IntervalExpansion r(a.max_index());
  for (std::size_t k = 0; k < a.size(); ++k) r.data()[k] = Interval(a.data()[k]);
  return r;
}

FloatExpansion to_float(const IntervalExpansion& a) {
  FloatExpansion r(a.max_index());
  for (std::size_t k = 0; k < a.size(); ++k) r.data()[k] = a.data()[k].mid();
  return r;
}

double eval_float(const FloatExpansion& w, double x, double y) {
  const double pi = std::numbers::pi;
  std::vector<double> sx(w.modes()), sy(w.modes());
  for (int p = 0; p < w.modes(); ++p) {
    sx[p] = std::sin((2 * p + 1) * pi * x);
    sy[p] = std::sin((2 * p + 1) * pi * y);
  }
  double s = 0.0;
  for (int p = 0; p < w.modes(); ++p)
    for (int q = 0; q < w.modes(); ++q) s += w.at(p, q) * sx[p] * sy[q];
  return s;
}

Interval eval_center(const IntervalExpansion& w) {
  Interval s(0.0);
  for (int p = 0; p < w.modes(); ++p)
    for (int q = 0; q < w.modes(); ++q) s += (p + q) % 2 == 0 ? w.at(p, q) : -w.at(p, q);
  return s;
}

bool positivity_check(const IntervalExpansion& w) {
  if (w.modes() == 0) return false;
  // sin(i pi x) / sin(pi x) = 1 + 2 sum_{k<=(i-1)/2} cos(2 k pi x) lies in [2 - i, i].
  auto range = [](int i) { return Interval(2.0 - i, static_cast<double>(i)); };
  Interval s(0.0);
  for (int p = 0; p < w.modes(); ++p)
    for (int q = 0; q < w.modes(); ++q) s += w.at(p, q) * (range(2 * p + 1) * range(2 * q + 1));
  return s.certainly_positive();
}

QuadraticNorms quadratic_norms(const IntervalExpansion& w, const Interval& sigma) {
  const Interval& pi_sq = constants().pi_sq;
  Interval l2(0.0), h1(0.0);
  for (int p = 0; p < w.modes(); ++p)
    for (int q = 0; q < w.modes(); ++q) {
      const double i = 2 * p + 1;
      const double j = 2 * q + 1;
      const Interval a2 = sqr(w.at(p, q));
      l2 += a2;
      h1 += a2 * (Interval(i * i + j * j) * pi_sq + sigma);
    }
  return {Interval(0.25) * l2, Interval(0.25) * h1};
}

Interval sup_bound(const IntervalExpansion& w) {
  Interval s(0.0);
  for (const Interval& a : w.data()) s += abs(a);
  return Interval(s.hi());
}

Interval quartic_sum(const IntervalExpansion& w, const IndexWeight& weight) {
  const auto s = signed_table(w);
  const auto ww = convolve(s, s);
  PartialSumTable<Interval> first;
  if (weight) {
    IntervalExpansion wa(w.max_index());
    for (int p = 0; p < w.modes(); ++p)
      for (int q = 0; q < w.modes(); ++q) wa.at(p, q) = weight(2 * p + 1, 2 * q + 1) * w.at(p, q);
    first = convolve(signed_table(wa), s);
  } else {
    first = ww;
  }
  return Interval(table_scale(4)) * pair_sum(first, ww);
}

Interval sextic_sum(const IntervalExpansion& w) {
  const auto s = signed_table(w);
  const auto t = convolve(convolve(s, s), s);
  return Interval(table_scale(6)) * pair_sum(t, t);
}

std::string to_csv(const FloatExpansion& w) {
  std::ostringstream os;
  os << "i,j,coeff\n";
  char buf[64];
  for (int p = 0; p < w.modes(); ++p)
    for (int q = 0; q < w.modes(); ++q) {
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, w.at(p, q));
      os << 2 * p + 1 << ',' << 2 * q + 1 << ',' << std::string(buf, end) << '\n';
    }
  return os.str();
}

void write_csv(const std::string& path, const FloatExpansion& w) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << to_csv(w);
  if (!f) throw IoError("write failed: " + path);
}

FloatExpansion parse_csv(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw IoError(origin + ": empty coefficient file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "i,j,coeff") throw IoError(origin + ": expected header i,j,coeff");
  struct Row {
    int i, j;
    double c;
  };
  std::vector<Row> rows;
  int maxi = 1;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Row r{};
    const char* b = line.data();
    const char* e = b + line.size();
    auto bad = [&] { return IoError(origin + ":" + std::to_string(lineno) + ": malformed row"); };
    auto res = std::from_chars(b, e, r.i);
    if (res.ec != std::errc() || res.ptr == e || *res.ptr != ',') throw bad();
    res = std::from_chars(res.ptr + 1, e, r.j);
    if (res.ec != std::errc() || res.ptr == e || *res.ptr != ',') throw bad();
    res = std::from_chars(res.ptr + 1, e, r.c);
    if (res.ec != std::errc() || res.ptr != e) throw bad();
    if (r.i < 1 || r.j < 1 || r.i % 2 == 0 || r.j % 2 == 0)
      throw InvalidArgument(origin + ":" + std::to_string(lineno) +
                            ": only positive odd indices are allowed");
    if (!std::isfinite(r.c)) throw InvalidArgument(origin + ": non-finite coefficient");
    maxi = std::max({maxi, r.i, r.j});
    rows.push_back(r);
  }
  FloatExpansion w(maxi);
  for (const Row& r : rows) w.set(r.i, r.j, r.c);
  return w;
}

FloatExpansion read_csv(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_csv(ss.str(), path);
}

}  // namespace semilinear
