#include "pipeline/records.hpp"

namespace semilinear {

using nlohmann::json;

json interval_json(const Interval& x) { return json::array({x.lo(), x.hi()}); }

Interval interval_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw IoError("malformed interval in cached record");
  return Interval(j[0].get<double>(), j[1].get<double>());
}

json verified_json(const GridRecord& r) {
  json j;
  j["positive"] = r.positive;
  j["center"] = interval_json(r.center);
  j["delta_hat"] = interval_json(r.delta_hat);
  j["delta"] = interval_json(r.delta);
  json kap = json::array();
  for (const auto& e : r.kappa) kap.push_back(json::array({e.lower, e.upper}));
  j["kappa"] = kap;
  j["K"] = interval_json(r.K);
  j["rho"] = r.rho;
  json steps = json::array();
  for (const auto& s : r.homotopy) steps.push_back({{"s", s.s}, {"m", s.m}, {"rho", s.rho}});
  j["homotopy"] = steps;
  j["l4_norm"] = interval_json(r.l4_norm);
  j["l6_norm"] = interval_json(r.l6_norm);
  j["h01_norm"] = interval_json(r.h01_norm);
  j["sup_norm"] = interval_json(r.sup_norm);
  return j;
}

void verified_from_json(const json& j, GridRecord& r) {
  try {
    r.positive = j.at("positive").get<bool>();
    r.center = interval_from_json(j.at("center"));
    r.delta_hat = interval_from_json(j.at("delta_hat"));
    r.delta = interval_from_json(j.at("delta"));
    r.kappa.clear();
    int idx = 1;
    for (const auto& k : j.at("kappa")) r.kappa.push_back({idx++, k.at(0).get<double>(), k.at(1).get<double>()});
    r.K = interval_from_json(j.at("K"));
    r.rho = j.at("rho").get<double>();
    r.homotopy.clear();
    for (const auto& s : j.at("homotopy"))
      r.homotopy.push_back({s.at("s").get<double>(), s.at("m").get<int>(), s.at("rho").get<double>()});
    r.l4_norm = interval_from_json(j.at("l4_norm"));
    r.l6_norm = interval_from_json(j.at("l6_norm"));
    r.h01_norm = interval_from_json(j.at("h01_norm"));
    r.sup_norm = interval_from_json(j.at("sup_norm"));
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed cached record: ") + e.what());
  }
}

json params_json(const ProblemParams& p) {
  json j;
  j["sigma"] = p.sigma.str();
  j["p"] = 3;
  j["lambda_bar"] = p.lambda_bar.str();
  j["grid_step"] = p.grid_step.str();
  j["N"] = p.N;
  j["alpha0"] = p.alpha0;
  j["newton_tol"] = p.newton_tol;
  j["max_iters"] = p.max_iters;
  j["eigen"] = {{"basis_max", p.eigen.basis_max},
                {"m_max", p.eigen.m_max},
                {"base_count", p.eigen.base_count},
                {"min_step", p.eigen.min_step},
                {"ritz_margin", p.eigen.ritz_margin}};
  j["fault"] = fault_name(p.fault);
  return j;
}

}  // namespace semilinear
