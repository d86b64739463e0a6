#include "wpvol/json_io.hpp"

#include <stdexcept>

namespace wpvol {

Json to_json(const Series& s) {
  Json coeffs = Json::array();
  for (const Rational& c : s.coeffs()) coeffs.push_back(to_string(c));
  Json j;
  j["order"] = s.order();
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json to_json(const VolumeRecord& rec) {
  Json j;
  j["g"] = rec.g;
  j["n"] = rec.n;
  j["dim"] = rec.dim;
  j["V"] = to_string(rec.V);
  j["v"] = to_string(rec.v);
  j["pi_power"] = rec.pi_power();
  return j;
}

Json to_json(const CheckReport& report) {
  Json j;
  j["check"] = report.check;
  j["g"] = report.g;
  j["n"] = report.n;
  j["pass"] = report.pass;
  if (report.first_mismatch) {
    Json m;
    m["power"] = report.first_mismatch->power;
    m["lhs"] = to_string(report.first_mismatch->lhs);
    m["rhs"] = to_string(report.first_mismatch->rhs);
    j["first_mismatch"] = std::move(m);
  } else {
    j["first_mismatch"] = nullptr;
  }
  return j;
}

Json to_json(const GrowthComparison::Entry& entry, const Decimal& predicted) {
  const GrowthFit& fit = entry.fit;
  Json j;
  j["g"] = fit.g;
  j["C_est"] = format_decimal(fit.C_est);
  j["exponent_est"] = format_decimal(fit.exponent_est);
  j["predicted_C"] = format_decimal(predicted);
  j["rel_dev"] = format_decimal(entry.rel_dev);
  j["n_range"] = Json::array({fit.n_min, fit.n_max});
  j["C_fixed_exponent"] = format_decimal(fit.C_fixed_exponent);
  j["residual"] = format_decimal(fit.residual);
  return j;
}

Series series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw std::invalid_argument("series JSON needs \"order\" and \"coeffs\"");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(parse_rational(c.get<std::string>()));
  Series s(std::move(coeffs));
  if (s.order() != j["order"].get<int>()) throw std::invalid_argument("series JSON order does not match coeffs");
  return s;
}

}  // namespace wpvol
