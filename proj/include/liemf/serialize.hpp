#pragma once

#include <nlohmann/json.hpp>

#include "liemf/irrep_sum.hpp"

namespace liemf {

using Json = nlohmann::json;

// Weights travel as arrays of doubled labels (so half-integral entries stay
// integers); the convention is part of the structured-output schema.
inline Json to_json(const Weight& w) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < w.size(); ++i) a.push_back(w[i]);
  return a;
}

inline Weight weight_from_json(const Json& a) {
  Weight w(static_cast<Eigen::Index>(a.size()));
  for (size_t i = 0; i < a.size(); ++i) w[static_cast<Eigen::Index>(i)] = a[i].get<Coord>();
  return w;
}

inline Json to_json(const IrrepSum& s) {
  Json terms = Json::array();
  for (auto& [w, m] : s.terms) {
    Json t;
    t["hw"] = to_json(w);
    t["mult"] = m;
    terms.push_back(std::move(t));
  }
  Json out;
  out["family"] = to_string(s.sys->family());
  out["rank"] = s.sys->rank();
  out["terms"] = std::move(terms);
  return out;
}

inline IrrepSum irrep_sum_from_json(const Json& j) {
  auto sys = get_system(family_from_char(j.at("family").get<std::string>().at(0)),
                        j.at("rank").get<int>());
  IrrepSum s = IrrepSum::zero(sys);
  for (auto& t : j.at("terms")) s.add(weight_from_json(t.at("hw")), t.at("mult").get<Mult>());
  return s;
}

} // namespace liemf
