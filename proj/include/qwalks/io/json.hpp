#pragma once

#include "qwalks/enumerate/count_table.hpp"
#include "qwalks/estimate.hpp"
#include "qwalks/growth.hpp"
#include "qwalks/kernel.hpp"
#include "qwalks/walkgroup.hpp"

#include <json.hpp>

#include <ostream>

namespace qwalks::io {

using nlohmann::json;

inline json to_json(const QuadraticSurd& s) {
  return {{"a", s.a().get_str()}, {"b", s.b().get_str()}, {"d", s.d().get_si()}};
}

inline QuadraticSurd surd_from_json(const json& j) {
  return {parse_rational(j.at("a").get<std::string>()), parse_rational(j.at("b").get<std::string>()),
          BigInt(j.at("d").get<long>())};
}

inline json to_json(const LaurentPoly2& p) {
  json a = json::array();
  for (const auto& [e, c] : p.terms()) a.push_back({{"i", e.i}, {"j", e.j}, {"c", c.get_str()}});
  return a;
}

inline LaurentPoly2 poly_from_json(const json& a) {
  LaurentPoly2 p;
  for (const auto& t : a) p.add_term({t.at("i").get<int>(), t.at("j").get<int>()}, parse_rational(t.at("c").get<std::string>()));
  return p;
}

inline json to_json(const RationalFunction2& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}, {"text", to_string(f)}}; }

inline json to_json(const Layer& l) {
  json cells = json::array();
  for (const auto& c : l.nonzero()) cells.push_back({{"i", c.i}, {"j", c.j}, {"c", c.c.get_str()}});
  return {{"n", l.n}, {"cells", cells}};
}

inline json to_json(const CountTable& t) {
  json layers = json::array();
  for (const auto& l : t.layers) layers.push_back(to_json(l));
  return {{"steps", t.steps.to_string()}, {"region", std::string(to_string(t.region))}, {"layers", layers}};
}

inline json to_json(const kernel::MeanderAsymptotics& a) {
  return {{"regime", std::string(kernel::to_string(a.regime))},
          {"base", to_json(a.growth_base)},
          {"exponent", a.polynomial_exponent.get_str()},
          {"constant", a.leading_constant}};
}

inline json to_json(const growth::BoundLink& l) {
  return {{"kind", std::string(growth::to_string(l.kind))},
          {"value", to_json(l.value)},
          {"source", l.source},
          {"note", l.note}};
}

inline json to_json(const growth::GrowthCertificate& c) {
  json chain = json::array();
  for (const auto& l : c.lower.chain) chain.push_back(to_json(l));
  return {{"model", c.model.to_string()},
          {"registry_index", c.registry_index},
          {"beta", to_json(c.beta)},
          {"beta_text", to_string(c.beta)},
          {"drift_sign", std::string(to_string(c.drift_sign))},
          {"upper",
           {{"kind", std::string(growth::to_string(c.upper.kind))}, {"value", to_json(c.upper.value)}, {"note", c.upper.note}}},
          {"lower", {{"value", to_json(c.lower.value)}, {"chain", chain}}},
          {"verified", c.verified}};
}

inline json to_json(const group::Orbit& o) {
  json el = json::array();
  for (const auto& e : o.elements)
    el.push_back({{"x", to_json(e.map.x_image)}, {"y", to_json(e.map.y_image)}, {"sign", e.sign}});
  return {{"status", o.finite() ? "Finite" : "ExceededBound"}, {"order", o.order}, {"elements", el}};
}

inline json to_json(const estimate::RegistryComparison& c) {
  return {{"model", c.model},
          {"beta_exact", to_json(c.beta_exact)},
          {"beta_hat", c.beta_hat},
          {"alpha_ref", c.alpha_ref.get_str()},
          {"alpha_hat", c.alpha_hat},
          {"rel_err_beta", c.rel_err_beta}};
}

/// CSV "n,count".
inline void write_csv(std::ostream& os, const Series& s) {
  os << "n,count\n";
  for (std::size_t n = 0; n < s.size(); ++n) os << n << ',' << s[n].get_str() << '\n';
}

} // namespace qwalks::io
