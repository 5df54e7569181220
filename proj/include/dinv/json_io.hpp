#ifndef DINV_JSON_IO_HPP
#define DINV_JSON_IO_HPP

// JSON and CSV encodings. Rationals always travel as "p/q" strings; inputs
// additionally accept JSON integers.

#include "dinv/discretization.hpp"
#include "dinv/identities.hpp"
#include "dinv/subspace.hpp"
#include "dinv/text.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace dinv {

using Json = nlohmann::ordered_json;

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>()), 10));
  throw std::invalid_argument("expected a rational as a \"p/q\" string or an integer, got " + j.dump());
}

inline Json rationals_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

inline std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

inline Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [exp, c] : p.terms()) terms.push_back(Json{{"exp", exp}, {"coef", to_string(c)}});
  return Json{{"dim", p.dim()}, {"terms", std::move(terms)}};
}

inline Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("terms")) {
    throw std::invalid_argument("polynomial JSON needs \"dim\" and \"terms\"");
  }
  Polynomial p(j.at("dim").get<std::size_t>());
  for (const auto& t : j.at("terms")) p.add_term(t.at("exp").get<Exponent>(), rational_from_json(t.at("coef")));
  return p;
}

inline Json to_json(const BasisSequence& basis) {
  Json out = Json::array();
  for (const auto& p : basis.elements) out.push_back(to_json(p));
  return out;
}

inline BasisSequence basis_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("basis JSON must be an array of polynomials");
  BasisSequence basis;
  for (const auto& p : j) basis.elements.push_back(polynomial_from_json(p));
  return basis;
}

inline Json to_json(const ParamTable& params) {
  Json a = Json::object();
  for (const auto& [key, value] : params.entries()) {
    a[std::to_string(key.first) + "," + std::to_string(key.second)] = to_string(value);
  }
  return Json{{"d", params.d()}, {"n", params.n()}, {"a", std::move(a)}};
}

inline ParamTable params_from_json(const Json& j) {
  ParamTable params(j.at("d").get<std::size_t>(), j.at("n").get<unsigned>());
  if (j.contains("a")) {
    for (const auto& [key, value] : j.at("a").items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("parameter key must look like \"i,j\": " + key);
      const unsigned i = static_cast<unsigned>(std::stoul(key.substr(0, comma)));
      const std::size_t var = std::stoul(key.substr(comma + 1));
      params.set(i, var, rational_from_json(value));
    }
  }
  return params;
}

inline Json to_json(const GeneralSpec& spec) {
  Json c = Json::array();
  for (const auto& row : spec.c) c.push_back(rationals_to_json(row));
  return Json{{"n", spec.n}, {"d", spec.d}, {"b", spec.b}, {"c", std::move(c)}};
}

inline GeneralSpec general_spec_from_json(const Json& j) {
  GeneralSpec spec;
  spec.n = j.at("n").get<unsigned>();
  spec.d = j.at("d").get<std::size_t>();
  spec.b = j.at("b").get<std::vector<unsigned>>();
  for (const auto& row : j.at("c")) spec.c.push_back(rationals_from_json(row));
  spec.validate();
  return spec;
}

using AnySpec = std::variant<ParamTable, GeneralSpec>;

/// A spec file carrying "a" (or no "b") is a ParamTable; one carrying "b" is
/// a GeneralSpec.
inline AnySpec spec_from_json(const Json& j) {
  if (j.contains("b")) return general_spec_from_json(j);
  return params_from_json(j);
}

inline Json to_json(const ExpansionReport& r) {
  return Json{{"m", r.m},
              {"low_coeffs", rationals_to_json(r.low_coeffs)},
              {"lead", to_string(r.lead)},
              {"target", to_string(r.target)},
              {"pass", r.pass()}};
}

inline Json to_json(const SymbolicPointSet& pts) {
  const std::vector<std::string> h{"h"};
  Json points = Json::array();
  for (const auto& z : pts.points) {
    Json coords = Json::array();
    for (const auto& c : z) coords.push_back(render(c, h));
    points.push_back(std::move(coords));
  }
  return Json{{"scheme", to_string(pts.scheme)}, {"base", rationals_to_json(pts.base)}, {"points", std::move(points)}};
}

inline Json numeric_points_to_json(const SymbolicPointSet& pts, const Rational& h) {
  Json points = Json::array();
  for (const auto& z : evaluate_points(pts, h)) points.push_back(rationals_to_json(z));
  return Json{{"scheme", to_string(pts.scheme)},
              {"base", rationals_to_json(pts.base)},
              {"h", to_string(h)},
              {"points", std::move(points)}};
}

inline Json to_json(const ClosureReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back(Json{{"k", x.k}, {"var", x.var}});
  return Json{{"checked", r.checked}, {"violations", std::move(v)}, {"pass", r.ok()}};
}

inline Json to_json(const LemmaReport& r) {
  return Json{{"lemma", r.name}, {"ranges", r.ranges}, {"checked", r.checked}, {"failures", r.failures},
              {"pass", r.pass()}};
}

/// Header `h,approx,exact,abs_err,est_order`; est_order is empty when absent.
inline std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  const auto num = [](double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  std::ostringstream out;
  out << "h,approx,exact,abs_err,est_order\n";
  for (const auto& r : rows) {
    out << num(r.h) << ',' << num(r.approx) << ',' << num(r.exact) << ',' << num(r.abs_err) << ',';
    if (r.est_order) out << num(*r.est_order);
    out << '\n';
  }
  return out.str();
}

}  // namespace dinv

#endif  // DINV_JSON_IO_HPP
