#include "knotmm/json_io.hpp"

#include <stdexcept>

namespace knotmm {

json to_json_value(const Q& x) { return q_to_string(x); }

json to_json_value(const Poly& p) {
  json a = json::array();
  for (auto& c : p.coeffs()) a.push_back(q_to_string(c));
  return a;
}

json to_json_value(const RatFunc& r) {
  return json{{"num", to_json_value(r.num())}, {"den", to_json_value(r.den())}};
}

Q q_from_json(const json& j) {
  if (j.is_string()) return q_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Q(j.get<long>());
  throw std::invalid_argument("expected exact rational, got " + j.dump());
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected coefficient array");
  std::vector<Q> c;
  for (auto& x : j) c.push_back(q_from_json(x));
  return Poly(std::move(c));
}

RatFunc ratfunc_from_json(const json& j) {
  if (j.is_object()) return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
  return RatFunc(q_from_json(j));
}

namespace {
void check_shape(const json& j) {
  if (!j.contains("truncation_order") || !j.contains("coeffs"))
    throw std::invalid_argument("series JSON needs truncation_order and coeffs");
  if (j.at("coeffs").size() != j.at("truncation_order").get<size_t>() + 1)
    throw std::invalid_argument("series JSON: coeffs length must be truncation_order + 1");
}
}  // namespace

QSeries qseries_from_json(const json& j) {
  check_shape(j);
  std::vector<Q> c;
  for (auto& x : j.at("coeffs")) c.push_back(q_from_json(x));
  return QSeries(j.at("truncation_order").get<int>(), std::move(c));
}

TauSeries tauseries_from_json(const json& j) {
  check_shape(j);
  std::vector<Poly> c;
  for (auto& x : j.at("coeffs")) c.push_back(x.is_array() ? poly_from_json(x) : Poly(q_from_json(x)));
  return TauSeries(j.at("truncation_order").get<int>(), std::move(c));
}

}  // namespace knotmm
