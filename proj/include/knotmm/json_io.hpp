#pragma once

#include <json.hpp>

#include "knotmm/series.hpp"

namespace knotmm {

using json = nlohmann::json;

json to_json_value(const Q& x);
json to_json_value(const Poly& p);  // ascending coefficient array
json to_json_value(const RatFunc& r);  // {"num": [...], "den": [...]}
Q q_from_json(const json& j);  // accepts "p/q" strings and integers
Poly poly_from_json(const json& j);
RatFunc ratfunc_from_json(const json& j);

template <class C>
json series_to_json(const Series<C>& s) {
  json coeffs = json::array();
  for (auto& c : s.coeffs()) coeffs.push_back(to_json_value(c));
  return json{{"truncation_order", s.order()}, {"coeffs", coeffs}};
}

QSeries qseries_from_json(const json& j);
TauSeries tauseries_from_json(const json& j);

}  // namespace knotmm
