#include "thetaq/serialize.hpp"

#include <stdexcept>

#include "thetaq/intmath.hpp"

namespace thetaq {

using nlohmann::json;

json cyc_to_json(const CycNumber& x) {
  json coords = json::array();
  for (const Rational& c : x.coords()) coords.push_back(c.get_str());
  return json{{"conductor", x.conductor()}, {"coords", coords}};
}

CycNumber cyc_from_json(const json& j) {
  if (!j.is_object() || !j.contains("conductor") || !j.contains("coords"))
    throw std::invalid_argument("cyc_from_json: need conductor and coords");
  int64_t L = j.at("conductor").get<int64_t>();
  std::vector<Rational> coords;
  for (const auto& entry : j.at("coords"))
    coords.push_back(rational_from_string(entry.get<std::string>()));
  return CycNumber::from_coords(L, std::move(coords));
}

json series_to_json(const QSeries& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back(json::array({m, cyc_to_json(c)}));
  return json{{"denom", f.denom()},
              {"prec", f.prec()},
              {"conductor", f.conductor()},
              {"terms", terms}};
}

QSeries series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("denom") || !j.contains("prec") ||
      !j.contains("terms"))
    throw std::invalid_argument("series_from_json: need denom, prec, terms");
  QSeries out(j.at("denom").get<int64_t>(), j.at("prec").get<int64_t>());
  for (const auto& entry : j.at("terms")) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::invalid_argument("series_from_json: bad term entry");
    out.set_coeff(entry.at(0).get<int64_t>(), cyc_from_json(entry.at(1)));
  }
  return out;
}

}  // namespace thetaq
