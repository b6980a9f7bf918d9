// JSON wire formats:
//   CycNumber: {"conductor": L, "coords": ["p/q", ...]}  (power basis)
//   QSeries:   {"denom": D, "prec": P, "conductor": L,
//               "terms": [[m, CycNumber], ...]}           (keys ascending)
#pragma once

#include <json.hpp>

#include "thetaq/qseries.hpp"

namespace thetaq {

nlohmann::json cyc_to_json(const CycNumber& x);
CycNumber cyc_from_json(const nlohmann::json& j);

nlohmann::json series_to_json(const QSeries& f);
QSeries series_from_json(const nlohmann::json& j);

}  // namespace thetaq
