#pragma once

#include <string>

#include "json.hpp" // vendored nlohmann/json

#include "latsym/expansions.hpp"

namespace latsym {

// {"vars": [...], "num": [{"exp": {"x1": 2}, "coef": "3/2"}, ...], "den": [...]}
nlohmann::json ring_elem_to_json(const RingElem& f);

nlohmann::json report_to_json(const VerificationReport& report);

nlohmann::json table_to_json(const ExpansionTable& table);

} // namespace latsym
