#pragma once

#include <json.hpp>

#include "rainbow/certify.hpp"
#include "rainbow/counting.hpp"
#include "rainbow/simulate.hpp"

namespace rainbow {

// Exact values serialize as decimal strings; rationals as {"num","den"}.
// Floating point appears only in simulation statistics.

std::string to_decimal(const BigInt& value);
nlohmann::json to_json(const Rational& value);
nlohmann::json to_json(const CountResult& result);
nlohmann::json to_json(const Certificate& certificate);
nlohmann::json to_json(const AuditReport& report);
nlohmann::json to_json(const RecurrenceReport& report);
nlohmann::json to_json(const SimulationReport& report);

} // namespace rainbow
