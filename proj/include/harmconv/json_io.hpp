#pragma once

#include <string>

#include <json.hpp>

#include "harmconv/criteria.hpp"
#include "harmconv/harmonic_map.hpp"
#include "harmconv/verify.hpp"

namespace harmconv {

using json = nlohmann::json;

json to_json(Cx z);
Cx cx_from_json(const json& j);

json to_json(const PowerSeries& p); // [[re, im], ...]
json to_json(const Polynomial& p);
json to_json(const RationalMap& r);
json to_json(const HarmonicMap& f);
json to_json(const CriterionReport& rep);
json to_json(const VerificationReport& rep);

PowerSeries power_series_from_json(const json& j);
Polynomial polynomial_from_json(const json& j);
RationalMap rational_map_from_json(const json& j);
HarmonicMap harmonic_map_from_json(const json& j);

void write_json_file(const std::string& path, const json& j);
json read_json_file(const std::string& path);

} // namespace harmconv
