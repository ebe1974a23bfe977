#pragma once

#include <string>

#include "json.hpp"
#include "sharpbounds/enclosure.hpp"
#include "sharpbounds/interval.hpp"
#include "sharpbounds/mm.hpp"
#include "sharpbounds/oracle.hpp"

namespace sharpbounds {

/// All serialization is byte-deterministic: floats print with 17 significant
/// digits, infinities as the strings "inf" / "-inf".

std::string format_double(double v);  // "%.17g"

nlohmann::json to_json(const Interval& iv);
Interval interval_from_json(const nlohmann::json& j);

nlohmann::json to_json(const std::string& function_spec, int k, const EnclosureReport& rep);
TaylorEnclosure enclosure_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ValidityReport& rep);
nlohmann::json to_json(const RatioSeries& s);

/// CSV: comma-separated, header row, LF line endings.
std::string ratio_series_csv(const RatioSeries& s);
std::string mm_trace_csv(const MMTrace& t);

/// Serialize any json value with deterministic float formatting.
std::string dump_json(const nlohmann::json& j);

}  // namespace sharpbounds
