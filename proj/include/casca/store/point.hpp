#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

namespace casca::store {

using TagSet = std::map<std::string, std::string>;

struct TelemetryPoint {
    std::string measurement;
    TagSet tags;
    std::map<std::string, double> fields;
    std::int64_t ts = 0;

    bool operator==(const TelemetryPoint&) const = default;
};

/// Throws ValidationError for an empty measurement, empty fields or a non-finite value.
void validate(const TelemetryPoint& point);

/// Journal line form: {"m":..., "tg":{...}, "f":{...}, "ts":...}.
nlohmann::json to_journal(const TelemetryPoint& point);
TelemetryPoint from_journal(const nlohmann::json& line);

/// Canonical identity of a series: measurement plus sorted tag set.
std::string series_key(const std::string& measurement, const TagSet& tags);

}  // namespace casca::store
