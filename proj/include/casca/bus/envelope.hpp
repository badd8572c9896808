#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace casca::bus {

/// One message on the bus. Wire form: {"t": topic, "p": payload, "ts": ms}.
struct Envelope {
    std::string topic;
    nlohmann::json payload;
    std::int64_t ts = 0;

    bool operator==(const Envelope&) const = default;
};

/// Throws ValidationError unless the topic is non-empty, whitespace-free,
/// without empty segments and without wildcard characters.
void validate_topic(std::string_view topic);

/// Throws ValidationError for an invalid topic or a negative timestamp.
void validate(const Envelope& envelope);

nlohmann::json to_wire(const Envelope& envelope);

/// Parses and validates one wire object.
Envelope from_wire(const nlohmann::json& wire);

}  // namespace casca::bus
