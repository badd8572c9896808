#pragma once

#include "casca/common/net.hpp"

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace casca::hook {

enum class InterpreterKind { json };

struct FieldMapping {
    std::string path;   // JSON pointer into the payload
    std::string field;  // stored field name
};

struct TagMapping {
    enum class Source { payload_path, topic_segment, constant };
    Source source = Source::constant;
    std::string tag;
    std::string path;      // payload_path
    std::size_t segment = 0;  // topic_segment, 0-based
    std::string value;     // constant
};

struct TimestampSource {
    bool from_envelope = true;
    std::string path;  // payload_path form
};

/// Declarative description of one hook. File keys: bus, topic, interpreter,
/// measurement, fields, tags, timestamp, drop_unmapped.
struct HookConfig {
    net::Endpoint bus = net::parse_endpoint("127.0.0.1:7811");
    std::string topic;
    InterpreterKind interpreter = InterpreterKind::json;
    std::string measurement;
    std::vector<FieldMapping> fields;
    std::vector<TagMapping> tags;
    TimestampSource timestamp;
    bool drop_unmapped = true;
};

/// Throws ValidationError naming the offending key.
HookConfig parse_hook_config(const nlohmann::json& doc);

/// Throws NotFoundError for a missing file, ValidationError otherwise.
HookConfig load_hook_config(const std::filesystem::path& path);

nlohmann::json to_json(const HookConfig& config);

}  // namespace casca::hook
