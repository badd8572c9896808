#pragma once

#include "casca/store/query.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace casca::api {

/// An SLO as configured: fulfilled while its query value lies in [s_min, s_max].
struct SloSpec {
    std::string id;
    std::string description;
    std::string query;
    store::QuerySpec parsed;
    std::string unit;
    double s_min = 0.0;
    double s_max = 0.0;
};

enum class ValueType { integer, floating };

std::string_view to_string(ValueType type);

struct SettingSpec {
    std::string id;
    std::string description;
    ValueType value_type = ValueType::integer;
    double p_min = 0.0;
    double p_max = 0.0;
};

struct AliasEntry {
    std::string public_id;
    std::string description;
};

/// internal name -> public name and redacted description. Must be injective.
struct AliasMap {
    std::map<std::string, AliasEntry> entries;

    bool empty() const { return entries.empty(); }
};

struct ApiConfig {
    std::vector<SloSpec> slos;
    /// When absent the settings come from the controller's own listing.
    std::optional<std::vector<SettingSpec>> settings;
    AliasMap aliases;
};

/// File schema: {"slos":[{id,description,query,unit,min,max}],
///               "settings":[{id,description,type,min,max}], "aliases":{...}}.
ApiConfig parse_api_config(const nlohmann::json& doc);
ApiConfig load_api_config(const std::filesystem::path& path);

/// Validated SLO list of a configuration file.
std::vector<SloSpec> parse_slos(const std::filesystem::path& path);

/// Accepts {"aliases": {...}} or the bare map {"FPS": {"id": ..., "description": ...}}.
AliasMap parse_alias_map(const nlohmann::json& doc);
AliasMap load_alias_map(const std::filesystem::path& path);

/// Renames mapped specs and replaces their descriptions; everything else is
/// untouched. Throws ValidationError when a public id collides with another id.
std::vector<SloSpec> apply_alias(const std::vector<SloSpec>& specs, const AliasMap& aliases);
std::vector<SettingSpec> apply_alias(const std::vector<SettingSpec>& specs, const AliasMap& aliases);

nlohmann::json public_json(const SloSpec& spec);
nlohmann::json public_json(const SettingSpec& spec);
SettingSpec setting_from_json(const nlohmann::json& doc);

}  // namespace casca::api
