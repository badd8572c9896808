#pragma once

#include "casca/decision/config.hpp"
#include "casca/workload/model.hpp"
#include "casca/workload/reporters.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

namespace casca::orchestrator {

/// virtual: sim time advances only when the decision loop waits, and reporter
/// ticks inside the wait are delivered synchronously. accelerated: sim time
/// runs at clock_multiplier x wall time with live reporter threads.
enum class ClockMode { virtual_time, accelerated };

struct ScenarioConfig {
    std::uint64_t seed = 1;
    ClockMode clock = ClockMode::virtual_time;
    double clock_multiplier = 60.0;
    /// Sim seconds of decision loop; sets max_steps = duration / tau when > 0.
    double duration_s = 0.0;
    std::int64_t start_ms = 1704067200000;  // 2024-01-01T00:00:00Z
    workload::WorkloadModel model;
    std::vector<workload::ReporterConfig> reporters;
    std::vector<std::filesystem::path> hooks;
    std::filesystem::path slos;
    std::optional<std::filesystem::path> aliases;
    decision::DecisionConfig decision;
    std::filesystem::path emma_sources;
    std::filesystem::path emma_locations;
    int warmup_steps = 100;
    std::filesystem::path output_dir = "run";
};

/// Relative paths are resolved against `base_dir`. Referenced files must exist.
ScenarioConfig parse_scenario(const nlohmann::json& doc, const std::filesystem::path& base_dir);
ScenarioConfig load_scenario(const std::filesystem::path& path);
void validate(const ScenarioConfig& config);

/// Resolved form, as written to scenario.json in the run directory.
nlohmann::json to_json(const ScenarioConfig& config);

}  // namespace casca::orchestrator
