#pragma once

#include "casca/common/net.hpp"
#include "casca/decision/gds.hpp"
#include "casca/decision/policy.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace casca::decision {

struct ControlLoopConfig {
    double tau_s = 60.0;
    net::Endpoint slo_api = net::parse_endpoint("127.0.0.1:7812");
    net::Endpoint control_api = net::parse_endpoint("127.0.0.1:7812");
    net::Endpoint emma_api = net::parse_endpoint("127.0.0.1:7813");
    std::uint64_t seed = 1;
    int max_steps = 100;
    /// Location used for carbon-intensity lookups.
    std::string country = "AT";
    std::string granularity = "hourly";
    /// SLO whose value is the service's power draw in W, used for C(t).
    std::string power_slo;
};

void validate(const ControlLoopConfig& config);

struct RldsConfig {
    std::vector<std::string> params;
    std::vector<std::string> slos;
    PolicyConfig policy;
    std::filesystem::path checkpoint;  // empty: no checkpoints
};

enum class DecisionKind { rds, gds, rlds };

std::string_view to_string(DecisionKind kind);
DecisionKind decision_kind_from_string(std::string_view name);

/// A decision system's configuration file: ControlLoopConfig keys at the top
/// level plus an "rds", "gds" or "rlds" object.
struct DecisionConfig {
    ControlLoopConfig loop;
    DecisionKind kind = DecisionKind::gds;
    std::string rds_param;
    GdsConfig gds;
    RldsConfig rlds;
    /// Sim seconds per wall second when waiting in real time.
    double clock_multiplier = 1.0;
};

ControlLoopConfig parse_loop_config(const nlohmann::json& doc);
DecisionConfig parse_decision_config(const nlohmann::json& doc, DecisionKind kind);
nlohmann::json to_json(const ControlLoopConfig& config);

}  // namespace casca::decision
