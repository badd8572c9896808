#pragma once

#include "casca/decision/clients.hpp"
#include "casca/decision/step_log.hpp"

#include <optional>

namespace casca::decision {

struct ControlLoopConfig;

struct GdsConfig {
    std::string slo;
    std::string param;
    double delta = 1.0;  // maximum change of the parameter per step
    int lambda = 1;      // +1 if raising the parameter raises the SLO, -1 otherwise
    bool is_carbon = false;
};

void validate(const GdsConfig& config);

/// One greedy decision on already-read values. With is_carbon the SLO value
/// is first scaled by `intensity`. Above s_max the parameter moves by
/// -lambda*delta, below s_min by +lambda*delta, otherwise it stays; the
/// result is clamped into [p_min, p_max].
double gds_decide(const GdsConfig& config, double s, double s_min, double s_max, double p, double p_min, double p_max,
                  double intensity = 1.0);

struct GdsStep {
    double s_min = 0.0, s_max = 0.0;
    std::optional<double> s;  // as read, before any carbon scaling
    double p_min = 0.0, p_max = 0.0, p = 0.0;
    std::optional<double> applied;  // nullopt when the step was skipped
};

/// One full time-step: describe, read, decide, apply, wait. A step whose SLO
/// has no data applies nothing.
GdsStep gds_step(const GdsConfig& config, LoopEnv& env, double tau_s);

/// State columns s0_min,s0_max,s0,p0_min,p0_max,p0; action column action0.
StepLog gds_run(const GdsConfig& gds, const ControlLoopConfig& config, LoopEnv& env);

}  // namespace casca::decision
