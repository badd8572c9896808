#pragma once

#include "casca/decision/clients.hpp"
#include "casca/decision/policy.hpp"
#include "casca/decision/step_log.hpp"

#include <optional>

namespace casca::decision {

struct ControlLoopConfig;
struct RldsConfig;

struct RldsResult {
    Policy policy;
    /// Columns p<i>_min,p<i>_max,p<i> per parameter, s<j>_min,s<j>_max,s<j>
    /// per SLO, carbon; then action<i>; reward is filled for every row.
    StepLog log;
    int truncations = 0;
    int updates = 0;
};

/// Trains a policy online for loop.max_steps logged steps. A step whose
/// states are unavailable (no SLO data yet) or whose API calls fail ends the
/// current episode and is not logged; training continues. Aborts after
/// `max_consecutive_failures` failing steps in a row.
RldsResult rlds_train(const ControlLoopConfig& loop, const RldsConfig& config, LoopEnv& env,
                      std::optional<Policy> initial = std::nullopt, int max_consecutive_failures = 50);

}  // namespace casca::decision
