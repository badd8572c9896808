#pragma once

#include "casca/decision/clients.hpp"
#include "casca/decision/step_log.hpp"

#include <random>

namespace casca::decision {

struct ControlLoopConfig;

/// Draws n(t) uniformly from the integers in [p_min, p_max], applies it, then waits tau.
double rds_step(LoopEnv& env, const std::string& param, double tau_s, std::mt19937_64& rng);

/// Runs max_steps RDS steps. State columns p0_min,p0_max; action column action0.
StepLog rds_run(const ControlLoopConfig& config, LoopEnv& env, const std::string& param);

}  // namespace casca::decision
