#pragma once

#include "casca/decision/clients.hpp"
#include "casca/decision/step_log.hpp"
#include "casca/orchestrator/report.hpp"
#include "casca/orchestrator/scenario.hpp"

#include <filesystem>

namespace casca::orchestrator {

struct RunOptions {
    /// Records every value read and written by the decision system, plus the
    /// raw API response bodies.
    decision::ApiTrace* trace = nullptr;
    /// Write scenario.json, steps.csv and report.json (telemetry.jsonl is
    /// always journaled into the output directory).
    bool write_files = true;
};

struct RunResult {
    RunReport report;
    decision::StepLog log;
    std::filesystem::path dir;
};

/// Boots store, bus, EMMA, mock service, service API, hooks and reporters in
/// that order, runs the decision system, then stops everything in reverse
/// order. Boot failures throw Error naming the component; a decision loop
/// that dies mid-run yields a report marked failed with the partial log.
RunResult run_scenario(const ScenarioConfig& config, const RunOptions& options = {});

}  // namespace casca::orchestrator
