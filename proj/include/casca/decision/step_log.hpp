#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace casca::decision {

/// One row of a decision system's step log.
struct StepRecord {
    int step = 0;
    std::int64_t ts = 0;
    std::vector<double> state;
    std::vector<double> action;
    std::optional<double> reward;
    /// State reached after the action (RLDS only; not written to CSV).
    std::vector<double> next_state;
};

struct StepLog {
    std::vector<std::string> state_columns;
    std::vector<std::string> action_columns;
    std::vector<StepRecord> rows;
};

/// CSV with header `step,ts,<state columns>,<action columns>,reward`; the
/// reward cell is empty when absent. Doubles are printed round-trip exact.
void write_csv(const StepLog& log, const std::filesystem::path& path);
StepLog read_csv(const std::filesystem::path& path);

}  // namespace casca::decision
