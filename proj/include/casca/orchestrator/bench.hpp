#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace casca::orchestrator {

enum class EditKind { add, remove, rename };

struct EditSample {
    EditKind kind = EditKind::add;
    double declarative_ms = 0.0;  // POST /reconfigure until GET /slos shows the edit
    double restart_ms = 0.0;      // stop and re-create the API until GET /slos shows the edit
    bool observed = false;
};

struct ReconfigResult {
    std::vector<EditSample> edits;
    bool broken_edit_rejected = false;
    bool rollback_ok = false;  // SLO list unchanged after the rejected edit
};

/// Applies `edits` SLO edits (add, remove, rename in turn) to a copy of
/// `slos_file` kept in `work_dir`, timing each one both declaratively and by
/// restarting the API, then tries one malformed file.
ReconfigResult measure_reconfiguration(const std::filesystem::path& slos_file, const std::filesystem::path& work_dir,
                                       int edits, int timeout_ms = 5000);

struct LatencyStats {
    std::string category;
    std::vector<double> samples_ms;
    std::size_t failures = 0;
    double mean_ms = 0.0;
    double std_ms = 0.0;
};

/// n gets and n sets of the thread count through the service API, and n of
/// each over the mock's control protocol directly; values cycle over
/// [value_min, value_max]. Categories: direct_get, direct_set, casca_get, casca_set.
std::vector<LatencyStats> measure_api_overhead(int n, int value_min = 1, int value_max = 8);

std::string_view to_string(EditKind kind);
nlohmann::json to_json(const ReconfigResult& result);
nlohmann::json to_json(const std::vector<LatencyStats>& stats);

}  // namespace casca::orchestrator
