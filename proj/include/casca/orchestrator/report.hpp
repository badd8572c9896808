#pragma once

#include "casca/api/slo_config.hpp"
#include "casca/decision/step_log.hpp"
#include "casca/emma/emma.hpp"
#include "casca/store/store.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace casca::orchestrator {

struct SeriesStats {
    std::size_t samples = 0;
    double mean = 0.0;
    double stddev = 0.0;  // population
    double fulfilment = 0.0;
};

/// Throws ValidationError for an empty series.
SeriesStats series_stats(const std::vector<double>& values, double s_min, double s_max);

/// Value of `spec` observed tau after each logged step, i.e. once the step's
/// action has been in effect for a whole time-step.
std::vector<std::optional<double>> slo_series(const decision::StepLog& log, store::StoreConnector& telemetry,
                                              const store::QuerySpec& spec, double tau_s);

struct MetricRow {
    std::string slo;
    double s_min = 0.0, s_max = 0.0;
    SeriesStats stats;
};

struct CarbonSample {
    std::int64_t ts = 0;
    double power_w = 0.0;
    double intensity = 0.0;
    double mg_per_min = 0.0;
};

struct RunReport {
    std::string decision;
    std::size_t steps = 0;
    int warmup_steps = 0;
    std::vector<MetricRow> metrics;
    std::vector<CarbonSample> carbon;  // one sample per sim minute after warm-up
    std::optional<double> carbon_mean;
    std::optional<double> mean_reward;
    std::vector<double> decision_latency_ms;
    std::vector<double> reconfiguration_ms;
    bool failed = false;
    std::string error;
};

struct CarbonInputs {
    store::QuerySpec power;  // its window is replaced by one minute
    const emma::LocationIndex* index = nullptr;
    std::string country;
    emma::Granularity granularity = emma::Granularity::hourly;
};

struct ReportOptions {
    std::string decision;
    int warmup_steps = 100;
    double tau_s = 60.0;
    std::optional<CarbonInputs> carbon;
};

/// Statistics of every SLO over the steps after warm-up. Absent values are
/// not samples; an SLO without samples reports zero samples. Throws
/// ValidationError for an empty step log.
RunReport compute_report(const decision::StepLog& log, store::StoreConnector& telemetry,
                         const std::vector<api::SloSpec>& slos, const ReportOptions& options);

nlohmann::json to_json(const RunReport& report);
std::string format_table(const RunReport& report);

/// Recomputes the report of a run directory from scenario.json, steps.csv
/// and telemetry.jsonl.
RunReport report_from_run_dir(const std::filesystem::path& dir);

}  // namespace casca::orchestrator
