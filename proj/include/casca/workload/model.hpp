#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <nlohmann/json.hpp>

namespace casca::workload {

/// Interval of reduced FPS while a client buffers; depth 1 means no output.
struct BufferDip {
    double start_s = 0.0;
    double duration_s = 0.0;
    double depth = 0.0;
};

/// Desk-scale stand-in for the transcoding testbed.
struct WorkloadModel {
    double f_max = 40.0;
    double kappa = 6.0;
    double p_idle = 13.0;
    double p_per_thread = 0.55;
    double noise_fps = 0.0;
    double noise_power = 0.0;
    std::uint64_t seed = 1;
    std::vector<BufferDip> buffer_schedule;
    int max_threads = 16;
    int initial_threads = 0;
};

/// Throws ValidationError when an invariant does not hold.
void validate(const WorkloadModel& model);
WorkloadModel parse_model(const nlohmann::json& doc);
nlohmann::json to_json(const WorkloadModel& model);

/// Largest depth among dips active at `t_s` (start inclusive, end exclusive).
double active_buffer_depth(double t_s, const WorkloadModel& model);

/// f_max * (1 - exp(-threads/kappa)) * (1 - depth(t)) + N(0, noise_fps), clamped at 0.
/// Exactly 0 with no threads. Noise is drawn only when `rng` is given.
double fps_model(int threads, double t_s, const WorkloadModel& model, std::mt19937_64* rng = nullptr);

/// p_idle + p_per_thread * threads + N(0, noise_power), clamped at p_idle / 2.
double power_model(int threads, const WorkloadModel& model, std::mt19937_64* rng = nullptr);

}  // namespace casca::workload
