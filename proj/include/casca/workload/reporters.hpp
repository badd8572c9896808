#pragma once

#include "casca/bus/broker.hpp"
#include "casca/workload/service.hpp"

#include <atomic>
#include <random>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

namespace casca::workload {

enum class ReporterKind { fps, power };

struct ReporterConfig {
    ReporterKind kind = ReporterKind::fps;
    std::string topic;
    double period_s = 1.0;
};

ReporterConfig parse_reporter(const nlohmann::json& doc);
nlohmann::json to_json(const ReporterConfig& config);

/// Continuous reporter: samples the service and publishes one envelope per call.
/// FPS payloads are {"fps": v}; power payloads mimic a Tasmota plug,
/// {"ENERGY": {"ApparentPower": v}}.
class Reporter {
public:
    /// `stream` distinguishes noise streams of reporters sharing one model seed.
    Reporter(ReporterConfig config, const MockService& service, bus::Publisher& publisher, std::uint64_t stream);

    /// Samples at simulation time `ts_ms` and publishes. Retries a failed
    /// publish with backoff; returns false if the envelope was finally dropped.
    bool emit(std::int64_t ts_ms);

    nlohmann::json sample(std::int64_t ts_ms);
    const ReporterConfig& config() const { return config_; }
    std::int64_t period_ms() const { return static_cast<std::int64_t>(config_.period_s * 1000.0); }

private:
    ReporterConfig config_;
    const MockService& service_;
    bus::Publisher& publisher_;
    std::mt19937_64 rng_;
};

/// Drives a reporter from an accelerated clock on its own thread, emitting at
/// start + k * period in simulation time.
class LiveReporter {
public:
    LiveReporter(Reporter& reporter, const AcceleratedClock& clock);
    ~LiveReporter();
    void stop();
    std::size_t emitted() const { return emitted_; }

private:
    Reporter& reporter_;
    const AcceleratedClock& clock_;
    std::atomic<bool> running_{true};
    std::atomic<std::size_t> emitted_{0};
    std::thread thread_;
};

}  // namespace casca::workload
