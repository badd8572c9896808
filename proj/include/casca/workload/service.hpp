#pragma once

#include "casca/common/clock.hpp"
#include "casca/common/net.hpp"
#include "casca/workload/model.hpp"

#include <memory>
#include <mutex>
#include <string>

#include <nlohmann/json.hpp>

namespace casca::workload {

inline constexpr const char* kThreadSetting = "EncodingThreadCount";
inline constexpr const char* kDefaultControlAddress = "127.0.0.1:7815";

/// The simulated transcoding service. Holds the EncodingThreadCount setting;
/// reporters sample its FPS and power at simulation timestamps.
class MockService {
public:
    /// `start_ms` is the simulation time at which buffer schedules are anchored.
    MockService(WorkloadModel model, const Clock& clock, std::int64_t start_ms);

    int threads() const;
    /// Throws ValidationError for values outside [0, max_threads].
    void set_threads(int threads);

    const WorkloadModel& model() const { return model_; }
    const Clock& clock() const { return clock_; }
    /// Seconds since the simulation start for a simulation timestamp.
    double sim_seconds(std::int64_t ts_ms) const { return static_cast<double>(ts_ms - start_ms_) / 1000.0; }

    /// Control protocol: {"op":"get"|"set"|"list", "setting":..., "value":...}
    /// answered with {"ok":true,...} or {"ok":false,"error":...}.
    nlohmann::json handle(const nlohmann::json& request);

    nlohmann::json describe_settings() const;

private:
    WorkloadModel model_;
    const Clock& clock_;
    std::int64_t start_ms_;
    mutable std::mutex mu_;
    int threads_;
};

/// Serves the control protocol over TCP, one JSON object per line.
class ControlServer {
public:
    ControlServer(MockService& service, const net::Endpoint& listen);
    net::Endpoint endpoint() const { return server_.endpoint(); }
    void stop() { server_.stop(); }

private:
    net::TcpServer server_;
};

/// Client side of the control protocol. Thread-safe; reconnects after a failure.
class ControlClient {
public:
    explicit ControlClient(net::Endpoint endpoint) : endpoint_(std::move(endpoint)) {}

    /// Raw exchange; throws ConnectionError when no reply arrives.
    nlohmann::json request(const nlohmann::json& message);

    const net::Endpoint& endpoint() const { return endpoint_; }

private:
    net::Endpoint endpoint_;
    std::mutex mu_;
    net::LineStream stream_;
};

}  // namespace casca::workload
