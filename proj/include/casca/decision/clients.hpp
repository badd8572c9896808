#pragma once

#include "casca/common/http.hpp"
#include "casca/common/net.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace casca::decision {

struct Range {
    double min = 0.0;
    double max = 0.0;
    bool integer = false;
};

/// SLO API as seen by a decision system.
class SloApi {
public:
    virtual ~SloApi() = default;
    virtual Range describe(const std::string& slo) = 0;
    /// nullopt while the SLO has no data in its window.
    virtual std::optional<double> value(const std::string& slo) = 0;
};

/// Service-control API as seen by a decision system.
class ControlApi {
public:
    virtual ~ControlApi() = default;
    virtual Range describe(const std::string& param) = 0;
    virtual double value(const std::string& param) = 0;
    virtual void modify(const std::string& param, double value) = 0;
};

/// Carbon-intensity API, bound to a location and granularity; gCO2eq/kWh now.
class EmmaApi {
public:
    virtual ~EmmaApi() = default;
    virtual double intensity() = 0;
};

/// Everything observed through the APIs during a run, in call order.
struct ApiTrace {
    struct Event {
        char kind;  // 'r' value read, 'w' value written
        double value;
        bool operator==(const Event&) const = default;
    };
    std::vector<Event> events;
    std::vector<std::string> bodies;
};

struct RetryOptions {
    int attempts = 3;
    int backoff_ms = 50;
};

class HttpSloApi final : public SloApi {
public:
    HttpSloApi(const net::Endpoint& endpoint, ApiTrace* trace = nullptr, RetryOptions retry = {});
    Range describe(const std::string& slo) override;
    std::optional<double> value(const std::string& slo) override;

private:
    http::Client client_;
    ApiTrace* trace_;
    RetryOptions retry_;
};

class HttpControlApi final : public ControlApi {
public:
    HttpControlApi(const net::Endpoint& endpoint, ApiTrace* trace = nullptr, RetryOptions retry = {});
    Range describe(const std::string& param) override;
    double value(const std::string& param) override;
    void modify(const std::string& param, double value) override;

private:
    http::Client client_;
    ApiTrace* trace_;
    RetryOptions retry_;
};

class HttpEmmaApi final : public EmmaApi {
public:
    HttpEmmaApi(const net::Endpoint& endpoint, std::string country, std::string granularity, ApiTrace* trace = nullptr,
                RetryOptions retry = {});
    double intensity() override;

private:
    http::Client client_;
    std::string country_;
    std::string granularity_;
    ApiTrace* trace_;
    RetryOptions retry_;
};

struct StepRecord;

/// The three APIs plus how the loop waits for a time-step and reads the time.
struct LoopEnv {
    SloApi& slo;
    ControlApi& control;
    EmmaApi* emma = nullptr;
    std::function<void(double tau_s)> wait;
    std::function<std::int64_t()> now;
    /// Called with every logged step, so a caller keeps a partial log if the loop aborts.
    std::function<void(const StepRecord&)> on_step = nullptr;
};

/// A decision loop gave up after its API retries were exhausted.
class DecisionAbort : public std::runtime_error {
public:
    DecisionAbort(int step, const std::string& what)
        : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}
    int step() const noexcept { return step_; }

private:
    int step_;
};

}  // namespace casca::decision
