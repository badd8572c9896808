#pragma once

#include "casca/bus/broker.hpp"
#include "casca/hook/hook_config.hpp"
#include "casca/hook/interpreter.hpp"
#include "casca/store/store.hpp"

#include <atomic>
#include <functional>
#include <memory>
#include <thread>

namespace casca::hook {

struct HookStats {
    std::size_t received = 0;
    std::size_t written = 0;
    std::size_t skipped = 0;
    std::size_t errors = 0;
};

/// Interprets envelopes and writes the resulting points, one at a time, in arrival order.
class HookProcessor {
public:
    HookProcessor(HookConfig config, store::StoreConnector& store);

    /// Never throws: interpretation and store failures are logged and counted.
    void process(const bus::Envelope& envelope);

    /// Processes everything the source has queued right now.
    std::size_t pump(bus::EnvelopeSource& source);

    HookStats stats() const;
    const HookConfig& config() const { return config_; }

private:
    HookConfig config_;
    store::StoreConnector& store_;
    std::atomic<std::size_t> received_{0}, written_{0}, skipped_{0}, errors_{0};
};

struct RetryPolicy {
    int max_attempts = 8;
    std::chrono::milliseconds initial_backoff{50};
    std::chrono::milliseconds max_backoff{2000};
};

/// A running hook. Stopping is graceful: the current envelope finishes first.
class HookHandle {
public:
    using SourceFactory = std::function<std::unique_ptr<bus::EnvelopeSource>()>;

    HookHandle(HookConfig config, store::StoreConnector& store, SourceFactory connect, RetryPolicy retry = {});
    ~HookHandle();
    HookHandle(const HookHandle&) = delete;
    HookHandle& operator=(const HookHandle&) = delete;

    void stop();
    bool running() const { return running_; }
    /// True once the retry budget was exhausted.
    bool failed() const { return failed_; }
    /// True while a subscription is established.
    bool connected() const { return connected_; }
    HookStats stats() const { return processor_.stats(); }

private:
    void loop();

    HookProcessor processor_;
    SourceFactory connect_;
    RetryPolicy retry_;
    std::atomic<bool> running_{true};
    std::atomic<bool> failed_{false};
    std::atomic<bool> connected_{false};
    std::mutex source_mu_;
    std::unique_ptr<bus::EnvelopeSource> source_;
    std::thread worker_;
};

/// Runs a hook against a TCP bus at config.bus.
std::unique_ptr<HookHandle> run_hook(const HookConfig& config, store::StoreConnector& store, RetryPolicy retry = {});

/// Runs a hook against an in-process broker.
std::unique_ptr<HookHandle> run_hook(const HookConfig& config, store::StoreConnector& store, bus::Broker& broker);

}  // namespace casca::hook
