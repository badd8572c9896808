#pragma once

#include <chrono>
#include <cstdint>
#include <mutex>

namespace casca {

/// Source of simulation time in milliseconds since the Unix epoch.
class Clock {
public:
    virtual ~Clock() = default;
    virtual std::int64_t now_ms() const = 0;
};

/// Time that only moves when advanced explicitly.
class VirtualClock final : public Clock {
public:
    explicit VirtualClock(std::int64_t start_ms = 0) : now_(start_ms) {}

    std::int64_t now_ms() const override {
        std::lock_guard lock(mu_);
        return now_;
    }

    void set(std::int64_t ms) {
        std::lock_guard lock(mu_);
        now_ = ms;
    }

private:
    mutable std::mutex mu_;
    std::int64_t now_;
};

/// Wall-clock time scaled by a multiplier from a fixed epoch:
/// now = epoch + (wall elapsed since construction) * multiplier.
class AcceleratedClock final : public Clock {
public:
    AcceleratedClock(std::int64_t epoch_ms, double multiplier)
        : epoch_ms_(epoch_ms), multiplier_(multiplier), start_(std::chrono::steady_clock::now()) {}

    std::int64_t now_ms() const override {
        auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        return epoch_ms_ + static_cast<std::int64_t>(elapsed * multiplier_);
    }

    double multiplier() const noexcept { return multiplier_; }

private:
    std::int64_t epoch_ms_;
    double multiplier_;
    std::chrono::steady_clock::time_point start_;
};

inline std::int64_t wall_now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
}

}  // namespace casca
