#pragma once

#include "casca/bus/envelope.hpp"
#include "casca/bus/topic.hpp"

#include <chrono>
#include <condition_variable>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace casca::bus {

class Publisher {
public:
    virtual ~Publisher() = default;
    virtual void publish(const Envelope& envelope) = 0;
};

/// An ordered stream of envelopes consumed by a single reader.
class EnvelopeSource {
public:
    virtual ~EnvelopeSource() = default;
    /// Next envelope, or nullopt on timeout or once the stream is closed.
    virtual std::optional<Envelope> next(std::chrono::milliseconds timeout) = 0;
    virtual bool closed() const = 0;
    virtual void close() = 0;
};

namespace detail {
struct Mailbox {
    explicit Mailbox(TopicPattern p) : pattern(std::move(p)) {}
    TopicPattern pattern;
    std::mutex mu;
    std::condition_variable cv;
    std::deque<Envelope> queue;
    bool closed = false;
};
}  // namespace detail

/// In-process subscription; closing it (or destroying it) releases it from the broker.
class Subscription final : public EnvelopeSource {
public:
    explicit Subscription(std::shared_ptr<detail::Mailbox> box) : box_(std::move(box)) {}
    ~Subscription() override { close(); }
    Subscription(const Subscription&) = delete;
    Subscription& operator=(const Subscription&) = delete;

    std::optional<Envelope> next(std::chrono::milliseconds timeout) override;
    /// Everything currently queued, without blocking.
    std::vector<Envelope> drain();
    bool closed() const override;
    void close() override;
    const TopicPattern& pattern() const { return box_->pattern; }

private:
    std::shared_ptr<detail::Mailbox> box_;
};

/// Reference in-process broker. No retained messages, no QoS: an envelope
/// reaches exactly the subscriptions alive at publish time, in publish order.
class Broker final : public Publisher {
public:
    void publish(const Envelope& envelope) override;
    std::unique_ptr<Subscription> subscribe(const std::string& pattern);

    std::size_t subscriber_count() const;
    /// Closes every live subscription.
    void close_all();

private:
    mutable std::mutex mu_;
    std::vector<std::shared_ptr<detail::Mailbox>> boxes_;
};

}  // namespace casca::bus
