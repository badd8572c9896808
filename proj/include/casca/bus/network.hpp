#pragma once

#include "casca/bus/broker.hpp"
#include "casca/common/net.hpp"

#include <memory>
#include <mutex>

namespace casca::bus {

inline constexpr const char* kDefaultBusAddress = "127.0.0.1:7811";

/// Exposes a Broker over newline-delimited JSON on TCP. A connection whose
/// first line is {"sub":"<pattern>"} becomes a subscriber; on any other
/// connection every line is a published envelope.
class BusServer {
public:
    BusServer(Broker& broker, const net::Endpoint& listen);
    ~BusServer();

    net::Endpoint endpoint() const { return server_->endpoint(); }
    void stop();

private:
    void serve(net::LineStream& conn);

    Broker& broker_;
    std::atomic<bool> stopping_{false};
    std::unique_ptr<net::TcpServer> server_;
};

/// Publishing side of a TCP bus connection. Reconnects lazily after a failure.
class BusClient final : public Publisher {
public:
    explicit BusClient(net::Endpoint endpoint) : endpoint_(std::move(endpoint)) {}

    /// Validates locally (ValidationError), then writes one line
    /// (ConnectionError if the broker is unreachable).
    void publish(const Envelope& envelope) override;

private:
    net::Endpoint endpoint_;
    std::mutex mu_;
    net::LineStream stream_;
};

/// Subscribing side of a TCP bus connection.
class RemoteSubscription final : public EnvelopeSource {
public:
    /// Throws ValidationError for an invalid pattern, ConnectionError if unreachable.
    RemoteSubscription(const net::Endpoint& endpoint, const std::string& pattern);

    std::optional<Envelope> next(std::chrono::milliseconds timeout) override;
    bool closed() const override { return closed_; }
    void close() override;

private:
    net::LineStream stream_;
    std::atomic<bool> closed_{false};
};

}  // namespace casca::bus
