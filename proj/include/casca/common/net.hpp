#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace casca::net {

struct Endpoint {
    std::string host = "127.0.0.1";
    std::uint16_t port = 0;

    std::string to_string() const { return host + ":" + std::to_string(port); }
};

/// Parses "host:port"; a bare port means 127.0.0.1.
Endpoint parse_endpoint(const std::string& text);

/// Blocking TCP stream exchanging '\n'-terminated lines.
class LineStream {
public:
    LineStream() = default;
    explicit LineStream(int fd);
    ~LineStream();
    LineStream(LineStream&& other) noexcept;
    LineStream& operator=(LineStream&& other) noexcept;
    LineStream(const LineStream&) = delete;
    LineStream& operator=(const LineStream&) = delete;

    static LineStream connect(const Endpoint& ep, int timeout_ms = 2000);

    bool is_open() const noexcept { return fd_ >= 0; }

    /// Writes `line` plus '\n'. Throws ConnectionError on failure.
    void write_line(const std::string& line);

    /// Reads one line without its terminator; nullopt on orderly EOF.
    /// With timeout_ms >= 0, returns nullopt-with-timeout via `timed_out`.
    std::optional<std::string> read_line(int timeout_ms = -1, bool* timed_out = nullptr);

    /// Shuts down both directions, unblocking a reader in another thread.
    void shutdown();
    void close();

private:
    int fd_ = -1;
    std::string buffer_;
};

/// Accept loop on a listening socket; each connection runs `handler` on its own thread.
class TcpServer {
public:
    using Handler = std::function<void(LineStream&)>;

    TcpServer(const Endpoint& listen, Handler handler);
    ~TcpServer();
    TcpServer(const TcpServer&) = delete;
    TcpServer& operator=(const TcpServer&) = delete;

    Endpoint endpoint() const { return bound_; }
    void stop();

private:
    void accept_loop();

    Handler handler_;
    Endpoint bound_;
    int listen_fd_ = -1;
    std::atomic<bool> running_{true};
    std::thread acceptor_;
    std::mutex conn_mu_;
    std::vector<std::shared_ptr<LineStream>> connections_;
    std::vector<std::thread> workers_;
};

}  // namespace casca::net
