#pragma once

#include "casca/common/net.hpp"

#include <memory>
#include <string>

#include <nlohmann/json.hpp>

namespace casca::http {

struct Response {
    int status = 0;
    std::string body;

    /// Body parsed as JSON; null for an empty body.
    nlohmann::json json() const;
};

/// Keep-alive JSON client for one host. Not thread-safe; one per caller thread.
class Client {
public:
    explicit Client(const net::Endpoint& endpoint, int timeout_ms = 5000);
    ~Client();
    Client(Client&&) noexcept;
    Client& operator=(Client&&) noexcept;

    /// Each call throws ConnectionError when no HTTP exchange took place.
    Response get(const std::string& path);
    Response put(const std::string& path, const nlohmann::json& body);
    Response post(const std::string& path, const nlohmann::json& body);

    const net::Endpoint& endpoint() const { return endpoint_; }

private:
    struct Impl;
    net::Endpoint endpoint_;
    std::unique_ptr<Impl> impl_;
};

/// Percent-encodes a query-string component.
std::string url_encode(const std::string& text);

}  // namespace casca::http
