#pragma once

#include "casca/common/http.hpp"
#include "casca/store/store.hpp"

#include <memory>
#include <mutex>

namespace casca::store {

inline constexpr const char* kDefaultStoreAddress = "127.0.0.1:7814";

/// HTTP front-end for a store: `POST /write` (journal-form point or array of
/// points), `GET /query?q=<dsl>&now=<ms>` returning {"value": v} or 204.
class StoreServer {
public:
    StoreServer(StoreConnector& store, const net::Endpoint& listen);
    ~StoreServer();

    net::Endpoint endpoint() const;
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Connector to a StoreServer, so hooks and the service API can run in other processes.
class HttpStoreConnector final : public StoreConnector {
public:
    explicit HttpStoreConnector(const net::Endpoint& endpoint) : client_(endpoint) {}

    void write(const TelemetryPoint& point) override;
    std::optional<double> query(const QuerySpec& spec, std::int64_t now_ms) override;

private:
    std::mutex mu_;
    http::Client client_;
};

}  // namespace casca::store
