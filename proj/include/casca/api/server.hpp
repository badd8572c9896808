#pragma once

#include "casca/api/service_api.hpp"
#include "casca/common/net.hpp"

#include <memory>

namespace casca::api {

inline constexpr const char* kDefaultApiAddress = "127.0.0.1:7812";

/// SLO and control APIs on one listener:
///   GET  /slos, /slos/{id}, /slos/{id}/value   (204 while the window is empty)
///   GET  /settings, /settings/{id}, /settings/{id}/value
///   PUT  /settings/{id}/value  {"value": n}
///   POST /reconfigure          {"path": "<file>"}
/// Controller failures map to 502; SLO discovery keeps working.
class ApiServer {
public:
    ApiServer(ServiceApi& api, const net::Endpoint& listen);
    ~ApiServer();

    net::Endpoint endpoint() const;
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace casca::api
