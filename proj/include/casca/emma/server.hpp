#pragma once

#include "casca/common/clock.hpp"
#include "casca/common/net.hpp"
#include "casca/emma/emma.hpp"

#include <memory>
#include <mutex>

namespace casca::emma {

inline constexpr const char* kDefaultEmmaAddress = "127.0.0.1:7813";

struct Datasets {
    SourceTable sources;
    LocationIndex locations;
};

/// Holds the loaded datasets; reload swaps the whole set atomically.
class EmmaService {
public:
    EmmaService(const std::filesystem::path& sources_csv, const std::filesystem::path& locations_csv);
    explicit EmmaService(std::shared_ptr<const Datasets> data) : data_(std::move(data)) {}

    void reload(const std::filesystem::path& sources_csv, const std::filesystem::path& locations_csv);
    std::shared_ptr<const Datasets> snapshot() const;

private:
    mutable std::mutex mu_;
    std::shared_ptr<const Datasets> data_;
};

/// HTTP API: `GET /intensity?country=&ts=&granularity=` (ts defaults to the
/// clock's now, granularity to hourly), `POST /intensity/mix`, `GET /sources`.
/// Errors: validation 400, unknown entity 404, timestamp out of range 416.
class EmmaServer {
public:
    EmmaServer(const EmmaService& service, const Clock& clock, const net::Endpoint& listen);
    ~EmmaServer();

    net::Endpoint endpoint() const;
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace casca::emma
