#pragma once

#include "casca/store/point.hpp"
#include "casca/store/query.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

namespace casca::store {

/// The three operations any telemetry database adapter provides.
class StoreConnector {
public:
    virtual ~StoreConnector() = default;
    virtual void write(const TelemetryPoint& point) = 0;
    /// Aggregate over (now - window, now]; nullopt when no point falls in the window.
    virtual std::optional<double> query(const QuerySpec& spec, std::int64_t now_ms) = 0;
    virtual QuerySpec parse(std::string_view text) { return parse_query(text); }
};

/// Embedded single-node store. Each series keeps its points sorted by
/// timestamp; a second write with the same (measurement, tags, ts) replaces
/// the first.
class TimeSeriesStore final : public StoreConnector {
public:
    TimeSeriesStore() = default;

    /// Appends every accepted point to `journal` as one JSON line. Existing
    /// journal content is replayed first when `replay` is set.
    explicit TimeSeriesStore(const std::filesystem::path& journal, bool replay = true);

    void write(const TelemetryPoint& point) override;
    std::optional<double> query(const QuerySpec& spec, std::int64_t now_ms) override;

    std::size_t size() const;
    /// All points, ordered by series key then timestamp.
    std::vector<TelemetryPoint> points() const;

    /// Loads newline-delimited journal content into a fresh store (no journal attached).
    static std::unique_ptr<TimeSeriesStore> from_journal_file(const std::filesystem::path& path);

private:
    struct Entry {
        std::int64_t ts;
        std::map<std::string, double> fields;
    };
    struct Series {
        TagSet tags;
        std::vector<Entry> entries;
    };

    void insert_locked(const TelemetryPoint& point);

    mutable std::shared_mutex mu_;
    // measurement -> series key -> series
    std::map<std::string, std::map<std::string, Series>> data_;
    std::size_t count_ = 0;
    std::unique_ptr<std::ofstream> journal_;
};

}  // namespace casca::store
