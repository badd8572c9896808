#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace casca::emma {

enum class EnergySource { coal, gas, oil, nuclear, hydro, wind, solar, biomass, geothermal };

inline constexpr std::array<EnergySource, 9> kAllSources = {
    EnergySource::coal,  EnergySource::gas,   EnergySource::oil,     EnergySource::nuclear,   EnergySource::hydro,
    EnergySource::wind,  EnergySource::solar, EnergySource::biomass, EnergySource::geothermal};

std::string_view to_string(EnergySource source);
std::optional<EnergySource> source_from_string(std::string_view name);

/// Lifecycle carbon intensity per energy source, gCO2eq/kWh.
using SourceTable = std::map<EnergySource, double>;

/// Shares per energy source; each in [0,1], summing to 1 within 1e-6.
using EnergyMix = std::map<EnergySource, double>;

enum class Granularity { hourly, daily, monthly, yearly };

std::string_view to_string(Granularity granularity);
std::optional<Granularity> granularity_from_string(std::string_view name);

struct CarbonIntensityRecord {
    std::string country;
    std::int64_t ts = 0;
    Granularity granularity = Granularity::hourly;
    double intensity = 0.0;
};

/// CSV with header `source,intensity_gco2eq_kwh`. Every source must be present.
SourceTable load_source_table(const std::filesystem::path& path);

/// Exact weighted mean of source intensities.
double mix_intensity(const EnergyMix& mix, const SourceTable& table);

/// Location records indexed by (country, granularity), each list sorted by timestamp.
class LocationIndex {
public:
    /// Throws ValidationError on a duplicate (country, ts, granularity) key.
    explicit LocationIndex(std::vector<CarbonIntensityRecord> records);

    /// Intensity of the latest record at or before `ts`.
    double intensity(const std::string& country, std::int64_t ts, Granularity granularity) const;

    std::size_t size(const std::string& country, Granularity granularity) const;
    std::vector<std::string> countries() const;

private:
    std::map<std::pair<std::string, Granularity>, std::vector<CarbonIntensityRecord>> index_;
};

/// CSV with header `country,timestamp_ms,granularity,intensity_gco2eq_kwh`.
/// Malformed rows are reported with their line number.
LocationIndex load_location_dataset(const std::filesystem::path& path);

}  // namespace casca::emma
