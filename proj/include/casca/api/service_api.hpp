#pragma once

#include "casca/api/controller.hpp"
#include "casca/api/slo_config.hpp"
#include "casca/common/clock.hpp"
#include "casca/store/store.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace casca::api {

struct SloValue {
    double value = 0.0;
    bool fulfilled = false;
};

/// Closed-interval fulfilment test shared by every SLO consumer.
inline bool fulfilled(double value, double s_min, double s_max) { return value >= s_min && value <= s_max; }

/// The gateway behind the HTTP front-end: SLO observation over the store,
/// setting management through a controller, and the aliasing layer. Every
/// id accepted or returned here is a public id.
class ServiceApi {
public:
    ServiceApi(ApiConfig config, store::StoreConnector& store, ServiceController& controller, const Clock& clock);

    std::vector<SloSpec> list_slos() const;
    SloSpec describe_slo(const std::string& public_id) const;
    /// nullopt when the SLO's window holds no data.
    std::optional<SloValue> slo_value(const std::string& public_id) const;

    /// Throws ConnectionError when settings come from an unreachable controller.
    std::vector<SettingSpec> list_settings() const;
    SettingSpec describe_setting(const std::string& public_id) const;
    double get_setting(const std::string& public_id);
    /// Range and type are checked before the controller is contacted.
    void set_setting(const std::string& public_id, double value);

    /// Loads `path` and swaps it in atomically. A file without aliases keeps
    /// the aliases the API was constructed with; the previous configuration stays
    /// live if loading fails (the error is rethrown).
    void reconfigure(const std::filesystem::path& path);
    void reconfigure(ApiConfig config);
    /// Re-reads the last path given to reconfigure, if any.
    void reload();

private:
    struct Snapshot {
        std::vector<SloSpec> internal_slos;
        std::vector<SloSpec> public_slos;
        std::optional<std::vector<SettingSpec>> configured_settings;
        AliasMap aliases;
    };

    static std::shared_ptr<const Snapshot> build(ApiConfig config);
    std::shared_ptr<const Snapshot> snapshot() const;
    /// Public and internal settings in matching order.
    std::pair<std::vector<SettingSpec>, std::vector<SettingSpec>> settings(const Snapshot& snap) const;
    std::pair<SettingSpec, std::string> resolve_setting(const std::string& public_id) const;

    store::StoreConnector& store_;
    ServiceController& controller_;
    const Clock& clock_;
    const AliasMap base_aliases_;
    mutable std::mutex snap_mu_;
    std::shared_ptr<const Snapshot> snap_;
    std::mutex set_mu_;
    std::mutex path_mu_;
    std::optional<std::filesystem::path> last_path_;
};

}  // namespace casca::api
