#pragma once

#include "casca/api/slo_config.hpp"
#include "casca/workload/service.hpp"

#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace casca::api {

/// What the service API needs from a managed service. Implementations are
/// drop-in replaceable: set then get returns the set value, and list() is
/// stable between reconfigurations.
class ServiceController {
public:
    virtual ~ServiceController() = default;
    virtual double get(const std::string& setting) = 0;
    virtual void set(const std::string& setting, double value) = 0;
    virtual std::vector<SettingSpec> list() = 0;
};

/// Controller bound to the mock transcoding service's control protocol.
/// Transport failures surface as ConnectionError; rejected values as ValidationError.
class MockServiceController final : public ServiceController {
public:
    explicit MockServiceController(const net::Endpoint& endpoint) : client_(endpoint) {}

    double get(const std::string& setting) override;
    void set(const std::string& setting, double value) override;
    std::vector<SettingSpec> list() override;

private:
    nlohmann::json call(const nlohmann::json& request);
    SettingSpec spec_for(const std::string& setting);

    workload::ControlClient client_;
    std::mutex mu_;
    std::optional<std::vector<SettingSpec>> cached_;
};

/// Parses "mock:<host:port>" into a controller.
std::unique_ptr<ServiceController> make_controller(const std::string& uri);

}  // namespace casca::api
