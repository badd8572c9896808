#pragma once

#include "casca/decision/clients.hpp"

#include <optional>
#include <string>
#include <vector>

namespace casca::decision {

/// 1 if a <= x <= b, otherwise -2c. Throws ValidationError if a > b.
double in_fn(double x, double a, double b, double c);

/// mg CO2eq per minute drawn by `power_w` at `intensity_gco2eq_kwh`:
/// W * 1 min = W / 60000 kWh; times g/kWh times 1000 mg/g = W * I / 60.
double carbon_footprint(double power_w, double intensity_gco2eq_kwh);

struct Observation {
    double min = 0.0;
    double max = 0.0;
    double value = 0.0;
};

/// MDP state: (min, max, value) per selected parameter, then per selected
/// SLO, then the carbon footprint. Component order is fixed for a run.
struct MdpState {
    std::vector<Observation> params;
    std::vector<Observation> slos;
    double carbon = 0.0;

    std::size_t dimension() const { return 3 * params.size() + 3 * slos.size() + 1; }
    std::vector<double> to_vector() const;
    /// Inverse of to_vector for a known number of parameters and SLOs.
    static MdpState from_vector(const std::vector<double>& v, std::size_t n_params, std::size_t n_slos);
};

/// One value per selected parameter, each within its range.
struct MdpAction {
    std::vector<double> values;
};

struct Reward {
    double value = 0.0;
    bool clamped = false;  // C(t+1) <= 0 was replaced by kMinCarbon
};

inline constexpr double kMinCarbon = 1e-6;

/// Mean over the selected SLOs of IN(s, s_min, s_max, C) / C, evaluated on
/// the state reached after the action: a fulfilled SLO contributes 1/C and
/// an unfulfilled one -2.
Reward reward(const MdpState& next);

/// Reads the selected parameters and SLOs plus C(t) from the power SLO and the
/// current carbon intensity. nullopt when any SLO has no data yet.
std::optional<MdpState> build_state(LoopEnv& env, const std::vector<std::string>& params,
                                    const std::vector<std::string>& slos, const std::string& power_slo);

}  // namespace casca::decision
