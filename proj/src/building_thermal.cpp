#include "parkdr/building_thermal.hpp"

#include <cmath>

#include "parkdr/errors.hpp"

namespace parkdr {

void BuildingThermalSpec::validate() const {
    if (!(thermal_resistance > 0.0)) {
        throw SpecError("thermal: resistance must be > 0");
    }
    if (!(tau > 0.0)) {
        throw SpecError("thermal: time constant must be > 0");
    }
    if (!(t_in_min_c < t_in_max_c)) {
        throw SpecError("thermal: need T_in_min < T_in_max");
    }
}

double indoor_temp_step(double t_in_c, double t_out_c, double q_load_kw, double dt,
                        const BuildingThermalSpec& spec) {
    spec.validate();
    if (!(dt > 0.0) || !std::isfinite(t_in_c) || !std::isfinite(t_out_c) ||
        !std::isfinite(q_load_kw)) {
        throw SpecError("indoor_temp_step: bad inputs");
    }
    const double decay = std::exp(-dt / spec.tau);
    return t_in_c * decay +
           (spec.thermal_resistance * q_load_kw + t_out_c) * (1.0 - decay);
}

double heat_load_required(double t_in_next_c, double t_in_c, double t_out_c, double dt,
                          const BuildingThermalSpec& spec) {
    spec.validate();
    if (!(dt > 0.0) || !std::isfinite(t_in_next_c) || !std::isfinite(t_in_c) ||
        !std::isfinite(t_out_c)) {
        throw SpecError("heat_load_required: bad inputs");
    }
    auto comfortable = [&](double t) {
        return t >= spec.t_in_min_c && t <= spec.t_in_max_c;
    };
    if (!comfortable(t_in_c) || !comfortable(t_in_next_c)) {
        throw BoundsError("heat_load_required: temperature outside the comfort band");
    }
    const double decay = std::exp(-dt / spec.tau);
    return ((t_in_next_c - t_in_c * decay) / (1.0 - decay) - t_out_c) /
           spec.thermal_resistance;
}

}  // namespace parkdr
