#include "parkdr/battery.hpp"

#include <cmath>

#include "parkdr/errors.hpp"

namespace parkdr {

void BatteryElectricalState::validate() const {
    if (!(soc >= 0.0 && soc <= 1.0)) {
        throw SpecError("battery: SOC must be in [0, 1]");
    }
    if (!(r0_ohm >= 0.0) || !(r1_ohm >= 0.0) || !(r2_ohm >= 0.0)) {
        throw SpecError("battery: resistances must be >= 0");
    }
    if (!(c0_farad > 0.0)) {
        throw SpecError("battery: polarization capacitance must be > 0");
    }
}

double battery_terminal_voltage(const BatteryElectricalState& state, double current_a,
                                double t_since_step_s) {
    state.validate();
    if (!std::isfinite(current_a) || !std::isfinite(t_since_step_s) ||
        t_since_step_s < 0.0) {
        throw SpecError("battery_terminal_voltage: bad current or time");
    }
    double v0 = 0.0;
    if (state.r0_ohm > 0.0) {
        v0 = current_a * state.r0_ohm * (1.0 - std::exp(-t_since_step_s / state.tau_s()));
    }
    return state.open_circuit_v - v0 - (state.r0_ohm + state.r1_ohm) * current_a;
}

BatteryIdentification identify_battery_params(double delta_v, double delta_v1,
                                              double current_a, double tau_s,
                                              double open_circuit_v, double terminal_v) {
    if (current_a == 0.0) {
        throw BoundsError("identify_battery_params: current must be nonzero");
    }
    if (!(tau_s > 0.0)) {
        throw SpecError("identify_battery_params: tau must be > 0");
    }
    BatteryIdentification id;
    id.r1_ohm = delta_v / current_a;
    id.r0_ohm = delta_v1 / current_a;
    id.r_total_ohm = (open_circuit_v - terminal_v) / current_a;
    if (id.r1_ohm < 0.0 || id.r0_ohm <= 0.0 || id.r_total_ohm < 0.0) {
        throw SpecError("identify_battery_params: identification failed, "
                        "negative or zero resistance");
    }
    id.c0_farad = tau_s / id.r0_ohm;
    return id;
}

void StorageSpec::validate() const {
    if (!(capacity_kwh > 0.0)) {
        throw SpecError("storage: capacity must be > 0");
    }
    if (!(0.0 <= soc_min && soc_min < soc_max && soc_max <= 1.0)) {
        throw SpecError("storage: need 0 <= SOC_min < SOC_max <= 1");
    }
    if (!(soc_initial >= soc_min && soc_initial <= soc_max)) {
        throw SpecError("storage: SOC_0 must lie within [SOC_min, SOC_max]");
    }
    if (!(p_charge_max_kw >= 0.0) || !(p_discharge_max_kw <= 0.0)) {
        throw SpecError("storage: need P_charge_max >= 0 >= P_discharge_max");
    }
    if (!(eta_charge > 0.0 && eta_charge <= 1.0) ||
        !(eta_discharge > 0.0 && eta_discharge <= 1.0)) {
        throw SpecError("storage: efficiencies must be in (0, 1]");
    }
}

double soc_step(double soc, double p_charge_kw, double p_discharge_kw, double dt_h,
                const StorageSpec& spec) {
    spec.validate();
    if (!(dt_h > 0.0)) {
        throw SpecError("soc_step: step length must be > 0 hours");
    }
    if (p_charge_kw != 0.0 && p_discharge_kw != 0.0) {
        throw ExclusivityError("soc_step: storage can only charge or discharge, not both");
    }
    if (!(p_charge_kw >= 0.0 && p_charge_kw <= spec.p_charge_max_kw)) {
        throw BoundsError("soc_step: charge power outside [0, P_charge_max]");
    }
    if (!(p_discharge_kw <= 0.0 && p_discharge_kw >= spec.p_discharge_max_kw)) {
        throw BoundsError("soc_step: discharge power outside [P_discharge_max, 0]");
    }
    const double delta = (spec.eta_charge * p_charge_kw +
                          p_discharge_kw / spec.eta_discharge) *
                         dt_h / spec.capacity_kwh;
    const double next = soc + delta;
    // Half an ulp of slack: callers clip requests in energy terms and the
    // fraction conversion may round past the bound.
    const double tol = 1e-12;
    if (next < spec.soc_min - tol || next > spec.soc_max + tol) {
        throw BoundsError("soc_step: resulting SOC outside [SOC_min, SOC_max]");
    }
    return next;
}

}  // namespace parkdr
