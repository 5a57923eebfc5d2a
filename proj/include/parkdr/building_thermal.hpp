#pragma once

namespace parkdr {

// First-order building heat path model. tau and the step length passed to
// the operations below must share a unit.
struct BuildingThermalSpec {
    double thermal_resistance = 0.0;  // R, degC per kW
    double tau = 0.0;                 // heat-dissipation time constant
    double heat_capacity_kwh_per_c = 0.0;  // C_air; kept with the spec, not
                                           // used by the first-order update
    double t_in_min_c = 0.0;
    double t_in_max_c = 0.0;

    void validate() const;
};

// Indoor temperature after one step of heating at q_load_kw:
//   T' = T_in e^(-dt/tau) + (R * Q + T_out)(1 - e^(-dt/tau)).
double indoor_temp_step(double t_in_c, double t_out_c, double q_load_kw, double dt,
                        const BuildingThermalSpec& spec);

// Heating power needed to land on t_in_next_c after one step; the exact
// algebraic inverse of indoor_temp_step. Both endpoint temperatures must
// lie within the comfort band [t_in_min_c, t_in_max_c] (ComfortError via
// BoundsError otherwise).
double heat_load_required(double t_in_next_c, double t_in_c, double t_out_c, double dt,
                          const BuildingThermalSpec& spec);

}  // namespace parkdr
