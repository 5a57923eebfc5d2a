#pragma once

namespace parkdr {

// Thevenin equivalent-circuit state of a lithium cell at one operating
// point (fixed SOC and temperature). tau = r0 * c0.
struct BatteryElectricalState {
    double soc = 0.5;              // fraction in [0, 1]
    double temperature_c = 25.0;
    double open_circuit_v = 0.0;   // V_OC
    double r0_ohm = 0.0;           // polarization resistance
    double r1_ohm = 0.0;           // ohmic internal resistance
    double r2_ohm = 0.0;           // remaining internal resistances
    double c0_farad = 1.0;         // polarization capacitance

    double tau_s() const { return r0_ohm * c0_farad; }
    void validate() const;
};

// Identified circuit parameters from a current-step measurement.
struct BatteryIdentification {
    double r1_ohm = 0.0;      // ohmic step:        delta_V / I
    double r0_ohm = 0.0;      // polarization step: delta_V1 / I
    double c0_farad = 0.0;    // tau / r0
    double r_total_ohm = 0.0; // (V_OC - V_B) / I
};

// Terminal voltage t_since_step seconds after a current step to current_a
// (charge positive): V_B = V_OC - V0(t) - (R0 + R1) * I, where V0 is the
// first-order RC polarization response I * R0 * (1 - e^(-t / (R0 C0))).
double battery_terminal_voltage(const BatteryElectricalState& state, double current_a,
                                double t_since_step_s);

// Parameter identification from step-response voltages. Throws BoundsError
// for zero current and SpecError when the identified resistances come out
// negative (a failed measurement).
BatteryIdentification identify_battery_params(double delta_v, double delta_v1,
                                              double current_a, double tau_s,
                                              double open_circuit_v, double terminal_v);

// Grid-side storage unit: only power in/out and the state of charge matter
// for scheduling.
struct StorageSpec {
    double capacity_kwh = 0.0;        // E_s
    double p_charge_max_kw = 0.0;     // >= 0
    double p_discharge_max_kw = 0.0;  // <= 0 (supply power is negative)
    double soc_min = 0.0;
    double soc_max = 1.0;
    double soc_initial = 0.5;
    double eta_charge = 1.0;
    double eta_discharge = 1.0;

    void validate() const;
};

// One SOC bookkeeping step:
//   SOC' = SOC + (eta_c * P_charge + P_discharge / eta_d) * dt / E_s.
// Exactly one of the powers may be nonzero (ExclusivityError otherwise);
// the result must stay within [soc_min, soc_max] (BoundsError otherwise,
// the caller is expected to clip its power request).
double soc_step(double soc, double p_charge_kw, double p_discharge_kw, double dt_h,
                const StorageSpec& spec);

}  // namespace parkdr
