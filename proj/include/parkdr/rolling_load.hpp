#pragma once

#include <optional>
#include <vector>

namespace parkdr {

// One rectangular power pulse: `amplitude_kw` on [start_min, start_min + width_min].
struct GatePulse {
    double start_min = 0.0;
    double width_min = 0.0;
    double amplitude_kw = 0.0;
};

// Steel rolling line schedule. Each billet runs through the rough train
// (rough_pass_count reversing passes, modeled as back-to-back pulses) and
// then the finishing train (one pass per mill). Billet i starts its rough /
// finishing process at rough_offsets_min[i] / finish_offsets_min[i] after
// billet 1.
struct RollingScheduleSpec {
    double pulse_power_kw = 0.0;   // a, power of a single mill pass
    double pulse_width_min = 0.0;  // width of a single pass
    int rough_pass_count = 1;      // odd: the billet leaves the stand where it entered
    int finishing_mill_count = 0;
    std::vector<double> rough_offsets_min;   // one per billet, first must be 0
    std::vector<double> finish_offsets_min;  // one per billet, first must be 0
    double inter_pass_gap_min = 0.0;
    double rough_start_min = 0.0;
    // Start of the first billet's finishing train; defaults to the end of
    // its rough train.
    std::optional<double> finish_start_min;

    std::size_t billet_count() const { return rough_offsets_min.size(); }
    double default_finish_start_min() const;

    // Throws SpecError on violated invariants.
    void validate() const;
};

// Power of one gate pulse at time t (closed on both ends, so pulses that
// share an endpoint both count there -- loads add).
double gate_power(double t_min, double start_min, double width_min, double amplitude_kw);

// Total line power at t: superposition of all billet pass pulses.
double rolling_line_power(double t_min, const RollingScheduleSpec& spec);

// All pulses of the schedule, in billet-then-pass order. rolling_line_power
// equals the sum of gate_power over this list at every instant.
std::vector<GatePulse> rolling_pulse_train(const RollingScheduleSpec& spec);

}  // namespace parkdr
