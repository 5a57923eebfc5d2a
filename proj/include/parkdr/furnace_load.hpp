#pragma once

#include <cstdint>

namespace parkdr {

// Electric arc furnace heat cycle: linear ramp to rated power over
// ramp_up_s, a plateau at (1 + eps(t)) * rated_power_kw, and a linear ramp
// back to zero over ramp_down_s. eps(t) is "band" noise of half-width
// band_halfwidth, piecewise constant over noise_interval_s and regenerated
// bit-exactly from noise_seed. All times in seconds.
struct FurnaceCycleSpec {
    double t_on_s = 0.0;
    double t_off_s = 0.0;
    double ramp_up_s = 1.0;
    double ramp_down_s = 1.0;
    double rated_power_kw = 0.0;
    double band_halfwidth = 0.0;  // delta_max, dimensionless
    std::uint64_t noise_seed = 0;
    double noise_interval_s = 10.0;

    double plateau_start_s() const { return t_on_s + ramp_up_s; }
    double plateau_end_s() const { return t_off_s - ramp_down_s; }

    // Throws SpecError on violated invariants (in particular a plateau of
    // negative length, t_on + ramp_up > t_off - ramp_down).
    void validate() const;
};

// The band deviation eps(t) for this cycle: uniform on
// [-band_halfwidth, +band_halfwidth], constant within each noise interval.
double band_epsilon(const FurnaceCycleSpec& spec, double t_s);

// Furnace power with an explicit deviation value (test and analysis hook).
double eaf_power_with_epsilon(double t_s, const FurnaceCycleSpec& spec, double epsilon);

// Furnace power with the spec's own seeded band noise.
double eaf_power(double t_s, const FurnaceCycleSpec& spec);

}  // namespace parkdr
