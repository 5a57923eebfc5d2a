#include "parkdr/furnace_load.hpp"

#include <cmath>

#include "parkdr/errors.hpp"
#include "parkdr/rng.hpp"

namespace parkdr {

void FurnaceCycleSpec::validate() const {
    if (!(rated_power_kw > 0.0) || !std::isfinite(rated_power_kw)) {
        throw SpecError("furnace: rated power must be > 0");
    }
    if (!(ramp_up_s > 0.0) || !(ramp_down_s > 0.0)) {
        throw SpecError("furnace: ramp durations must be > 0");
    }
    if (!(band_halfwidth >= 0.0)) {
        throw SpecError("furnace: band half-width must be >= 0");
    }
    if (!(noise_interval_s > 0.0)) {
        throw SpecError("furnace: noise interval must be > 0");
    }
    if (t_on_s + ramp_up_s > t_off_s - ramp_down_s) {
        throw SpecError("furnace: ramp-up must end before ramp-down starts");
    }
}

double band_epsilon(const FurnaceCycleSpec& spec, double t_s) {
    if (spec.band_halfwidth == 0.0) return 0.0;
    const auto slot =
        static_cast<std::uint64_t>(std::floor(t_s / spec.noise_interval_s));
    SplitMix64 rng(SplitMix64::mix(spec.noise_seed, slot));
    return rng.next_uniform(-spec.band_halfwidth, spec.band_halfwidth);
}

double eaf_power_with_epsilon(double t_s, const FurnaceCycleSpec& spec, double epsilon) {
    spec.validate();
    if (!std::isfinite(t_s)) {
        throw SpecError("eaf_power: non-finite time");
    }
    if (std::fabs(epsilon) > spec.band_halfwidth) {
        throw SpecError("eaf_power: deviation exceeds the band half-width");
    }
    if (t_s <= spec.t_on_s || t_s > spec.t_off_s) {
        return 0.0;
    }
    if (t_s <= spec.plateau_start_s()) {
        return spec.rated_power_kw / spec.ramp_up_s * (t_s - spec.t_on_s);
    }
    if (t_s <= spec.plateau_end_s()) {
        return (1.0 + epsilon) * spec.rated_power_kw;
    }
    return spec.rated_power_kw / spec.ramp_down_s * (spec.t_off_s - t_s);
}

double eaf_power(double t_s, const FurnaceCycleSpec& spec) {
    const bool in_plateau = t_s > spec.plateau_start_s() && t_s <= spec.plateau_end_s();
    return eaf_power_with_epsilon(t_s, spec, in_plateau ? band_epsilon(spec, t_s) : 0.0);
}

}  // namespace parkdr
