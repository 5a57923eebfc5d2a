#include "parkdr/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "parkdr/errors.hpp"
#include "parkdr/interpolate.hpp"
#include "parkdr/rng.hpp"

namespace parkdr {

void AugmentationConfig::validate(std::size_t base_len) const {
    if (base_len == 0 || target_points_per_day == 0 ||
        target_points_per_day % base_len != 0) {
        throw DataError("augmentation: target points per day must be a positive "
                        "multiple of the source length");
    }
    if (!(noise_scale >= 0.0) || !std::isfinite(noise_scale)) {
        throw SpecError("augmentation: noise scale must be finite and >= 0");
    }
}

std::vector<LoadProfile> augment_days(const LoadProfile& base,
                                      const AugmentationConfig& cfg) {
    base.validate();
    cfg.validate(base.size());

    const LoadProfile dense = interpolate_profile(base, cfg.target_points_per_day);
    std::vector<LoadProfile> days;
    days.reserve(cfg.days_to_generate);
    for (std::size_t d = 0; d < cfg.days_to_generate; ++d) {
        LoadProfile day = dense;
        day.start = dense.start.plus_minutes(1440.0 * static_cast<double>(d));
        if (cfg.noise_scale > 0.0) {
            // One independent stream per day so days can be generated in
            // any order (or in parallel) with identical results.
            SplitMix64 rng(SplitMix64::mix(cfg.noise_seed, d));
            for (double& v : day.values_kw) {
                v = std::max(0.0, v + cfg.noise_scale * v * rng.next_gaussian());
            }
        }
        days.push_back(std::move(day));
    }
    return days;
}

ResidualCorrector fit_residual_corrector(const std::vector<LoadProfile>& physics,
                                         const std::vector<LoadProfile>& measured) {
    if (physics.empty() || measured.empty()) {
        throw DataError("fit_residual_corrector: no data");
    }
    if (physics.size() != measured.size()) {
        throw DataError("fit_residual_corrector: need one measured day per physics day");
    }
    const std::size_t slots = physics.front().size();
    for (std::size_t d = 0; d < physics.size(); ++d) {
        if (physics[d].size() != slots || measured[d].size() != slots) {
            throw DataError("fit_residual_corrector: mismatched sample counts");
        }
    }

    ResidualCorrector corrector;
    corrector.slot_offset_kw.assign(slots, 0.0);
    for (std::size_t s = 0; s < slots; ++s) {
        double sum = 0.0;
        for (std::size_t d = 0; d < physics.size(); ++d) {
            sum += measured[d].values_kw[s] - physics[d].values_kw[s];
        }
        corrector.slot_offset_kw[s] = sum / static_cast<double>(physics.size());
    }

    // Deviation left after removing the slot means, pooled over all days.
    double ss = 0.0;
    for (std::size_t s = 0; s < slots; ++s) {
        for (std::size_t d = 0; d < physics.size(); ++d) {
            const double r = measured[d].values_kw[s] - physics[d].values_kw[s] -
                             corrector.slot_offset_kw[s];
            ss += r * r;
        }
    }
    corrector.deviation_scale_kw =
        std::sqrt(ss / static_cast<double>(slots * physics.size()));
    return corrector;
}

LoadProfile fuse_physics_data(const LoadProfile& physics,
                              const ResidualCorrector& corrector, std::uint64_t seed) {
    physics.validate();
    if (corrector.slot_offset_kw.size() != physics.size()) {
        throw DataError("fuse_physics_data: corrector slot count does not match profile");
    }
    LoadProfile fused = physics;
    SplitMix64 rng(seed);
    for (std::size_t s = 0; s < fused.size(); ++s) {
        double v = fused.values_kw[s] + corrector.slot_offset_kw[s];
        if (corrector.deviation_scale_kw > 0.0) {
            v += corrector.deviation_scale_kw * rng.next_gaussian();
        }
        fused.values_kw[s] = std::max(0.0, v);
    }
    return fused;
}

}  // namespace parkdr
