#pragma once

#include <cstdint>
#include <vector>

#include "parkdr/load_profile.hpp"

namespace parkdr {

// Multi-day synthesis settings: densify to target_points_per_day, then
// derive days_to_generate distinct days by adding seeded noise scaled by
// the local load level.
struct AugmentationConfig {
    std::size_t target_points_per_day = 96;
    std::size_t days_to_generate = 0;
    std::uint64_t noise_seed = 0;
    double noise_scale = 0.0;  // fraction of the local load level

    void validate(std::size_t base_len) const;
};

// Generate per-day variants of a base day. Day d starts one day after
// day d-1; identical (base, cfg) inputs reproduce identical output.
std::vector<LoadProfile> augment_days(const LoadProfile& base,
                                      const AugmentationConfig& cfg);

// Residual model bridging a physics profile to measurements: a per-slot
// mean offset plus a pooled random-deviation scale.
struct ResidualCorrector {
    std::vector<double> slot_offset_kw;
    double deviation_scale_kw = 0.0;

    bool operator==(const ResidualCorrector& other) const = default;
};

// Fit the corrector on paired (physics, measured) days. All profiles must
// share one sample count; empty input raises DataError.
ResidualCorrector fit_residual_corrector(const std::vector<LoadProfile>& physics,
                                         const std::vector<LoadProfile>& measured);

// Correct a physics profile: add the per-slot offsets plus a seeded
// zero-mean deviation of the fitted scale, clipped at 0 kW.
LoadProfile fuse_physics_data(const LoadProfile& physics,
                              const ResidualCorrector& corrector, std::uint64_t seed);

}  // namespace parkdr
