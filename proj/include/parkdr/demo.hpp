#pragma once

#include <cstdint>
#include <vector>

#include "parkdr/dispatch.hpp"
#include "parkdr/furnace_load.hpp"
#include "parkdr/load_profile.hpp"
#include "parkdr/rolling_load.hpp"

namespace parkdr {

// Bundled synthetic park: one refining furnace, one rolling line and one
// storage unit, simulated over a single day. Stands in for real metering
// data in the CLI defaults, the golden files and the test suite.

inline constexpr std::uint64_t kDemoSeed = 20190301;

// Day the demo profiles start on.
DateTime demo_start();

RollingScheduleSpec demo_rolling_spec();
std::vector<FurnaceCycleSpec> demo_furnace_cycles(std::uint64_t seed = kDemoSeed);

LoadProfile demo_heating_profile(double step_min = 60.0,
                                 std::uint64_t seed = kDemoSeed);
LoadProfile demo_rotating_profile(double step_min = 60.0);

// Charge in the early-morning valley, discharge in the evening peak;
// validated step by step against the SOC recursion.
LoadProfile demo_storage_profile(double step_min, const StorageSpec& spec);

Baselines demo_baselines(double step_min = 60.0, std::uint64_t seed = kDemoSeed);

// The three stock response scenarios over a day of `horizon` steps of
// `step_min` minutes: night hours 22-06, all day, daytime hours 08-18.
std::vector<ResponseTarget> demo_targets(std::size_t horizon, double step_min = 60.0);

}  // namespace parkdr
