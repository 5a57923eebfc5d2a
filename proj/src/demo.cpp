#include "parkdr/demo.hpp"

#include <cmath>

#include "parkdr/battery.hpp"
#include "parkdr/errors.hpp"

namespace parkdr {

DateTime demo_start() { return DateTime{2019, 3, 1, 0, 0, 0}; }

RollingScheduleSpec demo_rolling_spec() {
    RollingScheduleSpec spec;
    spec.pulse_power_kw = 3200.0;
    spec.pulse_width_min = 45.0;
    spec.rough_pass_count = 5;
    spec.finishing_mill_count = 7;
    spec.rough_offsets_min = {0.0, 60.0, 120.0, 180.0};
    spec.finish_offsets_min = {0.0, 60.0, 120.0, 180.0};
    spec.rough_start_min = 360.0;  // line starts at 06:00
    return spec;
}

std::vector<FurnaceCycleSpec> demo_furnace_cycles(std::uint64_t seed) {
    FurnaceCycleSpec morning;
    morning.t_on_s = 4.0 * 3600.0;
    morning.t_off_s = 11.5 * 3600.0;
    morning.ramp_up_s = 90.0;
    morning.ramp_down_s = 120.0;
    morning.rated_power_kw = 4000.0;
    morning.band_halfwidth = 0.05;
    morning.noise_seed = seed;
    morning.noise_interval_s = 600.0;

    FurnaceCycleSpec evening = morning;
    evening.t_on_s = 13.5 * 3600.0;
    evening.t_off_s = 21.5 * 3600.0;
    evening.noise_seed = seed + 1;
    return {morning, evening};
}

LoadProfile demo_heating_profile(double step_min, std::uint64_t seed) {
    const auto cycles = demo_furnace_cycles(seed);
    LoadProfile profile;
    profile.start = demo_start();
    profile.step_min = step_min;
    const auto count = static_cast<std::size_t>(std::llround(1440.0 / step_min));
    profile.values_kw.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double t_s = static_cast<double>(i) * step_min * 60.0;
        double total = 0.0;
        for (const auto& cycle : cycles) {
            total += eaf_power(t_s, cycle);
        }
        profile.values_kw.push_back(total);
    }
    return profile;
}

LoadProfile demo_rotating_profile(double step_min) {
    const auto spec = demo_rolling_spec();
    LoadProfile profile;
    profile.start = demo_start();
    profile.step_min = step_min;
    const auto count = static_cast<std::size_t>(std::llround(1440.0 / step_min));
    profile.values_kw.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        profile.values_kw.push_back(
            rolling_line_power(static_cast<double>(i) * step_min, spec));
    }
    return profile;
}

LoadProfile demo_storage_profile(double step_min, const StorageSpec& spec) {
    spec.validate();
    LoadProfile profile;
    profile.start = demo_start();
    profile.step_min = step_min;
    const auto count = static_cast<std::size_t>(std::llround(1440.0 / step_min));
    const double dt_h = step_min / 60.0;
    const double rate = 0.8 * spec.p_charge_max_kw;
    double soc = spec.soc_initial;
    for (std::size_t i = 0; i < count; ++i) {
        const double hour = static_cast<double>(i) * step_min / 60.0;
        double p = 0.0;
        if (hour >= 1.0 && hour < 6.0) {
            p = rate;  // valley charging
        } else if (hour >= 18.0 && hour < 23.0) {
            p = -rate * spec.eta_charge * spec.eta_discharge;  // peak discharge
        }
        soc = soc_step(soc, std::max(p, 0.0), std::min(p, 0.0), dt_h, spec);
        profile.values_kw.push_back(p);
    }
    return profile;
}

Baselines demo_baselines(double step_min, std::uint64_t seed) {
    Baselines baselines;
    baselines.heating = demo_heating_profile(step_min, seed);
    baselines.rotating = demo_rotating_profile(step_min);
    baselines.storage =
        demo_storage_profile(step_min, DispatchParams::defaults().storage);
    baselines.validate();
    return baselines;
}

std::vector<ResponseTarget> demo_targets(std::size_t horizon, double step_min) {
    const double steps_per_hour = 60.0 / step_min;
    auto hour_steps = [&](double from_h, double to_h) {
        std::vector<std::size_t> steps;
        for (std::size_t t = 0; t < horizon; ++t) {
            const double h = static_cast<double>(t) / steps_per_hour;
            if (h >= from_h && h < to_h) steps.push_back(t);
        }
        return steps;
    };

    ResponseTarget night;
    night.kind = TargetKind::OnlyNight;
    night.window = hour_steps(0.0, 6.0);
    const auto late = hour_steps(22.0, 24.0);
    night.window.insert(night.window.end(), late.begin(), late.end());
    night.demand_kw.assign(night.window.size(), 900.0);

    ResponseTarget all_day;
    all_day.kind = TargetKind::AllDay;
    all_day.window = hour_steps(0.0, 24.0);
    all_day.demand_kw.assign(all_day.window.size(), 400.0);

    ResponseTarget daytime;
    daytime.kind = TargetKind::OnlyDaytime;
    daytime.window = hour_steps(8.0, 18.0);
    daytime.demand_kw.assign(daytime.window.size(), 1100.0);

    return {night, all_day, daytime};
}

}  // namespace parkdr
