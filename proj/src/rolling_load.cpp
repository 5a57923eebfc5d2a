#include "parkdr/rolling_load.hpp"

#include <cmath>

#include "parkdr/errors.hpp"

namespace parkdr {

double RollingScheduleSpec::default_finish_start_min() const {
    return rough_start_min +
           rough_pass_count * pulse_width_min +
           (rough_pass_count - 1) * inter_pass_gap_min;
}

void RollingScheduleSpec::validate() const {
    if (!(pulse_power_kw >= 0.0) || !std::isfinite(pulse_power_kw)) {
        throw SpecError("rolling: pulse power must be finite and >= 0");
    }
    if (!(pulse_width_min > 0.0) || !std::isfinite(pulse_width_min)) {
        throw SpecError("rolling: pulse width must be > 0");
    }
    if (rough_pass_count < 1 || rough_pass_count % 2 == 0) {
        throw SpecError("rolling: rough pass count must be odd and >= 1");
    }
    if (finishing_mill_count < 0) {
        throw SpecError("rolling: finishing mill count must be >= 0");
    }
    if (!(inter_pass_gap_min >= 0.0)) {
        throw SpecError("rolling: inter-pass gap must be >= 0");
    }
    if (rough_offsets_min.size() != finish_offsets_min.size()) {
        throw SpecError("rolling: rough and finishing offset lists must pair per billet");
    }
    auto check_offsets = [](const std::vector<double>& offsets, const char* which) {
        if (offsets.empty()) return;
        if (offsets.front() != 0.0) {
            throw SpecError(std::string("rolling: first ") + which + " offset must be 0");
        }
        for (std::size_t i = 1; i < offsets.size(); ++i) {
            if (!(offsets[i] >= offsets[i - 1]) || !std::isfinite(offsets[i])) {
                throw SpecError(std::string("rolling: ") + which +
                                " offsets must be finite and non-decreasing");
            }
        }
    };
    check_offsets(rough_offsets_min, "rough");
    check_offsets(finish_offsets_min, "finishing");
}

double gate_power(double t_min, double start_min, double width_min, double amplitude_kw) {
    if (!std::isfinite(t_min) || !std::isfinite(start_min) || !std::isfinite(width_min) ||
        !std::isfinite(amplitude_kw)) {
        throw SpecError("gate_power: non-finite input");
    }
    if (!(width_min > 0.0)) {
        throw SpecError("gate_power: width must be > 0");
    }
    if (!(amplitude_kw >= 0.0)) {
        throw SpecError("gate_power: amplitude must be >= 0");
    }
    return (t_min >= start_min && t_min <= start_min + width_min) ? amplitude_kw : 0.0;
}

namespace {

// Power of one pulse train (count back-to-back passes) evaluated at t.
double train_power(double t_min, double train_start_min, int count,
                   const RollingScheduleSpec& spec) {
    double total = 0.0;
    const double stride = spec.pulse_width_min + spec.inter_pass_gap_min;
    for (int pass = 0; pass < count; ++pass) {
        total += gate_power(t_min, train_start_min + pass * stride, spec.pulse_width_min,
                            spec.pulse_power_kw);
    }
    return total;
}

}  // namespace

double rolling_line_power(double t_min, const RollingScheduleSpec& spec) {
    spec.validate();
    if (!std::isfinite(t_min)) {
        throw SpecError("rolling_line_power: non-finite time");
    }
    const double finish_start =
        spec.finish_start_min.value_or(spec.default_finish_start_min());
    double total = 0.0;
    for (std::size_t billet = 0; billet < spec.billet_count(); ++billet) {
        // Shift the billet-1 trains by this billet's entry offsets.
        total += train_power(t_min - spec.rough_offsets_min[billet], spec.rough_start_min,
                             spec.rough_pass_count, spec);
        total += train_power(t_min - spec.finish_offsets_min[billet], finish_start,
                             spec.finishing_mill_count, spec);
    }
    return total;
}

std::vector<GatePulse> rolling_pulse_train(const RollingScheduleSpec& spec) {
    spec.validate();
    const double finish_start =
        spec.finish_start_min.value_or(spec.default_finish_start_min());
    const double stride = spec.pulse_width_min + spec.inter_pass_gap_min;
    std::vector<GatePulse> pulses;
    pulses.reserve(spec.billet_count() *
                   (spec.rough_pass_count + spec.finishing_mill_count));
    for (std::size_t billet = 0; billet < spec.billet_count(); ++billet) {
        for (int pass = 0; pass < spec.rough_pass_count; ++pass) {
            pulses.push_back({spec.rough_start_min + spec.rough_offsets_min[billet] +
                                  pass * stride,
                              spec.pulse_width_min, spec.pulse_power_kw});
        }
        for (int mill = 0; mill < spec.finishing_mill_count; ++mill) {
            pulses.push_back({finish_start + spec.finish_offsets_min[billet] +
                                  mill * stride,
                              spec.pulse_width_min, spec.pulse_power_kw});
        }
    }
    return pulses;
}

}  // namespace parkdr
