#pragma once

#include <cstddef>
#include <vector>

#include "parkdr/datetime.hpp"

namespace parkdr {

// Uniformly sampled power time series, the common currency of the toolkit.
// `values_kw[i]` is the power at `start + i * step_min`.
struct LoadProfile {
    DateTime start;
    double step_min = 60.0;
    std::vector<double> values_kw;

    std::size_t size() const { return values_kw.size(); }
    double duration_min() const { return step_min * static_cast<double>(size()); }

    // Throws SpecError unless step > 0, values nonempty and all samples finite.
    void validate() const;

    bool operator==(const LoadProfile& other) const = default;
};

}  // namespace parkdr
