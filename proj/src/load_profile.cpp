#include "parkdr/load_profile.hpp"

#include <cmath>

#include "parkdr/errors.hpp"

namespace parkdr {

void LoadProfile::validate() const {
    if (!(step_min > 0.0) || !std::isfinite(step_min)) {
        throw SpecError("LoadProfile: step must be a positive finite number of minutes");
    }
    if (values_kw.empty()) {
        throw SpecError("LoadProfile: values must be nonempty");
    }
    for (double v : values_kw) {
        if (!std::isfinite(v)) {
            throw SpecError("LoadProfile: all samples must be finite");
        }
    }
}

}  // namespace parkdr
