#pragma once

#include <vector>

#include "parkdr/load_profile.hpp"

namespace parkdr {

// Shape-preserving (Fritsch-Carlson monotone cubic) resampling of a daily
// profile onto a k-times denser grid. Original samples are reproduced
// exactly at indices i * k; the day wraps, so the tail past the last sample
// interpolates toward the first sample of the next day. target_len must be
// an integer multiple of the input length (DataError otherwise).
LoadProfile interpolate_profile(const LoadProfile& profile, std::size_t target_len);

// Monotone cubic interpolation over arbitrary nodes (xs strictly
// increasing). Evaluates at each query point; queries are clamped to
// [xs.front(), xs.back()]. Used for short missing-data gap fill.
std::vector<double> monotone_cubic_interpolate(const std::vector<double>& xs,
                                               const std::vector<double>& ys,
                                               const std::vector<double>& queries);

}  // namespace parkdr
