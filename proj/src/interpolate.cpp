#include "parkdr/interpolate.hpp"

#include <algorithm>
#include <cmath>

#include "parkdr/errors.hpp"

namespace parkdr {

namespace {

// Fritsch-Carlson node slopes: zero at local extrema, otherwise a weighted
// harmonic mean of the adjacent secants, which keeps each cubic piece
// monotone wherever the data is.
double fc_slope(double secant_prev, double secant_next, double h_prev, double h_next) {
    if (secant_prev * secant_next <= 0.0) {
        return 0.0;
    }
    const double w1 = 2.0 * h_next + h_prev;
    const double w2 = h_next + 2.0 * h_prev;
    return (w1 + w2) / (w1 / secant_prev + w2 / secant_next);
}

double hermite(double t, double v0, double v1, double m0, double m1, double h) {
    const double t2 = t * t;
    const double t3 = t2 * t;
    return v0 * (2.0 * t3 - 3.0 * t2 + 1.0) + h * m0 * (t3 - 2.0 * t2 + t) +
           v1 * (-2.0 * t3 + 3.0 * t2) + h * m1 * (t3 - t2);
}

}  // namespace

LoadProfile interpolate_profile(const LoadProfile& profile, std::size_t target_len) {
    profile.validate();
    const std::size_t n = profile.size();
    if (target_len == 0 || target_len % n != 0) {
        throw DataError("interpolate_profile: target length must be a positive "
                        "multiple of the input length");
    }
    const std::size_t k = target_len / n;
    if (k == 1) {
        return profile;
    }

    // Periodic extension: node n is the first sample of the next day, and
    // slope estimates wrap the same way.
    const auto& v = profile.values_kw;
    auto value = [&](std::size_t i) { return v[i % n]; };
    auto slope = [&](std::size_t i) {
        const double prev = value(i + n) - value(i + n - 1);
        const double next = value(i + 1) - value(i);
        return fc_slope(prev, next, 1.0, 1.0);
    };

    LoadProfile out;
    out.start = profile.start;
    out.step_min = profile.step_min / static_cast<double>(k);
    out.values_kw.resize(target_len);
    for (std::size_t j = 0; j < target_len; ++j) {
        const std::size_t i = j / k;
        const std::size_t r = j % k;
        if (r == 0) {
            out.values_kw[j] = v[i];  // node exactness
            continue;
        }
        const double t = static_cast<double>(r) / static_cast<double>(k);
        out.values_kw[j] = hermite(t, value(i), value(i + 1), slope(i), slope(i + 1), 1.0);
    }
    return out;
}

std::vector<double> monotone_cubic_interpolate(const std::vector<double>& xs,
                                               const std::vector<double>& ys,
                                               const std::vector<double>& queries) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw DataError("monotone_cubic_interpolate: need >= 2 paired nodes");
    }
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (!(xs[i] > xs[i - 1])) {
            throw DataError("monotone_cubic_interpolate: nodes must be strictly increasing");
        }
    }
    const std::size_t n = xs.size();
    std::vector<double> secant(n - 1);
    std::vector<double> h(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = xs[i + 1] - xs[i];
        secant[i] = (ys[i + 1] - ys[i]) / h[i];
    }
    std::vector<double> m(n);
    m[0] = secant[0];
    m[n - 1] = secant[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        m[i] = fc_slope(secant[i - 1], secant[i], h[i - 1], h[i]);
    }

    std::vector<double> out;
    out.reserve(queries.size());
    for (double q : queries) {
        const double x = std::clamp(q, xs.front(), xs.back());
        const auto it = std::upper_bound(xs.begin(), xs.end(), x);
        const std::size_t seg =
            std::min<std::size_t>(n - 2, it == xs.begin() ? 0 : (it - xs.begin()) - 1);
        const double t = (x - xs[seg]) / h[seg];
        out.push_back(hermite(t, ys[seg], ys[seg + 1], m[seg], m[seg + 1], h[seg]));
    }
    return out;
}

}  // namespace parkdr
