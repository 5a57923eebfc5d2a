#include "parkdr/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "parkdr/errors.hpp"

namespace parkdr {

namespace {

void require_paired(std::span<const double> a, std::span<const double> b,
                    const char* who) {
    if (a.size() != b.size()) {
        throw DataError(std::string(who) + ": series lengths differ");
    }
    if (a.empty()) {
        throw DataError(std::string(who) + ": empty series");
    }
}

}  // namespace

double delta_q(double q_before, double q_after) {
    return q_before - q_after;
}

double rmse_contribution(std::span<const double> q_before,
                         std::span<const double> q_after) {
    require_paired(q_before, q_after, "rmse_contribution");
    double sum_sq = 0.0;
    for (std::size_t k = 0; k < q_before.size(); ++k) {
        const double d = q_before[k] - q_after[k];
        sum_sq += d * d;
    }
    return std::sqrt(sum_sq / static_cast<double>(q_before.size()));
}

double rmsd(std::span<const double> a, std::span<const double> b) {
    require_paired(a, b, "rmsd");
    double acc = 0.0;
    std::size_t i = 0;
    for (double va : a) {
        const double d = va - b[i++];
        acc = std::fma(d, d, acc);
    }
    return std::sqrt(acc / static_cast<double>(a.size()));
}

double mad(std::span<const double> a, std::span<const double> b) {
    require_paired(a, b, "mad");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::fabs(a[i] - b[i]);
    }
    return acc / static_cast<double>(a.size());
}

double r_square(std::span<const double> y, std::span<const double> y_hat) {
    require_paired(y, y_hat, "r_square");
    if (y.size() < 2) {
        throw DataError("r_square: need at least two samples");
    }
    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= static_cast<double>(y.size());

    double ss_tot = 0.0;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        ss_tot += (y[i] - mean) * (y[i] - mean);
        ss_res += (y[i] - y_hat[i]) * (y[i] - y_hat[i]);
    }
    if (ss_tot == 0.0) {
        throw DataError("r_square: y is constant, variance undefined");
    }
    return 1.0 - ss_res / ss_tot;
}

double peak_to_valley_kw(const LoadProfile& profile) {
    profile.validate();
    const auto [lo, hi] =
        std::minmax_element(profile.values_kw.begin(), profile.values_kw.end());
    return *hi - *lo;
}

ContributionReport make_contribution_report(const std::vector<LoadIndexSeries>& loads) {
    if (loads.empty()) {
        throw DataError("contribution report: no loads");
    }
    const std::size_t n = loads.front().before.size();
    ContributionReport report;
    report.sample_count = n;
    std::vector<double> combined_before(n, 0.0);
    std::vector<double> combined_after(n, 0.0);
    for (const auto& load : loads) {
        if (load.before.size() != n || load.after.size() != n || n == 0) {
            throw DataError("contribution report: mismatched index series");
        }
        LoadContribution c;
        c.load_id = load.load_id;
        double before_total = 0.0;
        double after_total = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            before_total += load.before[k];
            after_total += load.after[k];
            combined_before[k] += load.before[k];
            combined_after[k] += load.after[k];
        }
        c.delta_q = delta_q(before_total, after_total);
        c.delta_eps = rmse_contribution(load.before, load.after);
        report.per_load.push_back(std::move(c));
        report.load_set.push_back(load.load_id);
    }
    report.delta_eps_combined = rmse_contribution(combined_before, combined_after);
    return report;
}

}  // namespace parkdr
