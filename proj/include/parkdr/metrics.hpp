#pragma once

#include <span>
#include <string>
#include <vector>

#include "parkdr/load_profile.hpp"

namespace parkdr {

// Response contribution of a single load: index before minus index after.
double delta_q(double q_before, double q_after);

// RMSE-based contribution over paired index series (the larger, the bigger
// the contribution of the responding loads).
double rmse_contribution(std::span<const double> q_before,
                         std::span<const double> q_after);

// Model-quality deviations between two series of equal length.
double rmsd(std::span<const double> a, std::span<const double> b);
double mad(std::span<const double> a, std::span<const double> b);

// Goodness of fit 1 - SS_res / SS_tot, reported raw (negative for fits
// worse than the mean predictor). y must not be constant.
double r_square(std::span<const double> y, std::span<const double> y_hat);

// Built-in index extractors.
double peak_to_valley_kw(const LoadProfile& profile);

// Response index series of one load before and after it responded.
struct LoadIndexSeries {
    std::string load_id;
    std::vector<double> before;
    std::vector<double> after;
};

struct LoadContribution {
    std::string load_id;
    double delta_q = 0.0;    // index total before - after
    double delta_eps = 0.0;  // RMSE-based contribution of this load alone
};

// Contribution summary over a set of responding loads.
struct ContributionReport {
    std::vector<LoadContribution> per_load;
    double delta_eps_combined = 0.0;  // over the summed series of the set
    std::size_t sample_count = 0;
    std::vector<std::string> load_set;
};

ContributionReport make_contribution_report(const std::vector<LoadIndexSeries>& loads);

}  // namespace parkdr
