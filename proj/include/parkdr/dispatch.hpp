#pragma once

#include <array>
#include <string>
#include <vector>

#include "parkdr/battery.hpp"
#include "parkdr/load_profile.hpp"

namespace parkdr {

enum class LoadKind { Heating, Rotating, Storage };

const char* to_string(LoadKind kind);

// Incentive demand-response compensation: quadratic in the reduction.
struct DrCostParams {
    double quad_coeff = 0.0;    // currency per kW^2
    double linear_coeff = 0.0;  // currency per kW
    double p_min_kw = 0.0;
    double p_max_kw = 0.0;

    void validate() const;
};

// Compensation for a reduction of p_kw; the reduction must lie within the
// agreed capability band [p_min_kw, p_max_kw] (BoundsError otherwise).
double dr_cost(double p_kw, const DrCostParams& params);

enum class TargetKind { OnlyNight, AllDay, OnlyDaytime };

std::string target_id(TargetKind kind);
TargetKind parse_target(const std::string& id);

// Requested reduction per timestep inside a response window.
struct ResponseTarget {
    TargetKind kind = TargetKind::AllDay;
    std::vector<std::size_t> window;  // sorted, unique timestep indices
    std::vector<double> demand_kw;    // one entry per window index, >= 0

    void validate(std::size_t horizon) const;
};

// Subset of load classes allowed to respond; the seven nonempty
// combinations of {H, R, S}.
struct FlexibleCase {
    bool heating = false;
    bool rotating = false;
    bool storage = false;

    static FlexibleCase parse(const std::string& id);  // "H-R-S", "H-S", "R", ...
    std::string id() const;
    bool contains(LoadKind kind) const;
    int member_count() const;
    bool is_superset_of(const FlexibleCase& other) const;
    static const std::array<FlexibleCase, 7>& all_cases();

    bool operator==(const FlexibleCase& other) const = default;
};

struct PowerInterval {
    double lo_kw = 0.0;
    double hi_kw = 0.0;
};

// Scheduling limits. The optional per-timestep envelopes refine the global
// bounds (empty vector = global bounds everywhere).
struct DispatchParams {
    double p_heat_min_kw = 0.0;
    double p_heat_max_kw = 4500.0;
    double p_rot_min_kw = 0.0;
    double p_rot_max_kw = 4000.0;
    StorageSpec storage;
    std::vector<PowerInterval> heat_envelope;
    std::vector<PowerInterval> rot_envelope;

    // Stock parameter set used by the bundled demo configuration.
    static DispatchParams defaults();

    void validate() const;
};

// Baseline consumption per load class on a common grid.
struct Baselines {
    LoadProfile heating;
    LoadProfile rotating;
    LoadProfile storage;

    std::size_t horizon() const { return heating.size(); }
    double step_h() const { return heating.step_min / 60.0; }

    // All three profiles must share start, step and length.
    void validate() const;
};

// Admissible response interval for a curtailable load at step t: the
// per-step envelope clipped by the global band and by the baseline (a load
// cannot shed more than it draws). An empty intersection degenerates to
// [0, 0]. For Storage this returns the rating interval [0, -P_discharge_max];
// SOC feasibility is the dispatcher's job.
PowerInterval feasible_envelope(LoadKind member, std::size_t t,
                                const DispatchParams& params,
                                const LoadProfile& baseline);

struct DispatchResult {
    double step_h = 1.0;
    std::vector<double> heating_kw;   // response per step, >= 0
    std::vector<double> rotating_kw;  // response per step, >= 0
    std::vector<double> storage_kw;   // discharge response per step, >= 0
    std::vector<double> charge_kw;    // grid charging per step, >= 0
    std::vector<double> soc;          // size T + 1, soc[0] = SOC_0
    double f_pre_kwh = 0.0;
    double f_act_kwh = 0.0;
    double f_kwh = 0.0;               // f_pre - f_act
    double terminal_soc_gap = 0.0;    // SOC_0 - SOC_T left after balancing
    std::vector<std::string> warnings;

    // Total delivered response at step t over all members.
    double response_at(std::size_t t) const {
        return heating_kw[t] + rotating_kw[t] + storage_kw[t];
    }
};

// Greedy dispatcher. Curtailment is allocated in fixed merit order
// (heating, then rotating); storage runs last with a two-pass plan:
// discharge inside the window against remaining demand, funded and then
// balanced by charging scheduled outside the window so that SOC_T returns
// to SOC_0 (discharge is shrunk when charging capacity cannot repay it).
// An unrepayable residue is reported through terminal_soc_gap and a
// warning, never silently.
DispatchResult schedule_dispatch(const FlexibleCase& fcase, const ResponseTarget& target,
                                 const Baselines& baselines,
                                 const DispatchParams& params);

// Exhaustive reference solver on a power lattice of pitch
// power_grid_resolution_kw. Only small instances are accepted: at most
// 6 timesteps, at most 3 member loads and at most 8 lattice levels per
// load per step (SizeError otherwise).
DispatchResult brute_force_dispatch(const FlexibleCase& fcase,
                                    const ResponseTarget& target,
                                    const Baselines& baselines,
                                    const DispatchParams& params,
                                    double power_grid_resolution_kw);

// F = F_pre - F_act. F_act may not exceed F_pre (BoundsError).
double unresponsiveness(double f_pre_kwh, double f_act_kwh);

// Audit a result against every scheduling constraint; returns one message
// per violation (empty means clean). Used by tests and the database build.
std::vector<std::string> check_dispatch_constraints(const DispatchResult& result,
                                                    const FlexibleCase& fcase,
                                                    const ResponseTarget& target,
                                                    const Baselines& baselines,
                                                    const DispatchParams& params);

}  // namespace parkdr
