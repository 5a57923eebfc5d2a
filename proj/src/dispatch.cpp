#include "parkdr/dispatch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "parkdr/errors.hpp"

namespace parkdr {

namespace {

constexpr double kEnergyTinyKwh = 1e-9;

}  // namespace

const char* to_string(LoadKind kind) {
    switch (kind) {
        case LoadKind::Heating: return "heating";
        case LoadKind::Rotating: return "rotating";
        case LoadKind::Storage: return "storage";
    }
    return "?";
}

void DrCostParams::validate() const {
    if (!(quad_coeff >= 0.0)) {
        throw SpecError("dr_cost: quadratic coefficient must be >= 0");
    }
    if (!(p_min_kw <= p_max_kw)) {
        throw SpecError("dr_cost: need P_min <= P_max");
    }
}

double dr_cost(double p_kw, const DrCostParams& params) {
    params.validate();
    if (!(p_kw >= params.p_min_kw && p_kw <= params.p_max_kw)) {
        throw BoundsError("dr_cost: reduction outside the capability band");
    }
    return params.quad_coeff * p_kw * p_kw + params.linear_coeff * p_kw;
}

std::string target_id(TargetKind kind) {
    switch (kind) {
        case TargetKind::OnlyNight: return "only_night";
        case TargetKind::AllDay: return "all_day";
        case TargetKind::OnlyDaytime: return "only_daytime";
    }
    return "?";
}

TargetKind parse_target(const std::string& id) {
    if (id == "only_night") return TargetKind::OnlyNight;
    if (id == "all_day") return TargetKind::AllDay;
    if (id == "only_daytime") return TargetKind::OnlyDaytime;
    throw SpecError("unknown response target '" + id + "'");
}

void ResponseTarget::validate(std::size_t horizon) const {
    if (window.empty()) {
        throw SpecError("response target: window must be nonempty");
    }
    if (window.size() != demand_kw.size()) {
        throw SpecError("response target: one demand per window step required");
    }
    for (std::size_t i = 0; i < window.size(); ++i) {
        if (window[i] >= horizon) {
            throw SpecError("response target: window index outside the horizon");
        }
        if (i > 0 && window[i] <= window[i - 1]) {
            throw SpecError("response target: window must be sorted and unique");
        }
        if (!(demand_kw[i] >= 0.0) || !std::isfinite(demand_kw[i])) {
            throw SpecError("response target: demand must be finite and >= 0");
        }
    }
}

FlexibleCase FlexibleCase::parse(const std::string& id) {
    FlexibleCase fcase;
    std::size_t pos = 0;
    while (pos < id.size()) {
        const char c = id[pos];
        if (c == 'H' && !fcase.heating) {
            fcase.heating = true;
        } else if (c == 'R' && !fcase.rotating) {
            fcase.rotating = true;
        } else if (c == 'S' && !fcase.storage) {
            fcase.storage = true;
        } else {
            throw SpecError("unknown flexible case '" + id + "'");
        }
        ++pos;
        if (pos < id.size()) {
            if (id[pos] != '-') {
                throw SpecError("unknown flexible case '" + id + "'");
            }
            ++pos;
        }
    }
    if (fcase.member_count() == 0) {
        throw SpecError("flexible case must contain at least one load class");
    }
    if (fcase.id() != id) {
        throw SpecError("flexible case '" + id + "' is not in canonical H-R-S order");
    }
    return fcase;
}

std::string FlexibleCase::id() const {
    std::string out;
    auto add = [&out](const char* tag) {
        if (!out.empty()) out += '-';
        out += tag;
    };
    if (heating) add("H");
    if (rotating) add("R");
    if (storage) add("S");
    return out;
}

bool FlexibleCase::contains(LoadKind kind) const {
    switch (kind) {
        case LoadKind::Heating: return heating;
        case LoadKind::Rotating: return rotating;
        case LoadKind::Storage: return storage;
    }
    return false;
}

int FlexibleCase::member_count() const {
    return static_cast<int>(heating) + static_cast<int>(rotating) +
           static_cast<int>(storage);
}

bool FlexibleCase::is_superset_of(const FlexibleCase& other) const {
    return (heating || !other.heating) && (rotating || !other.rotating) &&
           (storage || !other.storage);
}

const std::array<FlexibleCase, 7>& FlexibleCase::all_cases() {
    static const std::array<FlexibleCase, 7> cases = {{
        {true, true, true},
        {true, true, false},
        {true, false, true},
        {false, true, true},
        {false, false, true},
        {false, true, false},
        {true, false, false},
    }};
    return cases;
}

DispatchParams DispatchParams::defaults() {
    DispatchParams params;
    params.p_heat_min_kw = 0.0;
    params.p_heat_max_kw = 4500.0;
    params.p_rot_min_kw = 0.0;
    params.p_rot_max_kw = 4000.0;
    params.storage.capacity_kwh = 7500.0;
    params.storage.p_charge_max_kw = 1000.0;
    params.storage.p_discharge_max_kw = -1000.0;
    params.storage.soc_min = 0.3;
    params.storage.soc_max = 0.95;
    params.storage.soc_initial = 0.4;
    params.storage.eta_charge = 1.0;
    params.storage.eta_discharge = 1.0;
    return params;
}

void DispatchParams::validate() const {
    if (!(p_heat_min_kw <= p_heat_max_kw) || !(p_rot_min_kw <= p_rot_max_kw)) {
        throw SpecError("dispatch params: need min <= max for both curtailable bands");
    }
    storage.validate();
    auto check_envelope = [](const std::vector<PowerInterval>& env, double lo, double hi,
                             const char* which) {
        for (const auto& iv : env) {
            if (!(iv.lo_kw <= iv.hi_kw) || iv.lo_kw < lo || iv.hi_kw > hi) {
                throw SpecError(std::string("dispatch params: ") + which +
                                " envelope outside the global band");
            }
        }
    };
    check_envelope(heat_envelope, p_heat_min_kw, p_heat_max_kw, "heating");
    check_envelope(rot_envelope, p_rot_min_kw, p_rot_max_kw, "rotating");
}

void Baselines::validate() const {
    heating.validate();
    rotating.validate();
    storage.validate();
    if (heating.size() != rotating.size() || heating.size() != storage.size() ||
        heating.step_min != rotating.step_min || heating.step_min != storage.step_min ||
        !(heating.start == rotating.start) || !(heating.start == storage.start)) {
        throw SpecError("baselines: all three profiles must share one timestep grid");
    }
}

PowerInterval feasible_envelope(LoadKind member, std::size_t t,
                                const DispatchParams& params,
                                const LoadProfile& baseline) {
    params.validate();
    baseline.validate();
    if (t >= baseline.size()) {
        throw SpecError("feasible_envelope: timestep outside the baseline");
    }
    if (member == LoadKind::Storage) {
        return {0.0, -params.storage.p_discharge_max_kw};
    }
    const bool is_heat = member == LoadKind::Heating;
    const auto& env = is_heat ? params.heat_envelope : params.rot_envelope;
    double lo = is_heat ? params.p_heat_min_kw : params.p_rot_min_kw;
    double hi = is_heat ? params.p_heat_max_kw : params.p_rot_max_kw;
    if (!env.empty()) {
        if (env.size() != baseline.size()) {
            throw SpecError("feasible_envelope: envelope length does not match the grid");
        }
        lo = std::max(lo, env[t].lo_kw);
        hi = std::min(hi, env[t].hi_kw);
    }
    // A load can only shed power it is actually drawing.
    lo = std::max(lo, 0.0);
    hi = std::min(hi, baseline.values_kw[t]);
    if (lo > hi) {
        return {0.0, 0.0};
    }
    return {lo, hi};
}

double unresponsiveness(double f_pre_kwh, double f_act_kwh) {
    if (!(f_pre_kwh >= 0.0) || !(f_act_kwh >= 0.0)) {
        throw BoundsError("unresponsiveness: indicators must be >= 0");
    }
    if (f_act_kwh > f_pre_kwh) {
        throw BoundsError("unresponsiveness: actual response exceeds the expected one");
    }
    return f_pre_kwh - f_act_kwh;
}

namespace {

// ---------------------------------------------------------------------
// Storage planning. All bookkeeping below is in stored kWh so that the
// trajectory ledger matches the SOC recursion exactly.
// ---------------------------------------------------------------------

struct StorageLedger {
    double e_min_kwh = 0.0;
    double e_max_kwh = 0.0;
    double e0_kwh = 0.0;
    double dt_h = 1.0;
    double eta_c = 1.0;
    double eta_d = 1.0;
    double charge_rate_kw = 0.0;
    double discharge_rate_kw = 0.0;  // positive magnitude
};

struct StoragePlan {
    std::vector<double> discharge_kw;  // delivered response, >= 0
    std::vector<double> charge_kw;     // grid draw, >= 0
    std::vector<double> level_kwh;     // size T + 1
};

void replay_levels(const StorageLedger& led, StoragePlan& plan) {
    const std::size_t horizon = plan.discharge_kw.size();
    plan.level_kwh.assign(horizon + 1, led.e0_kwh);
    for (std::size_t t = 0; t < horizon; ++t) {
        plan.level_kwh[t + 1] = plan.level_kwh[t] +
                                led.eta_c * plan.charge_kw[t] * led.dt_h -
                                plan.discharge_kw[t] / led.eta_d * led.dt_h;
    }
}

// Add `need_kwh` of stored energy before step `before`, latest slots first.
// The added energy is consumed at `before`, so the upper bound only needs
// checking up to that step. Returns the stored kWh actually placed.
double fund_before(StoragePlan& plan, const StorageLedger& led,
                   const std::vector<bool>& in_window, std::size_t before,
                   double need_kwh) {
    double placed = 0.0;
    for (std::size_t s = before; s-- > 0 && need_kwh > kEnergyTinyKwh;) {
        if (in_window[s]) continue;
        const double rate_room_kw = led.charge_rate_kw - plan.charge_kw[s];
        const double rate_room_kwh = rate_room_kw * led.eta_c * led.dt_h;
        if (rate_room_kwh <= kEnergyTinyKwh) continue;
        double head = std::numeric_limits<double>::infinity();
        for (std::size_t i = s + 1; i <= before; ++i) {
            head = std::min(head, led.e_max_kwh - plan.level_kwh[i]);
        }
        double take = std::min({need_kwh, rate_room_kwh, std::max(head, 0.0)});
        if (take <= kEnergyTinyKwh) continue;
        double add_kw = take / (led.eta_c * led.dt_h);
        double new_kw = plan.charge_kw[s] + add_kw;
        if (new_kw > led.charge_rate_kw) {  // conversion round-off
            new_kw = led.charge_rate_kw;
            add_kw = new_kw - plan.charge_kw[s];
            take = add_kw * led.eta_c * led.dt_h;
            if (take <= kEnergyTinyKwh) continue;
        }
        plan.charge_kw[s] = new_kw;
        for (std::size_t i = s + 1; i < plan.level_kwh.size(); ++i) {
            plan.level_kwh[i] += take;
        }
        placed += take;
        need_kwh -= take;
    }
    return placed;
}

// Add up to `need_kwh` of stored energy anywhere outside the window,
// latest slots first; this charge persists to the end of the horizon, so
// the upper bound is checked through to the terminal level. With
// `commit == false` only the obtainable total is reported.
double restore_charge(StoragePlan& plan, const StorageLedger& led,
                      const std::vector<bool>& in_window, double need_kwh, bool commit) {
    const std::size_t horizon = plan.discharge_kw.size();
    StoragePlan scratch;
    StoragePlan& work = commit ? plan : (scratch = plan, scratch);
    double placed = 0.0;
    for (std::size_t s = horizon; s-- > 0 && need_kwh > kEnergyTinyKwh;) {
        if (in_window[s]) continue;
        const double rate_room_kw = led.charge_rate_kw - work.charge_kw[s];
        const double rate_room_kwh = rate_room_kw * led.eta_c * led.dt_h;
        if (rate_room_kwh <= kEnergyTinyKwh) continue;
        double head = std::numeric_limits<double>::infinity();
        for (std::size_t i = s + 1; i <= horizon; ++i) {
            head = std::min(head, led.e_max_kwh - work.level_kwh[i]);
        }
        double take = std::min({need_kwh, rate_room_kwh, std::max(head, 0.0)});
        if (take <= kEnergyTinyKwh) continue;
        double add_kw = take / (led.eta_c * led.dt_h);
        double new_kw = work.charge_kw[s] + add_kw;
        if (new_kw > led.charge_rate_kw) {  // conversion round-off
            new_kw = led.charge_rate_kw;
            add_kw = new_kw - work.charge_kw[s];
            take = add_kw * led.eta_c * led.dt_h;
            if (take <= kEnergyTinyKwh) continue;
        }
        work.charge_kw[s] = new_kw;
        for (std::size_t i = s + 1; i <= horizon; ++i) {
            work.level_kwh[i] += take;
        }
        placed += take;
        need_kwh -= take;
    }
    return placed;
}

// Plan discharges against `caps` (meter kW per step), funding them with
// pre-window charging where the stored reserve is short.
StoragePlan plan_discharges(const StorageLedger& led, const std::vector<bool>& in_window,
                            const std::vector<double>& caps_kw) {
    const std::size_t horizon = caps_kw.size();
    StoragePlan plan;
    plan.discharge_kw.assign(horizon, 0.0);
    plan.charge_kw.assign(horizon, 0.0);
    replay_levels(led, plan);
    for (std::size_t t = 0; t < horizon; ++t) {
        if (!in_window[t]) continue;
        const double want_meter_kw =
            std::min(caps_kw[t], led.discharge_rate_kw);
        if (want_meter_kw <= 0.0) continue;
        const double want_stored_kwh = want_meter_kw * led.dt_h / led.eta_d;
        double reserve_kwh = plan.level_kwh[t] - led.e_min_kwh;
        if (reserve_kwh + kEnergyTinyKwh < want_stored_kwh) {
            fund_before(plan, led, in_window, t, want_stored_kwh - reserve_kwh);
            reserve_kwh = plan.level_kwh[t] - led.e_min_kwh;
        }
        double dis_stored_kwh =
            std::min(want_stored_kwh, std::max(reserve_kwh, 0.0));
        if (dis_stored_kwh <= kEnergyTinyKwh) continue;
        double dis_kw = dis_stored_kwh * led.eta_d / led.dt_h;
        if (dis_kw > want_meter_kw) {  // conversion round-off
            dis_kw = want_meter_kw;
            dis_stored_kwh = dis_kw * led.dt_h / led.eta_d;
        }
        plan.discharge_kw[t] = dis_kw;
        for (std::size_t i = t + 1; i < plan.level_kwh.size(); ++i) {
            plan.level_kwh[i] -= dis_stored_kwh;
        }
    }
    return plan;
}

// Full storage plan: size discharges, then balance the terminal level back
// to the initial one, shrinking discharge whenever charging cannot repay
// it. Returns the plan plus the unrepayable stored-energy gap (>= 0).
std::pair<StoragePlan, double> plan_storage(const StorageLedger& led,
                                            const std::vector<bool>& in_window,
                                            std::vector<double> caps_kw) {
    const std::size_t horizon = caps_kw.size();
    const std::size_t max_rounds = 2 * horizon + 8;
    StoragePlan plan;
    for (std::size_t round = 0; round < max_rounds; ++round) {
        plan = plan_discharges(led, in_window, caps_kw);
        double deficit_kwh = led.e0_kwh - plan.level_kwh[horizon];
        if (deficit_kwh <= kEnergyTinyKwh) {
            return {plan, std::max(deficit_kwh, 0.0)};
        }
        const double restorable_kwh =
            restore_charge(plan, led, in_window, deficit_kwh, /*commit=*/false);
        if (restorable_kwh + kEnergyTinyKwh >= deficit_kwh) {
            restore_charge(plan, led, in_window, deficit_kwh, /*commit=*/true);
            return {plan, std::max(led.e0_kwh - plan.level_kwh[horizon], 0.0)};
        }
        // Charging cannot repay everything: give back the worst-funded tail
        // discharges and replan.
        double cut_meter_kwh = (deficit_kwh - restorable_kwh) * led.eta_d;
        bool shrank = false;
        for (std::size_t t = horizon; t-- > 0 && cut_meter_kwh > kEnergyTinyKwh;) {
            if (plan.discharge_kw[t] <= 0.0) continue;
            const double have_kwh = plan.discharge_kw[t] * led.dt_h;
            const double cut = std::min(have_kwh, cut_meter_kwh);
            caps_kw[t] = std::max(0.0, plan.discharge_kw[t] - cut / led.dt_h);
            cut_meter_kwh -= cut;
            shrank = true;
        }
        if (!shrank) break;
    }
    // Could not converge: fall back to the trivially balanced empty plan.
    std::fill(caps_kw.begin(), caps_kw.end(), 0.0);
    plan = plan_discharges(led, in_window, caps_kw);
    return {plan, led.e0_kwh - plan.level_kwh[horizon]};
}

}  // namespace

DispatchResult schedule_dispatch(const FlexibleCase& fcase, const ResponseTarget& target,
                                 const Baselines& baselines,
                                 const DispatchParams& params) {
    baselines.validate();
    params.validate();
    const std::size_t horizon = baselines.horizon();
    target.validate(horizon);
    if (fcase.member_count() == 0) {
        throw SpecError("schedule_dispatch: empty flexible case");
    }

    const double dt_h = baselines.step_h();
    std::vector<double> demand_kw(horizon, 0.0);
    std::vector<bool> in_window(horizon, false);
    for (std::size_t i = 0; i < target.window.size(); ++i) {
        demand_kw[target.window[i]] = target.demand_kw[i];
        in_window[target.window[i]] = true;
    }

    DispatchResult result;
    result.step_h = dt_h;
    result.heating_kw.assign(horizon, 0.0);
    result.rotating_kw.assign(horizon, 0.0);
    result.storage_kw.assign(horizon, 0.0);
    result.charge_kw.assign(horizon, 0.0);

    // Curtailment, fixed merit order H then R.
    std::vector<double> residual_kw(horizon, 0.0);
    for (std::size_t t = 0; t < horizon; ++t) {
        if (!in_window[t]) continue;
        double remaining = demand_kw[t];
        if (fcase.heating) {
            const auto env = feasible_envelope(LoadKind::Heating, t, params,
                                               baselines.heating);
            double take = std::min(remaining, env.hi_kw);
            if (take < env.lo_kw) take = 0.0;
            result.heating_kw[t] = take;
            remaining -= take;
        }
        if (fcase.rotating) {
            const auto env = feasible_envelope(LoadKind::Rotating, t, params,
                                               baselines.rotating);
            double take = std::min(remaining, env.hi_kw);
            if (take < env.lo_kw) take = 0.0;
            result.rotating_kw[t] = take;
            remaining -= take;
        }
        residual_kw[t] = remaining;
    }

    // Storage mops up what curtailment left over.
    const StorageSpec& ss = params.storage;
    result.soc.assign(horizon + 1, ss.soc_initial);
    if (fcase.storage) {
        StorageLedger led;
        led.e_min_kwh = ss.soc_min * ss.capacity_kwh;
        led.e_max_kwh = ss.soc_max * ss.capacity_kwh;
        led.e0_kwh = ss.soc_initial * ss.capacity_kwh;
        led.dt_h = dt_h;
        led.eta_c = ss.eta_charge;
        led.eta_d = ss.eta_discharge;
        led.charge_rate_kw = ss.p_charge_max_kw;
        led.discharge_rate_kw = -ss.p_discharge_max_kw;
        auto [plan, gap_kwh] = plan_storage(led, in_window, residual_kw);
        result.storage_kw = plan.discharge_kw;
        result.charge_kw = plan.charge_kw;
        for (std::size_t i = 0; i <= horizon; ++i) {
            result.soc[i] = plan.level_kwh[i] / ss.capacity_kwh;
        }
        result.terminal_soc_gap = gap_kwh / ss.capacity_kwh;
        if (result.terminal_soc_gap > 1e-9) {
            result.warnings.push_back(
                "storage terminal SOC not restored, best-effort gap = " +
                std::to_string(result.terminal_soc_gap));
        }
    }

    // Unmet demand stays exact: every allocation above was clipped at the
    // then-remaining demand.
    double f_pre = 0.0;
    double f_unmet = 0.0;
    for (std::size_t t = 0; t < horizon; ++t) {
        if (!in_window[t]) continue;
        f_pre += demand_kw[t] * dt_h;
        const double unmet =
            std::max(0.0, residual_kw[t] - result.storage_kw[t]);
        f_unmet += unmet * dt_h;
    }
    result.f_pre_kwh = f_pre;
    result.f_kwh = f_unmet;
    result.f_act_kwh = f_pre - f_unmet;
    return result;
}

namespace {

// Lattice of admissible responses: multiples of the pitch up to the cap,
// plus the cap itself.
std::vector<double> level_set(double cap_kw, double pitch_kw) {
    std::vector<double> levels{0.0};
    if (cap_kw <= 0.0) return levels;
    for (double v = pitch_kw; v < cap_kw - 1e-12; v += pitch_kw) {
        levels.push_back(v);
    }
    levels.push_back(cap_kw);
    return levels;
}

struct OracleSearch {
    const StorageLedger* led = nullptr;
    const std::vector<bool>* in_window = nullptr;
    std::vector<std::vector<double>> level_options;  // per step: charge or discharge levels
    std::vector<double> residual_kw;
    double dt_h = 1.0;
    bool has_storage = false;

    std::vector<double> current_dis, current_chg;
    std::vector<double> best_dis, best_chg;
    double best_unmet_kwh = std::numeric_limits<double>::infinity();

    void run() {
        current_dis.assign(residual_kw.size(), 0.0);
        current_chg.assign(residual_kw.size(), 0.0);
        descend(0, led->e0_kwh, 0.0);
    }

    void descend(std::size_t t, double level_kwh, double unmet_so_far_kwh) {
        if (unmet_so_far_kwh >= best_unmet_kwh) {
            return;  // cannot improve
        }
        if (t == residual_kw.size()) {
            if (std::fabs(level_kwh - led->e0_kwh) <= kEnergyTinyKwh &&
                unmet_so_far_kwh < best_unmet_kwh) {
                best_unmet_kwh = unmet_so_far_kwh;
                best_dis = current_dis;
                best_chg = current_chg;
            }
            return;
        }
        for (double level : level_options[t]) {
            double next_level = level_kwh;
            double unmet = std::max(0.0, residual_kw[t]) * dt_h;
            if ((*in_window)[t]) {
                next_level -= level / led->eta_d * dt_h;
                if (next_level < led->e_min_kwh - kEnergyTinyKwh) continue;
                unmet = std::max(0.0, residual_kw[t] - level) * dt_h;
                current_dis[t] = level;
                current_chg[t] = 0.0;
            } else {
                next_level += led->eta_c * level * dt_h;
                if (next_level > led->e_max_kwh + kEnergyTinyKwh) continue;
                unmet = 0.0;
                current_dis[t] = 0.0;
                current_chg[t] = level;
            }
            descend(t + 1, next_level, unmet_so_far_kwh + unmet);
        }
        current_dis[t] = 0.0;
        current_chg[t] = 0.0;
    }
};

}  // namespace

DispatchResult brute_force_dispatch(const FlexibleCase& fcase,
                                    const ResponseTarget& target,
                                    const Baselines& baselines,
                                    const DispatchParams& params,
                                    double power_grid_resolution_kw) {
    baselines.validate();
    params.validate();
    const std::size_t horizon = baselines.horizon();
    target.validate(horizon);
    if (!(power_grid_resolution_kw > 0.0)) {
        throw SpecError("brute_force_dispatch: resolution must be > 0");
    }
    if (horizon > 6) {
        throw SizeError("brute_force_dispatch: more than 6 timesteps");
    }
    if (fcase.member_count() > 3) {
        throw SizeError("brute_force_dispatch: more than 3 member loads");
    }

    const double dt_h = baselines.step_h();
    const double pitch = power_grid_resolution_kw;
    std::vector<double> demand_kw(horizon, 0.0);
    std::vector<bool> in_window(horizon, false);
    for (std::size_t i = 0; i < target.window.size(); ++i) {
        demand_kw[target.window[i]] = target.demand_kw[i];
        in_window[target.window[i]] = true;
    }

    auto bounded_levels = [&](double cap_kw, const char* who) {
        auto levels = level_set(cap_kw, pitch);
        if (levels.size() > 8) {
            throw SizeError(std::string("brute_force_dispatch: more than 8 ") + who +
                            " levels per step");
        }
        return levels;
    };

    DispatchResult result;
    result.step_h = dt_h;
    result.heating_kw.assign(horizon, 0.0);
    result.rotating_kw.assign(horizon, 0.0);
    result.storage_kw.assign(horizon, 0.0);
    result.charge_kw.assign(horizon, 0.0);

    // Curtailment decisions do not couple across steps, and shifting a unit
    // of response from storage to curtailment never hurts (storage loses at
    // most what curtailment gained), so the per-step exhaustive maximum over
    // the (heating x rotating) lattice is jointly optimal.
    std::vector<double> residual_kw = demand_kw;
    for (std::size_t t = 0; t < horizon; ++t) {
        if (!in_window[t]) continue;
        std::vector<double> h_levels{0.0};
        std::vector<double> r_levels{0.0};
        if (fcase.heating) {
            const auto env = feasible_envelope(LoadKind::Heating, t, params,
                                               baselines.heating);
            h_levels = bounded_levels(std::min(env.hi_kw, demand_kw[t]), "heating");
        }
        if (fcase.rotating) {
            const auto env = feasible_envelope(LoadKind::Rotating, t, params,
                                               baselines.rotating);
            r_levels = bounded_levels(std::min(env.hi_kw, demand_kw[t]), "rotating");
        }
        double best_h = 0.0;
        double best_r = 0.0;
        for (double h : h_levels) {
            for (double r : r_levels) {
                if (h + r > demand_kw[t] + 1e-12) continue;
                if (h + r > best_h + best_r) {
                    best_h = h;
                    best_r = r;
                }
            }
        }
        result.heating_kw[t] = best_h;
        result.rotating_kw[t] = best_r;
        residual_kw[t] = demand_kw[t] - best_h - best_r;
    }

    const StorageSpec& ss = params.storage;
    StorageLedger led;
    led.e_min_kwh = ss.soc_min * ss.capacity_kwh;
    led.e_max_kwh = ss.soc_max * ss.capacity_kwh;
    led.e0_kwh = ss.soc_initial * ss.capacity_kwh;
    led.dt_h = dt_h;
    led.eta_c = ss.eta_charge;
    led.eta_d = ss.eta_discharge;
    led.charge_rate_kw = ss.p_charge_max_kw;
    led.discharge_rate_kw = -ss.p_discharge_max_kw;

    result.soc.assign(horizon + 1, ss.soc_initial);
    double unmet_kwh = 0.0;
    if (fcase.storage) {
        OracleSearch search;
        search.led = &led;
        search.in_window = &in_window;
        search.residual_kw = residual_kw;
        search.dt_h = dt_h;
        search.level_options.resize(horizon);
        for (std::size_t t = 0; t < horizon; ++t) {
            if (in_window[t]) {
                search.level_options[t] = bounded_levels(
                    std::min(residual_kw[t], led.discharge_rate_kw), "storage discharge");
            } else {
                search.level_options[t] =
                    bounded_levels(led.charge_rate_kw, "storage charge");
            }
        }
        search.run();
        result.storage_kw = search.best_dis;
        result.charge_kw = search.best_chg;
        unmet_kwh = search.best_unmet_kwh;
        double level = led.e0_kwh;
        for (std::size_t t = 0; t < horizon; ++t) {
            level += led.eta_c * result.charge_kw[t] * dt_h -
                     result.storage_kw[t] / led.eta_d * dt_h;
            result.soc[t + 1] = level / ss.capacity_kwh;
        }
    } else {
        for (std::size_t t = 0; t < horizon; ++t) {
            if (in_window[t]) unmet_kwh += residual_kw[t] * dt_h;
        }
    }

    double f_pre = 0.0;
    for (std::size_t t = 0; t < horizon; ++t) {
        if (in_window[t]) f_pre += demand_kw[t] * dt_h;
    }
    result.f_pre_kwh = f_pre;
    result.f_kwh = unmet_kwh;
    result.f_act_kwh = f_pre - unmet_kwh;
    return result;
}

std::vector<std::string> check_dispatch_constraints(const DispatchResult& result,
                                                    const FlexibleCase& fcase,
                                                    const ResponseTarget& target,
                                                    const Baselines& baselines,
                                                    const DispatchParams& params) {
    std::vector<std::string> issues;
    const std::size_t horizon = baselines.horizon();
    const double tol = 1e-6;
    auto complain = [&issues](std::size_t t, const std::string& what) {
        issues.push_back("t=" + std::to_string(t) + ": " + what);
    };

    if (result.heating_kw.size() != horizon || result.rotating_kw.size() != horizon ||
        result.storage_kw.size() != horizon || result.charge_kw.size() != horizon ||
        result.soc.size() != horizon + 1) {
        return {"result arrays do not match the horizon"};
    }

    std::vector<double> demand_kw(horizon, 0.0);
    std::vector<bool> in_window(horizon, false);
    for (std::size_t i = 0; i < target.window.size(); ++i) {
        demand_kw[target.window[i]] = target.demand_kw[i];
        in_window[target.window[i]] = true;
    }

    const StorageSpec& ss = params.storage;
    double soc = ss.soc_initial;
    if (std::fabs(result.soc[0] - soc) > tol) {
        complain(0, "SOC trajectory does not start at SOC_0");
    }
    double f_pre = 0.0;
    double f_act = 0.0;
    for (std::size_t t = 0; t < horizon; ++t) {
        const auto env_h =
            feasible_envelope(LoadKind::Heating, t, params, baselines.heating);
        const auto env_r =
            feasible_envelope(LoadKind::Rotating, t, params, baselines.rotating);
        const double h = result.heating_kw[t];
        const double r = result.rotating_kw[t];
        const double s = result.storage_kw[t];
        const double c = result.charge_kw[t];
        if (h < -tol || (h > tol && (h < env_h.lo_kw - tol || h > env_h.hi_kw + tol))) {
            complain(t, "heating response outside its envelope");
        }
        if (r < -tol || (r > tol && (r < env_r.lo_kw - tol || r > env_r.hi_kw + tol))) {
            complain(t, "rotating response outside its envelope");
        }
        if (!fcase.heating && h != 0.0) complain(t, "heating responded but is not a member");
        if (!fcase.rotating && r != 0.0) complain(t, "rotating responded but is not a member");
        if (!fcase.storage && (s != 0.0 || c != 0.0)) {
            complain(t, "storage active but is not a member");
        }
        if (s < -tol || s > -ss.p_discharge_max_kw + tol) {
            complain(t, "storage discharge outside its rating");
        }
        if (c < -tol || c > ss.p_charge_max_kw + tol) {
            complain(t, "storage charge outside its rating");
        }
        if (s > tol && c > tol) {
            complain(t, "storage charging and discharging in the same step");
        }
        if (!in_window[t] && (h > tol || r > tol || s > tol)) {
            complain(t, "response outside the target window");
        }
        if (in_window[t] && c > tol) {
            complain(t, "grid charging inside the response window");
        }
        if (in_window[t]) {
            if (h + r + s > demand_kw[t] + tol) {
                complain(t, "delivered response exceeds the requested reduction");
            }
            f_pre += demand_kw[t] * result.step_h;
            f_act += (h + r + s) * result.step_h;
        }
        try {
            soc = soc_step(soc, c, -s, result.step_h, ss);
        } catch (const Error& e) {
            complain(t, std::string("SOC step rejected: ") + e.what());
            break;
        }
        if (std::fabs(result.soc[t + 1] - soc) > tol) {
            complain(t, "SOC trajectory mismatch");
        }
    }
    const double gap = ss.soc_initial - soc;
    if (std::fabs(gap - result.terminal_soc_gap) > tol) {
        issues.push_back("terminal SOC gap not reported accurately");
    }
    if (result.terminal_soc_gap > tol && result.warnings.empty()) {
        issues.push_back("terminal SOC gap present but no warning raised");
    }
    if (std::fabs(result.f_pre_kwh - f_pre) > tol * std::max(1.0, f_pre)) {
        issues.push_back("F_pre does not match the demand series");
    }
    if (std::fabs(result.f_act_kwh - f_act) > tol * std::max(1.0, f_pre)) {
        issues.push_back("F_act does not match the response series");
    }
    if (std::fabs(result.f_kwh - (result.f_pre_kwh - result.f_act_kwh)) >
        tol * std::max(1.0, f_pre)) {
        issues.push_back("F != F_pre - F_act");
    }
    if (result.f_kwh < -tol) {
        issues.push_back("negative unresponsiveness");
    }
    return issues;
}

}  // namespace parkdr
