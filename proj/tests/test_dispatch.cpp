#include <doctest.h>

#include <cmath>
#include <vector>

#include "parkdr/dispatch.hpp"
#include "parkdr/errors.hpp"
#include "parkdr/rng.hpp"
#include "support/instances.hpp"

using namespace parkdr;
using parkdr::testing::flat_profile;
using parkdr::testing::Instance;
using parkdr::testing::kOraclePitchKw;
using parkdr::testing::make_general_instance;
using parkdr::testing::make_oracle_instance;
using parkdr::testing::random_case;

TEST_CASE("dr_cost on the quadratic tariff") {
    DrCostParams params;
    params.quad_coeff = 0.01;
    params.linear_coeff = 2.0;
    params.p_min_kw = 0.0;
    params.p_max_kw = 100.0;
    CHECK(dr_cost(0.0, params) == 0.0);
    CHECK(dr_cost(10.0, params) == doctest::Approx(21.0).epsilon(1e-12));
    CHECK_THROWS_AS(dr_cost(params.p_max_kw + 1.0, params), BoundsError);
}

TEST_CASE("flexible case ids parse and print canonically") {
    CHECK(FlexibleCase::parse("H-R-S").id() == "H-R-S");
    CHECK(FlexibleCase::parse("H-S").id() == "H-S");
    CHECK(FlexibleCase::parse("R").id() == "R");
    CHECK(FlexibleCase::all_cases().size() == 7);
    CHECK_THROWS_AS(FlexibleCase::parse("S-H"), SpecError);
    CHECK_THROWS_AS(FlexibleCase::parse("X"), SpecError);
    CHECK_THROWS_AS(FlexibleCase::parse(""), SpecError);
    CHECK(FlexibleCase::parse("H-R-S").is_superset_of(FlexibleCase::parse("R-S")));
    CHECK_FALSE(FlexibleCase::parse("H-R").is_superset_of(FlexibleCase::parse("S")));
}

TEST_CASE("feasible envelopes clip by band and baseline") {
    auto params = DispatchParams::defaults();
    const auto baseline = flat_profile(4, 60.0, {3000.0, 0.0, 6000.0, 500.0});
    const auto env0 = feasible_envelope(LoadKind::Heating, 0, params, baseline);
    CHECK(env0.lo_kw == 0.0);
    CHECK(env0.hi_kw == 3000.0);  // global band 4500 not binding
    const auto env1 = feasible_envelope(LoadKind::Heating, 1, params, baseline);
    CHECK(env1.lo_kw == 0.0);
    CHECK(env1.hi_kw == 0.0);  // nothing to curtail
    const auto env2 = feasible_envelope(LoadKind::Heating, 2, params, baseline);
    CHECK(env2.hi_kw == 4500.0);  // band binds

    // per-step envelope entirely above the baseline: empty intersection
    params.heat_envelope.assign(4, PowerInterval{1000.0, 4000.0});
    const auto env3 = feasible_envelope(LoadKind::Heating, 3, params, baseline);
    CHECK(env3.lo_kw == 0.0);
    CHECK(env3.hi_kw == 0.0);

    const auto env_s = feasible_envelope(LoadKind::Storage, 0, params, baseline);
    CHECK(env_s.lo_kw == 0.0);
    CHECK(env_s.hi_kw == 1000.0);
}

TEST_CASE("unresponsiveness bookkeeping") {
    CHECK(unresponsiveness(100.0, 100.0) == 0.0);
    CHECK(unresponsiveness(100.0, 40.0) == 60.0);
    CHECK(unresponsiveness(0.0, 0.0) == 0.0);
    CHECK_THROWS_AS(unresponsiveness(100.0, 100.1), BoundsError);
    CHECK_THROWS_AS(unresponsiveness(-1.0, 0.0), BoundsError);
}

namespace {

Instance stock_night_instance() {
    // 24 hourly steps, storage-only demand of 1000 kW over the last 4 hours
    Instance inst;
    const std::size_t horizon = 24;
    inst.baselines.heating =
        flat_profile(horizon, 60.0, std::vector<double>(horizon, 2000.0));
    inst.baselines.rotating =
        flat_profile(horizon, 60.0, std::vector<double>(horizon, 1500.0));
    inst.baselines.storage =
        flat_profile(horizon, 60.0, std::vector<double>(horizon, 0.0));
    inst.params = DispatchParams::defaults();
    inst.target.kind = TargetKind::OnlyNight;
    inst.target.window = {20, 21, 22, 23};
    inst.target.demand_kw.assign(4, 1000.0);
    return inst;
}

}  // namespace

TEST_CASE("zero demand dispatches to zero response") {
    auto inst = stock_night_instance();
    inst.target.demand_kw.assign(4, 0.0);
    const auto result = schedule_dispatch(FlexibleCase::parse("H-R-S"), inst.target,
                                          inst.baselines, inst.params);
    CHECK(result.f_pre_kwh == 0.0);
    CHECK(result.f_act_kwh == 0.0);
    CHECK(result.f_kwh == 0.0);
    for (std::size_t t = 0; t < 24; ++t) {
        CHECK(result.response_at(t) == 0.0);
        CHECK(result.charge_kw[t] == 0.0);
    }
    CHECK(check_dispatch_constraints(result, FlexibleCase::parse("H-R-S"), inst.target,
                                     inst.baselines, inst.params)
              .empty());
}

TEST_CASE("storage covers a 4-hour night window with daytime pre-charge") {
    const auto inst = stock_night_instance();
    const auto fcase = FlexibleCase::parse("S");
    const auto result =
        schedule_dispatch(fcase, inst.target, inst.baselines, inst.params);
    // 4000 kWh deliverable: pre-charge keeps SOC within 0.95 and the
    // terminal balance lands back on SOC_0 = 0.4
    CHECK(result.f_pre_kwh == doctest::Approx(4000.0).epsilon(1e-12));
    CHECK(result.f_act_kwh == doctest::Approx(4000.0).epsilon(1e-9));
    CHECK(result.f_kwh == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(result.terminal_soc_gap == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(result.soc.back() == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(result.warnings.empty());
    for (double s : result.soc) {
        CHECK(s >= 0.3 - 1e-12);
        CHECK(s <= 0.95 + 1e-12);
    }
    CHECK(check_dispatch_constraints(result, fcase, inst.target, inst.baselines,
                                     inst.params)
              .empty());
}

TEST_CASE("a richer case never responds worse on the same instance") {
    const auto inst = stock_night_instance();
    const auto f_s = schedule_dispatch(FlexibleCase::parse("S"), inst.target,
                                       inst.baselines, inst.params)
                         .f_kwh;
    const auto f_hrs = schedule_dispatch(FlexibleCase::parse("H-R-S"), inst.target,
                                         inst.baselines, inst.params)
                           .f_kwh;
    CHECK(f_hrs <= f_s);
}

TEST_CASE("storage-only with no charging slots cannot respond at all") {
    Instance inst;
    const std::size_t horizon = 4;
    inst.baselines.heating = flat_profile(horizon, 60.0, {0.0, 0.0, 0.0, 0.0});
    inst.baselines.rotating = flat_profile(horizon, 60.0, {0.0, 0.0, 0.0, 0.0});
    inst.baselines.storage = flat_profile(horizon, 60.0, {0.0, 0.0, 0.0, 0.0});
    inst.params = DispatchParams::defaults();
    inst.target.kind = TargetKind::AllDay;
    inst.target.window = {0, 1, 2, 3};  // every step: nowhere to recharge
    inst.target.demand_kw.assign(4, 500.0);

    const auto fcase = FlexibleCase::parse("S");
    const auto result =
        schedule_dispatch(fcase, inst.target, inst.baselines, inst.params);
    CHECK(result.f_act_kwh == doctest::Approx(0.0));
    CHECK(result.f_kwh == doctest::Approx(result.f_pre_kwh));
    CHECK(result.soc.back() == doctest::Approx(inst.params.storage.soc_initial));
    CHECK(check_dispatch_constraints(result, fcase, inst.target, inst.baselines,
                                     inst.params)
              .empty());

    const auto oracle =
        brute_force_dispatch(fcase, inst.target, inst.baselines, inst.params, 100.0);
    CHECK(oracle.f_kwh == doctest::Approx(result.f_kwh));
}

TEST_CASE("oracle reproduces the two-step curtailment optimum") {
    Instance inst;
    inst.baselines.heating = flat_profile(2, 60.0, {80.0, 80.0});
    inst.baselines.rotating = flat_profile(2, 60.0, {0.0, 0.0});
    inst.baselines.storage = flat_profile(2, 60.0, {0.0, 0.0});
    inst.params = DispatchParams::defaults();
    inst.target.kind = TargetKind::AllDay;
    inst.target.window = {0, 1};
    inst.target.demand_kw = {100.0, 100.0};

    const auto fcase = FlexibleCase::parse("H");
    const auto oracle =
        brute_force_dispatch(fcase, inst.target, inst.baselines, inst.params, 20.0);
    CHECK(oracle.f_kwh == doctest::Approx(40.0).epsilon(1e-12));
    CHECK(oracle.heating_kw[0] == doctest::Approx(80.0));
    CHECK(oracle.heating_kw[1] == doctest::Approx(80.0));

    const auto greedy =
        schedule_dispatch(fcase, inst.target, inst.baselines, inst.params);
    CHECK(greedy.f_kwh == doctest::Approx(oracle.f_kwh).epsilon(1e-12));
}

TEST_CASE("oracle rejects oversized instances") {
    Instance inst;
    inst.baselines.heating =
        flat_profile(7, 60.0, std::vector<double>(7, 100.0));
    inst.baselines.rotating = flat_profile(7, 60.0, std::vector<double>(7, 0.0));
    inst.baselines.storage = flat_profile(7, 60.0, std::vector<double>(7, 0.0));
    inst.params = DispatchParams::defaults();
    inst.target.kind = TargetKind::AllDay;
    inst.target.window = {0};
    inst.target.demand_kw = {100.0};
    CHECK_THROWS_AS(brute_force_dispatch(FlexibleCase::parse("H"), inst.target,
                                         inst.baselines, inst.params, 20.0),
                    SizeError);

    Instance small;
    small.baselines.heating = flat_profile(2, 60.0, {4000.0, 4000.0});
    small.baselines.rotating = flat_profile(2, 60.0, {0.0, 0.0});
    small.baselines.storage = flat_profile(2, 60.0, {0.0, 0.0});
    small.params = DispatchParams::defaults();
    small.target.kind = TargetKind::AllDay;
    small.target.window = {0, 1};
    small.target.demand_kw = {4000.0, 4000.0};
    // 4000 / 20 kW pitch: far more than 8 levels
    CHECK_THROWS_AS(brute_force_dispatch(FlexibleCase::parse("H"), small.target,
                                         small.baselines, small.params, 20.0),
                    SizeError);
}

TEST_CASE("fuzz: every dispatch honors every constraint") {
    SplitMix64 rng(101u);
    for (int run = 0; run < 500; ++run) {
        const auto inst = make_general_instance(rng);
        const auto fcase = random_case(rng);
        const auto result =
            schedule_dispatch(fcase, inst.target, inst.baselines, inst.params);
        const auto issues = check_dispatch_constraints(result, fcase, inst.target,
                                                       inst.baselines, inst.params);
        for (const auto& issue : issues) {
            FAIL_CHECK(fcase.id(), ": ", issue);
        }
        CHECK(issues.empty());
    }
}

TEST_CASE("fuzz: storage terminal SOC always returns to SOC_0") {
    SplitMix64 rng(102u);
    for (int run = 0; run < 200; ++run) {
        const auto inst = make_general_instance(rng);
        const auto result = schedule_dispatch(FlexibleCase::parse("S"), inst.target,
                                              inst.baselines, inst.params);
        CHECK(std::fabs(result.soc.back() - inst.params.storage.soc_initial) <= 1e-9);
        CHECK(result.terminal_soc_gap <= 1e-9);
    }
}

TEST_CASE("fuzz: greedy never beats the oracle, gap within one quantum + 5%") {
    SplitMix64 rng(103u);
    const double q = kOraclePitchKw;
    for (int run = 0; run < 60; ++run) {
        const auto inst = make_oracle_instance(rng);
        const auto fcase = random_case(rng);
        const auto greedy =
            schedule_dispatch(fcase, inst.target, inst.baselines, inst.params);
        const auto oracle = brute_force_dispatch(fcase, inst.target, inst.baselines,
                                                 inst.params, q);
        CHECK(greedy.f_kwh >= oracle.f_kwh - 1e-9);
        const double slack = 0.05 * greedy.f_pre_kwh + q * greedy.step_h + 1e-9;
        CHECK(greedy.f_kwh - oracle.f_kwh <= slack);
    }
}

TEST_CASE("fuzz: adding members never increases unresponsiveness (exact)") {
    SplitMix64 rng(104u);
    const auto& cases = FlexibleCase::all_cases();
    for (int run = 0; run < 40; ++run) {
        const auto inst = make_oracle_instance(rng);
        double f[7];
        for (std::size_t c = 0; c < cases.size(); ++c) {
            f[c] = schedule_dispatch(cases[c], inst.target, inst.baselines, inst.params)
                       .f_kwh;
        }
        for (std::size_t a = 0; a < cases.size(); ++a) {
            for (std::size_t b = 0; b < cases.size(); ++b) {
                if (cases[a].is_superset_of(cases[b])) {
                    CHECK(f[a] <= f[b]);  // zero tolerance
                }
            }
        }
    }
}

TEST_CASE("fuzz: energy accounting reproduces from the per-step series") {
    SplitMix64 rng(105u);
    for (int run = 0; run < 100; ++run) {
        const auto inst = make_general_instance(rng);
        const auto fcase = random_case(rng);
        const auto result =
            schedule_dispatch(fcase, inst.target, inst.baselines, inst.params);
        double f_pre = 0.0;
        for (double d : inst.target.demand_kw) f_pre += d * result.step_h;
        double f_act = 0.0;
        for (std::size_t t = 0; t < inst.baselines.horizon(); ++t) {
            f_act += result.response_at(t) * result.step_h;
        }
        CHECK(result.f_pre_kwh == doctest::Approx(f_pre).epsilon(1e-9));
        CHECK(result.f_act_kwh == doctest::Approx(f_act).epsilon(1e-9));
        CHECK(result.f_kwh ==
              doctest::Approx(result.f_pre_kwh - result.f_act_kwh).epsilon(1e-9));
        CHECK(unresponsiveness(result.f_pre_kwh, result.f_act_kwh) ==
              doctest::Approx(result.f_kwh).epsilon(1e-9));
    }
}

TEST_CASE("fuzz: storage response is demand-Lipschitz") {
    // Lowering the demand a storage plan sees by x can lower its delivery
    // by at most x; the case-monotonicity argument rests on this.
    SplitMix64 rng(106u);
    for (int run = 0; run < 60; ++run) {
        auto inst = make_oracle_instance(rng);
        const auto fcase = FlexibleCase::parse("S");
        const auto base =
            schedule_dispatch(fcase, inst.target, inst.baselines, inst.params);
        auto reduced = inst.target;
        double reduction_kwh = 0.0;
        for (std::size_t i = 0; i < reduced.demand_kw.size(); ++i) {
            const double cut =
                kOraclePitchKw * static_cast<double>(rng.next_u64() % 3);
            const double applied = std::min(cut, reduced.demand_kw[i]);
            reduced.demand_kw[i] -= applied;
            reduction_kwh += applied * base.step_h;
        }
        const auto shrunk =
            schedule_dispatch(fcase, reduced, inst.baselines, inst.params);
        CHECK(base.f_act_kwh - shrunk.f_act_kwh <= reduction_kwh + 1e-9);
    }
}
