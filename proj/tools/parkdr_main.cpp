// parkdr: simulate industrial-park flexible loads, augment their daily
// profiles, dispatch demand response and maintain the offline response
// database. Exit codes: 0 success, 1 runtime failure, 2 usage error.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parkdr/demo.hpp"
#include "parkdr/dispatch.hpp"
#include "parkdr/errors.hpp"
#include "parkdr/metrics.hpp"
#include "parkdr/offline_db.hpp"
#include "parkdr/profile_csv.hpp"
#include "parkdr/run_config.hpp"
#include "parkdr/scenario.hpp"
#include "parkdr/svg.hpp"

namespace fs = std::filesystem;
using namespace parkdr;

namespace {

struct GlobalOpts {
    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = kDemoSeed;
    bool seed_given = false;
    bool out_given = false;
    RunConfig cfg;

    void finalize() {
        if (!config_path.empty()) {
            cfg = RunConfig::load(config_path);
        }
        if (!out_given) {
            out_dir = cfg.get("out_dir", out_dir);
        }
        if (!seed_given) {
            seed = cfg.get_u64("seed", seed);
        }
    }

    fs::path out(const std::string& name) const { return fs::path(out_dir) / name; }
};

double step_min(const GlobalOpts& g) { return g.cfg.get_double("step_min", 60.0); }

StorageSpec storage_from_config(const RunConfig& cfg) {
    StorageSpec spec = DispatchParams::defaults().storage;
    spec.capacity_kwh = cfg.get_double("storage.capacity_kwh", spec.capacity_kwh);
    spec.p_charge_max_kw =
        cfg.get_double("storage.p_charge_max_kw", spec.p_charge_max_kw);
    spec.p_discharge_max_kw =
        cfg.get_double("storage.p_discharge_max_kw", spec.p_discharge_max_kw);
    spec.soc_min = cfg.get_double("storage.soc_min", spec.soc_min);
    spec.soc_max = cfg.get_double("storage.soc_max", spec.soc_max);
    spec.soc_initial = cfg.get_double("storage.soc_initial", spec.soc_initial);
    spec.eta_charge = cfg.get_double("storage.eta_charge", spec.eta_charge);
    spec.eta_discharge = cfg.get_double("storage.eta_discharge", spec.eta_discharge);
    return spec;
}

DispatchParams params_from_config(const RunConfig& cfg) {
    DispatchParams params = DispatchParams::defaults();
    params.p_heat_min_kw = cfg.get_double("dispatch.p_heat_min_kw", params.p_heat_min_kw);
    params.p_heat_max_kw = cfg.get_double("dispatch.p_heat_max_kw", params.p_heat_max_kw);
    params.p_rot_min_kw = cfg.get_double("dispatch.p_rot_min_kw", params.p_rot_min_kw);
    params.p_rot_max_kw = cfg.get_double("dispatch.p_rot_max_kw", params.p_rot_max_kw);
    params.storage = storage_from_config(cfg);
    params.validate();
    return params;
}

RollingScheduleSpec rolling_from_config(const RunConfig& cfg) {
    RollingScheduleSpec spec = demo_rolling_spec();
    spec.pulse_power_kw = cfg.get_double("rolling.pulse_kw", spec.pulse_power_kw);
    spec.pulse_width_min =
        cfg.get_double("rolling.pulse_width_min", spec.pulse_width_min);
    spec.rough_pass_count = static_cast<int>(
        cfg.get_u64("rolling.rough_passes",
                    static_cast<std::uint64_t>(spec.rough_pass_count)));
    spec.finishing_mill_count = static_cast<int>(
        cfg.get_u64("rolling.finish_mills",
                    static_cast<std::uint64_t>(spec.finishing_mill_count)));
    spec.inter_pass_gap_min = cfg.get_double("rolling.gap_min", spec.inter_pass_gap_min);
    spec.rough_start_min = cfg.get_double("rolling.start_min", spec.rough_start_min);
    if (cfg.has("rolling.billet_offsets_min")) {
        spec.rough_offsets_min.clear();
        for (const auto& item : cfg.get_list("rolling.billet_offsets_min")) {
            spec.rough_offsets_min.push_back(std::stod(item));
        }
        spec.finish_offsets_min = spec.rough_offsets_min;
    }
    if (cfg.has("rolling.finish_offsets_min")) {
        spec.finish_offsets_min.clear();
        for (const auto& item : cfg.get_list("rolling.finish_offsets_min")) {
            spec.finish_offsets_min.push_back(std::stod(item));
        }
    }
    spec.validate();
    return spec;
}

std::vector<FurnaceCycleSpec> furnace_from_config(const RunConfig& cfg,
                                                  std::uint64_t seed) {
    auto cycles = demo_furnace_cycles(seed);
    if (cfg.has("furnace.cycles_h")) {
        // "on-off" hour pairs, e.g. "4-11.5,13.5-21.5"
        const auto base = cycles.front();
        cycles.clear();
        std::uint64_t cycle_seed = seed;
        for (const auto& item : cfg.get_list("furnace.cycles_h")) {
            const auto dash = item.find('-');
            if (dash == std::string::npos) {
                throw DataError("furnace.cycles_h: expected 'on-off' hour pairs");
            }
            FurnaceCycleSpec c = base;
            c.t_on_s = std::stod(item.substr(0, dash)) * 3600.0;
            c.t_off_s = std::stod(item.substr(dash + 1)) * 3600.0;
            c.noise_seed = cycle_seed++;
            cycles.push_back(c);
        }
    }
    for (auto& c : cycles) {
        c.rated_power_kw = cfg.get_double("furnace.rated_kw", c.rated_power_kw);
        c.band_halfwidth = cfg.get_double("furnace.band", c.band_halfwidth);
        c.ramp_up_s = cfg.get_double("furnace.ramp_up_s", c.ramp_up_s);
        c.ramp_down_s = cfg.get_double("furnace.ramp_down_s", c.ramp_down_s);
        c.noise_interval_s =
            cfg.get_double("furnace.noise_interval_s", c.noise_interval_s);
        c.validate();
    }
    return cycles;
}

Baselines baselines_from_files(const GlobalOpts& g) {
    Baselines baselines;
    baselines.heating = read_profile_csv(
        g.cfg.get("heating_csv", g.out("heating.csv").string()));
    baselines.rotating = read_profile_csv(
        g.cfg.get("rotating_csv", g.out("rotating.csv").string()));
    baselines.storage = read_profile_csv(
        g.cfg.get("storage_csv", g.out("storage.csv").string()));
    baselines.validate();
    return baselines;
}

std::vector<ResponseTarget> targets_from_config(const GlobalOpts& g,
                                                std::size_t horizon,
                                                double profile_step_min) {
    auto targets = demo_targets(horizon, profile_step_min);
    for (auto& target : targets) {
        const std::string key = "target." + target_id(target.kind);
        if (g.cfg.has(key + ".window")) {
            target.window = parse_index_ranges(g.cfg.get(key + ".window", ""), horizon);
            target.demand_kw.resize(target.window.size(), 0.0);
        }
        const auto demands = g.cfg.get_list(key + ".demand_kw");
        if (demands.size() == 1) {
            target.demand_kw.assign(target.window.size(), std::stod(demands[0]));
        } else if (!demands.empty()) {
            if (demands.size() != target.window.size()) {
                throw DataError(key + ".demand_kw: need one value or one per window step");
            }
            target.demand_kw.clear();
            for (const auto& item : demands) {
                target.demand_kw.push_back(std::stod(item));
            }
        }
        target.validate(horizon);
    }
    return targets;
}

ResponseTarget find_target(const std::vector<ResponseTarget>& targets,
                           const std::string& id) {
    const TargetKind kind = parse_target(id);
    for (const auto& t : targets) {
        if (t.kind == kind) return t;
    }
    throw DataError("no target configured with id '" + id + "'");
}

int cmd_simulate(const GlobalOpts& g) {
    const double step = step_min(g);
    const auto count = static_cast<std::size_t>(std::llround(1440.0 / step));
    const auto cycles = furnace_from_config(g.cfg, g.seed);
    const auto rolling = rolling_from_config(g.cfg);
    const auto storage = storage_from_config(g.cfg);

    LoadProfile heating;
    heating.start = demo_start();
    heating.step_min = step;
    for (std::size_t i = 0; i < count; ++i) {
        const double t_s = static_cast<double>(i) * step * 60.0;
        double total = 0.0;
        for (const auto& cycle : cycles) total += eaf_power(t_s, cycle);
        heating.values_kw.push_back(total);
    }

    LoadProfile rotating;
    rotating.start = demo_start();
    rotating.step_min = step;
    for (std::size_t i = 0; i < count; ++i) {
        rotating.values_kw.push_back(
            rolling_line_power(static_cast<double>(i) * step, rolling));
    }

    const LoadProfile storage_profile = demo_storage_profile(step, storage);

    write_profile_csv(heating, g.out("heating.csv").string());
    write_profile_csv(rotating, g.out("rotating.csv").string());
    write_profile_csv(storage_profile, g.out("storage.csv").string());
    std::cout << "simulated " << count << " samples per load into " << g.out_dir
              << " (heating.csv, rotating.csv, storage.csv)\n";
    return 0;
}

int cmd_augment(const GlobalOpts& g) {
    const std::string input =
        g.cfg.get("augment.input", g.out("heating.csv").string());
    const LoadProfile base = read_profile_csv(input);
    AugmentationConfig acfg;
    acfg.target_points_per_day = g.cfg.get_size("augment.target_points", 96);
    acfg.days_to_generate = g.cfg.get_size("augment.days", 1);
    acfg.noise_scale = g.cfg.get_double("augment.noise_scale", 0.05);
    acfg.noise_seed = g.seed;

    const auto days = augment_days(base, acfg);
    const fs::path dir = g.out("augmented");
    for (std::size_t d = 0; d < days.size(); ++d) {
        char name[32];
        std::snprintf(name, sizeof(name), "day_%03zu.csv", d + 1);
        write_profile_csv(days[d], (dir / name).string());
    }
    std::cout << "augmented " << base.size() << " -> " << acfg.target_points_per_day
              << " points per day, " << days.size() << " day(s) into " << dir.string()
              << "\n";
    return 0;
}

int cmd_dispatch(const GlobalOpts& g, const std::string& target_name,
                 const std::string& case_name) {
    const auto fcase = FlexibleCase::parse(case_name);
    const auto baselines = baselines_from_files(g);
    const auto params = params_from_config(g.cfg);
    const auto targets =
        targets_from_config(g, baselines.horizon(), baselines.heating.step_min);
    const auto target = find_target(targets, target_name);

    const auto result = schedule_dispatch(fcase, target, baselines, params);
    for (const auto& warning : result.warnings) {
        std::cout << "warning: " << warning << "\n";
    }

    nlohmann::json doc;
    doc["target"] = target_id(target.kind);
    doc["flexible_case"] = fcase.id();
    doc["step_h"] = result.step_h;
    doc["f_pre_kwh"] = result.f_pre_kwh;
    doc["f_act_kwh"] = result.f_act_kwh;
    doc["f_kwh"] = result.f_kwh;
    doc["heating_kw"] = result.heating_kw;
    doc["rotating_kw"] = result.rotating_kw;
    doc["storage_kw"] = result.storage_kw;
    doc["charge_kw"] = result.charge_kw;
    doc["soc"] = result.soc;
    doc["terminal_soc_gap"] = result.terminal_soc_gap;
    doc["warnings"] = result.warnings;
    const fs::path path =
        g.out("dispatch_" + target_id(target.kind) + "_" + fcase.id() + ".json");
    atomic_write_text(path.string(), doc.dump(2) + "\n");

    std::printf("target=%s case=%s F_pre=%.3f kWh F_act=%.3f kWh F=%.3f kWh\n",
                target_id(target.kind).c_str(), fcase.id().c_str(), result.f_pre_kwh,
                result.f_act_kwh, result.f_kwh);
    std::cout << "result written to " << path.string() << "\n";
    return 0;
}

int cmd_build_db(const GlobalOpts& g) {
    const auto baselines = baselines_from_files(g);
    const auto params = params_from_config(g.cfg);
    const auto targets =
        targets_from_config(g, baselines.horizon(), baselines.heating.step_min);
    const auto db = build_database(baselines, params, targets, g.seed,
                                   g.cfg.get("db.built_at", ""));
    const fs::path path = g.out("offline_db.json");
    save_database(db, path.string());
    std::cout << "offline database: " << db.entries.size() << " entries ("
              << targets.size() << " targets x 7 flexible cases) -> " << path.string()
              << "\n";
    return 0;
}

int cmd_query_db(const GlobalOpts& g, const std::string& db_path,
                 const std::string& target_name, const std::string& case_name) {
    const std::string path =
        db_path.empty() ? g.out("offline_db.json").string() : db_path;
    const auto db = load_database(path);
    const auto& entry = query(db, target_name, case_name);
    std::printf("target=%s case=%s\n", entry.target.c_str(),
                entry.flexible_case.c_str());
    std::printf("response_value=%.3f kWh unresponsiveness=%.3f kWh constraints_ok=%s\n",
                entry.response_value_kwh, entry.unresponsiveness_kwh,
                entry.constraints_ok ? "true" : "false");
    double peak = 0.0;
    for (double v : entry.response_kw) peak = std::max(peak, v);
    std::printf("steps=%zu peak_response=%.3f kW warnings=%zu\n",
                entry.response_kw.size(), peak, entry.warnings.size());
    for (const auto& w : entry.warnings) {
        std::cout << "  warning: " << w << "\n";
    }
    return 0;
}

int cmd_report(const GlobalOpts& g) {
    const fs::path dir = g.out("report");

    // metric table rows: pairs "reference.csv:candidate.csv"
    std::string table = "reference,candidate,rmsd_kw,mad_kw,r_square\n";
    for (const auto& pair : g.cfg.get_list("report.pairs")) {
        const auto colon = pair.find(':');
        if (colon == std::string::npos) {
            throw DataError("report.pairs: expected 'reference:candidate'");
        }
        const std::string ref_path = pair.substr(0, colon);
        const std::string cand_path = pair.substr(colon + 1);
        const auto ref = read_profile_csv(ref_path);
        const auto cand = read_profile_csv(cand_path);
        table += fs::path(ref_path).filename().string() + "," +
                 fs::path(cand_path).filename().string() + "," +
                 format_double(rmsd(ref.values_kw, cand.values_kw)) + "," +
                 format_double(mad(ref.values_kw, cand.values_kw)) + "," +
                 format_double(r_square(ref.values_kw, cand.values_kw)) + "\n";
    }
    atomic_write_text((dir / "metrics.csv").string(), table);

    // curve sheet: one polyline per listed profile
    auto curves = g.cfg.get_list("report.curves");
    if (curves.empty() && fs::exists(g.out("heating.csv"))) {
        curves = {g.out("heating.csv").string(), g.out("rotating.csv").string(),
                  g.out("storage.csv").string()};
    }
    if (!curves.empty()) {
        std::vector<SvgSeries> series;
        for (const auto& path : curves) {
            const auto profile = read_profile_csv(path);
            series.push_back({fs::path(path).stem().string(), profile.values_kw});
        }
        atomic_write_text((dir / "curves.svg").string(),
                          render_line_chart_svg("daily load profiles (kW)", series));
    }

    // delivered response across flexible cases, one sheet per target
    const fs::path db_path = g.out("offline_db.json");
    if (fs::exists(db_path)) {
        const auto db = load_database(db_path.string());
        for (const auto kind :
             {TargetKind::OnlyNight, TargetKind::AllDay, TargetKind::OnlyDaytime}) {
            std::vector<SvgSeries> series;
            for (const auto& fcase : FlexibleCase::all_cases()) {
                const auto it = db.entries.find({target_id(kind), fcase.id()});
                if (it == db.entries.end()) continue;
                series.push_back({fcase.id(), it->second.response_kw});
            }
            if (!series.empty()) {
                atomic_write_text(
                    (dir / ("response_" + target_id(kind) + ".svg")).string(),
                    render_line_chart_svg(
                        "delivered response, " + target_id(kind) + " (kW)", series));
            }
        }
    }
    std::cout << "report artifacts written to " << dir.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"industrial-park flexible-load demand response toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--config", g.config_path, "plain-text key = value config file");
    app.add_option("--seed", g.seed, "pseudorandom seed")
        ->each([&g](const std::string&) { g.seed_given = true; });
    app.add_option("--out", g.out_dir, "output directory")
        ->each([&g](const std::string&) { g.out_given = true; });

    auto* simulate = app.add_subcommand("simulate", "write per-load daily profiles");
    auto* augment = app.add_subcommand("augment", "densify and synthesize days");
    auto* dispatch =
        app.add_subcommand("dispatch", "dispatch one response target and case");
    std::string target_name = "only_night";
    std::string case_name = "H-R-S";
    dispatch->add_option("--target", target_name,
                         "only_night | all_day | only_daytime");
    dispatch->add_option("--case", case_name, "flexible case, e.g. H-R-S or S");
    auto* build_db = app.add_subcommand("build-db", "build the offline database");
    auto* query_db = app.add_subcommand("query-db", "look up one database entry");
    std::string db_path;
    std::string q_target = "only_night";
    std::string q_case = "H-R-S";
    query_db->add_option("--db", db_path,
                         "database file (default <out>/offline_db.json)");
    query_db->add_option("--target", q_target, "target id");
    query_db->add_option("--case", q_case, "flexible case id");
    auto* report = app.add_subcommand("report", "emit SVG curves and metric tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion") {
            return app.exit(e);
        }
        app.exit(e);
        return 2;
    }

    try {
        g.finalize();
        if (simulate->parsed()) return cmd_simulate(g);
        if (augment->parsed()) return cmd_augment(g);
        if (dispatch->parsed()) return cmd_dispatch(g, target_name, case_name);
        if (build_db->parsed()) return cmd_build_db(g);
        if (query_db->parsed()) return cmd_query_db(g, db_path, q_target, q_case);
        if (report->parsed()) return cmd_report(g);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
