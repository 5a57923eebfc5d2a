#include "parkdr/offline_db.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "parkdr/errors.hpp"
#include "parkdr/profile_csv.hpp"

namespace parkdr {

namespace {

std::uint64_t fnv1a(std::uint64_t hash, const std::string& text) {
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

void hash_profile(std::uint64_t& hash, const LoadProfile& profile) {
    hash = fnv1a(hash, profile.start.to_iso());
    hash = fnv1a(hash, format_double(profile.step_min));
    for (double v : profile.values_kw) {
        hash = fnv1a(hash, format_double(v));
    }
}

}  // namespace

std::string parameter_fingerprint(const Baselines& baselines,
                                  const DispatchParams& params,
                                  const std::vector<ResponseTarget>& targets) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    hash_profile(hash, baselines.heating);
    hash_profile(hash, baselines.rotating);
    hash_profile(hash, baselines.storage);
    for (double v :
         {params.p_heat_min_kw, params.p_heat_max_kw, params.p_rot_min_kw,
          params.p_rot_max_kw, params.storage.capacity_kwh,
          params.storage.p_charge_max_kw, params.storage.p_discharge_max_kw,
          params.storage.soc_min, params.storage.soc_max, params.storage.soc_initial,
          params.storage.eta_charge, params.storage.eta_discharge}) {
        hash = fnv1a(hash, format_double(v));
    }
    for (const auto& env : {params.heat_envelope, params.rot_envelope}) {
        for (const auto& iv : env) {
            hash = fnv1a(hash, format_double(iv.lo_kw));
            hash = fnv1a(hash, format_double(iv.hi_kw));
        }
    }
    for (const auto& target : targets) {
        hash = fnv1a(hash, target_id(target.kind));
        for (std::size_t i = 0; i < target.window.size(); ++i) {
            hash = fnv1a(hash, std::to_string(target.window[i]));
            hash = fnv1a(hash, format_double(target.demand_kw[i]));
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

OfflineDatabase build_database(const Baselines& baselines, const DispatchParams& params,
                               const std::vector<ResponseTarget>& targets,
                               std::uint64_t seed, const std::string& built_at) {
    if (targets.empty()) {
        throw SpecError("build_database: need at least one response target");
    }
    baselines.validate();
    params.validate();

    OfflineDatabase db;
    db.seed = seed;
    db.built_at = built_at;
    db.parameter_hash = parameter_fingerprint(baselines, params, targets);
    for (const auto& target : targets) {
        for (const auto& fcase : FlexibleCase::all_cases()) {
            const DispatchResult result =
                schedule_dispatch(fcase, target, baselines, params);
            DbEntry entry;
            entry.target = target_id(target.kind);
            entry.flexible_case = fcase.id();
            entry.response_value_kwh = result.f_act_kwh;
            entry.unresponsiveness_kwh = result.f_kwh;
            entry.response_kw.reserve(result.heating_kw.size());
            for (std::size_t t = 0; t < result.heating_kw.size(); ++t) {
                entry.response_kw.push_back(result.response_at(t));
            }
            entry.warnings = result.warnings;
            entry.constraints_ok =
                check_dispatch_constraints(result, fcase, target, baselines, params)
                    .empty();
            db.entries[{entry.target, entry.flexible_case}] = std::move(entry);
        }
    }
    return db;
}

const DbEntry& query(const OfflineDatabase& db, const std::string& target,
                     const std::string& flexible_case) {
    const auto it = db.entries.find({target, flexible_case});
    if (it == db.entries.end()) {
        throw DataError("offline database: no entry for (" + target + ", " +
                        flexible_case + ")");
    }
    return it->second;
}

std::string database_json_text(const OfflineDatabase& db) {
    nlohmann::json root;  // std::map-backed: keys serialize in sorted order
    root["format_version"] = OfflineDatabase::kFormatVersion;
    root["seed"] = db.seed;
    root["parameter_hash"] = db.parameter_hash;
    root["built_at"] = db.built_at;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, entry] : db.entries) {
        nlohmann::json e;
        e["target"] = entry.target;
        e["flexible_case"] = entry.flexible_case;
        e["response_value_kwh"] = entry.response_value_kwh;
        e["unresponsiveness_kwh"] = entry.unresponsiveness_kwh;
        e["response_kw"] = entry.response_kw;
        e["constraints_ok"] = entry.constraints_ok;
        e["warnings"] = entry.warnings;
        entries.push_back(std::move(e));
    }
    root["entries"] = std::move(entries);
    return root.dump(2) + "\n";
}

void save_database(const OfflineDatabase& db, const std::string& path) {
    atomic_write_text(path, database_json_text(db));
}

OfflineDatabase load_database(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("offline database: cannot open " + path);
    }
    nlohmann::json root;
    try {
        in >> root;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("offline database: " + path + " is not valid JSON: " +
                          e.what());
    }
    try {
        const int version = root.at("format_version").get<int>();
        if (version != OfflineDatabase::kFormatVersion) {
            throw FormatError("offline database: " + path + " has format_version " +
                              std::to_string(version) + ", expected " +
                              std::to_string(OfflineDatabase::kFormatVersion));
        }
        OfflineDatabase db;
        db.seed = root.at("seed").get<std::uint64_t>();
        db.parameter_hash = root.at("parameter_hash").get<std::string>();
        db.built_at = root.at("built_at").get<std::string>();
        for (const auto& e : root.at("entries")) {
            DbEntry entry;
            entry.target = e.at("target").get<std::string>();
            entry.flexible_case = e.at("flexible_case").get<std::string>();
            entry.response_value_kwh = e.at("response_value_kwh").get<double>();
            entry.unresponsiveness_kwh = e.at("unresponsiveness_kwh").get<double>();
            entry.response_kw = e.at("response_kw").get<std::vector<double>>();
            entry.constraints_ok = e.at("constraints_ok").get<bool>();
            entry.warnings = e.at("warnings").get<std::vector<std::string>>();
            db.entries[{entry.target, entry.flexible_case}] = std::move(entry);
        }
        return db;
    } catch (const FormatError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("offline database: " + path + " violates the schema: " +
                          e.what());
    }
}

}  // namespace parkdr
