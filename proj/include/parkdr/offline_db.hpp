#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parkdr/dispatch.hpp"

namespace parkdr {

// One precomputed (response target, flexible case) decision record.
struct DbEntry {
    std::string target;                  // "only_night" | "all_day" | "only_daytime"
    std::string flexible_case;           // "H-R-S", ...
    double response_value_kwh = 0.0;     // delivered response, F_act
    double unresponsiveness_kwh = 0.0;   // F
    std::vector<double> response_kw;     // total delivered reduction per timestep
    bool constraints_ok = false;
    std::vector<std::string> warnings;

    bool operator==(const DbEntry& other) const = default;
};

// Response values over every target x flexible case combination, built
// once offline and queried during operation.
struct OfflineDatabase {
    static constexpr int kFormatVersion = 1;

    std::uint64_t seed = 0;
    std::string parameter_hash;  // FNV-1a of the build inputs, hex
    std::string built_at;        // caller-supplied tag; empty keeps builds
                                 // byte-reproducible
    std::map<std::pair<std::string, std::string>, DbEntry> entries;

    bool operator==(const OfflineDatabase& other) const = default;
};

// Dispatch every target against all seven flexible cases and collect the
// response values. Deterministic: identical inputs give an identical
// database, byte for byte once saved.
OfflineDatabase build_database(const Baselines& baselines, const DispatchParams& params,
                               const std::vector<ResponseTarget>& targets,
                               std::uint64_t seed = 0, const std::string& built_at = "");

// Entry lookup; throws DataError for an unknown (target, case) key.
const DbEntry& query(const OfflineDatabase& db, const std::string& target,
                     const std::string& flexible_case);

// Canonical JSON bytes of the database (stable key order and float text).
std::string database_json_text(const OfflineDatabase& db);

// Persist / restore. load_database throws FormatError on version mismatch,
// truncation or schema violations, and never returns a partial database.
void save_database(const OfflineDatabase& db, const std::string& path);
OfflineDatabase load_database(const std::string& path);

// Hash of the dispatch inputs recorded in build metadata.
std::string parameter_fingerprint(const Baselines& baselines,
                                  const DispatchParams& params,
                                  const std::vector<ResponseTarget>& targets);

}  // namespace parkdr
