#pragma once

#include <string>

#include "parkdr/load_profile.hpp"

namespace parkdr {

// Load a profile from CSV with header `timestamp,load_kw`, ISO-8601 local
// timestamps, one row per sample. Rows must be sorted with no duplicate
// timestamps and must fall on a uniform grid. Gaps of at most
// max_fill_gap - 1 missing samples are filled by monotone cubic
// interpolation over the surrounding points; anything longer makes the
// file unusable (DataError).
LoadProfile read_profile_csv(const std::string& path, int max_fill_gap = 4);

// Render the CSV text for a profile (stable byte-for-byte output).
std::string profile_csv_text(const LoadProfile& profile);

// Write via a temp file + rename so failures never leave partial output.
void write_profile_csv(const LoadProfile& profile, const std::string& path);

// Shared atomic text-file writer.
void atomic_write_text(const std::string& path, const std::string& content);

// Stable shortest-round-trip decimal formatting used for every numeric
// artifact this toolkit emits.
std::string format_double(double v);

}  // namespace parkdr
