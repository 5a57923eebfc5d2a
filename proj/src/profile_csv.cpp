#include "parkdr/profile_csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "parkdr/errors.hpp"
#include "parkdr/interpolate.hpp"

namespace parkdr {

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void atomic_write_text(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) {
        fs::create_directories(target.parent_path());
    }
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw DataError("cannot open for writing: " + tmp.string());
        }
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw DataError("write failed: " + tmp.string());
        }
    }
    fs::rename(tmp, target);
}

std::string profile_csv_text(const LoadProfile& profile) {
    profile.validate();
    std::ostringstream out;
    out << "timestamp,load_kw\n";
    for (std::size_t i = 0; i < profile.size(); ++i) {
        out << profile.start.plus_minutes(profile.step_min * static_cast<double>(i)).to_iso()
            << ',' << format_double(profile.values_kw[i]) << '\n';
    }
    return out.str();
}

void write_profile_csv(const LoadProfile& profile, const std::string& path) {
    atomic_write_text(path, profile_csv_text(profile));
}

LoadProfile read_profile_csv(const std::string& path, int max_fill_gap) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open: " + path);
    }
    std::string line;
    if (!std::getline(in, line) || (line != "timestamp,load_kw" &&
                                    line != "timestamp,load_kw\r")) {
        throw DataError(path + ": expected header 'timestamp,load_kw'");
    }

    std::vector<std::int64_t> times_s;
    std::vector<double> values;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw DataError(path + ":" + std::to_string(lineno) + ": missing comma");
        }
        const DateTime ts = DateTime::parse_iso(line.substr(0, comma));
        double value = 0.0;
        const std::string field = line.substr(comma + 1);
        const auto res =
            std::from_chars(field.data(), field.data() + field.size(), value);
        if (res.ec != std::errc() || !std::isfinite(value)) {
            throw DataError(path + ":" + std::to_string(lineno) + ": bad load value '" +
                            field + "'");
        }
        times_s.push_back(ts.to_epoch_seconds());
        values.push_back(value);
    }
    if (times_s.size() < 2) {
        throw DataError(path + ": need at least two samples");
    }
    for (std::size_t i = 1; i < times_s.size(); ++i) {
        if (times_s[i] == times_s[i - 1]) {
            throw DataError(path + ": duplicate timestamp at row " + std::to_string(i + 2));
        }
        if (times_s[i] < times_s[i - 1]) {
            throw DataError(path + ": timestamps not sorted at row " + std::to_string(i + 2));
        }
    }

    // Infer the grid from the smallest gap, then place every sample on it.
    std::int64_t step_s = times_s[1] - times_s[0];
    for (std::size_t i = 1; i + 1 < times_s.size(); ++i) {
        step_s = std::min(step_s, times_s[i + 1] - times_s[i]);
    }
    const std::int64_t span = times_s.back() - times_s.front();
    if (span % step_s != 0) {
        throw DataError(path + ": samples do not fall on a uniform grid");
    }
    const std::size_t slots = static_cast<std::size_t>(span / step_s) + 1;

    std::vector<double> grid(slots, std::numeric_limits<double>::quiet_NaN());
    std::vector<double> node_x, node_y;
    node_x.reserve(times_s.size());
    for (std::size_t i = 0; i < times_s.size(); ++i) {
        const std::int64_t offset = times_s[i] - times_s.front();
        if (offset % step_s != 0) {
            throw DataError(path + ": sample off the grid at row " + std::to_string(i + 2));
        }
        grid[static_cast<std::size_t>(offset / step_s)] = values[i];
        node_x.push_back(static_cast<double>(offset / step_s));
        node_y.push_back(values[i]);
    }

    // Short gaps are interpolated; longer ones make the data unusable.
    std::vector<double> missing_x;
    std::size_t run = 0;
    for (std::size_t i = 0; i < slots; ++i) {
        if (std::isnan(grid[i])) {
            ++run;
            if (run >= static_cast<std::size_t>(max_fill_gap)) {
                throw DataError(path + ": gap of " + std::to_string(run) +
                                "+ missing samples, day unusable");
            }
            missing_x.push_back(static_cast<double>(i));
        } else {
            run = 0;
        }
    }
    if (!missing_x.empty()) {
        const auto filled = monotone_cubic_interpolate(node_x, node_y, missing_x);
        for (std::size_t i = 0; i < missing_x.size(); ++i) {
            grid[static_cast<std::size_t>(missing_x[i])] = filled[i];
        }
    }

    LoadProfile profile;
    profile.start = DateTime::from_epoch_seconds(times_s.front());
    profile.step_min = static_cast<double>(step_s) / 60.0;
    profile.values_kw = std::move(grid);
    profile.validate();
    return profile;
}

}  // namespace parkdr
