#pragma once

#include <cstdint>
#include <string>

namespace parkdr {

// Wall-clock timestamp without timezone, second resolution.
// Parsed from / formatted as ISO-8601 local time ("2019-03-01T00:15:00";
// the 'T' may also be a space on input).
struct DateTime {
    int year = 2019;
    int month = 1;
    int day = 1;
    int hour = 0;
    int minute = 0;
    int second = 0;

    static DateTime parse_iso(const std::string& text);
    std::string to_iso() const;

    // Seconds since 1970-01-01 00:00:00 in the same (local) clock.
    std::int64_t to_epoch_seconds() const;
    static DateTime from_epoch_seconds(std::int64_t s);

    DateTime plus_minutes(double minutes) const;

    bool operator==(const DateTime& other) const = default;
};

// b - a in minutes.
double minutes_between(const DateTime& a, const DateTime& b);

}  // namespace parkdr
