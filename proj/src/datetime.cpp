#include "parkdr/datetime.hpp"

#include <cmath>
#include <cstdio>

#include "parkdr/errors.hpp"

namespace parkdr {

namespace {

// Days since 1970-01-01 for a civil date (Howard Hinnant's algorithm).
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2u) / 5u + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yy + (m <= 2));
}

int days_in_month(int y, int m) {
    static const int lens[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2) {
        const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
        return leap ? 29 : 28;
    }
    return lens[m - 1];
}

}  // namespace

DateTime DateTime::parse_iso(const std::string& text) {
    DateTime dt;
    char sep = 0;
    const int n = std::sscanf(text.c_str(), "%d-%d-%d%c%d:%d:%d", &dt.year, &dt.month,
                              &dt.day, &sep, &dt.hour, &dt.minute, &dt.second);
    if (n < 3 || (n > 3 && sep != 'T' && sep != ' ') || (n > 3 && n < 6)) {
        throw DataError("bad ISO-8601 timestamp: '" + text + "'");
    }
    if (dt.month < 1 || dt.month > 12 || dt.day < 1 ||
        dt.day > days_in_month(dt.year, dt.month) || dt.hour < 0 || dt.hour > 23 ||
        dt.minute < 0 || dt.minute > 59 || dt.second < 0 || dt.second > 60) {
        throw DataError("out-of-range timestamp field: '" + text + "'");
    }
    return dt;
}

std::string DateTime::to_iso() const {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d", year, month, day,
                  hour, minute, second);
    return buf;
}

std::int64_t DateTime::to_epoch_seconds() const {
    return days_from_civil(year, month, day) * 86400 + hour * 3600 + minute * 60 + second;
}

DateTime DateTime::from_epoch_seconds(std::int64_t s) {
    std::int64_t days = s / 86400;
    std::int64_t rem = s % 86400;
    if (rem < 0) {
        rem += 86400;
        days -= 1;
    }
    DateTime dt;
    civil_from_days(days, dt.year, dt.month, dt.day);
    dt.hour = static_cast<int>(rem / 3600);
    dt.minute = static_cast<int>((rem % 3600) / 60);
    dt.second = static_cast<int>(rem % 60);
    return dt;
}

DateTime DateTime::plus_minutes(double minutes) const {
    const double secs = minutes * 60.0;
    return from_epoch_seconds(to_epoch_seconds() +
                              static_cast<std::int64_t>(std::llround(secs)));
}

double minutes_between(const DateTime& a, const DateTime& b) {
    return static_cast<double>(b.to_epoch_seconds() - a.to_epoch_seconds()) / 60.0;
}

}  // namespace parkdr
