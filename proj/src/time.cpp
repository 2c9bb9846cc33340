#include "btm/time.hpp"

#include "btm/error.hpp"

#include <cstdio>

namespace btm {
namespace {

// Civil-date conversions (Howard Hinnant's algorithms, public domain).
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
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

int parse_int(std::string_view s, size_t pos, size_t len) {
    int v = 0;
    for (size_t i = pos; i < pos + len; ++i) {
        char c = i < s.size() ? s[i] : '\0';
        if (c < '0' || c > '9') fail("bad timestamp '" + std::string(s) + "': expected digit");
        v = v * 10 + (c - '0');
    }
    return v;
}

} // namespace

HourStamp parse_iso_hour(std::string_view s) {
    // YYYY-MM-DDThh:mm:ssZ
    if (s.size() != 20 || s[4] != '-' || s[7] != '-' || s[10] != 'T' || s[13] != ':' ||
        s[16] != ':' || s[19] != 'Z')
        fail("bad timestamp '" + std::string(s) + "': expected YYYY-MM-DDThh:mm:ssZ");
    int y = parse_int(s, 0, 4), mo = parse_int(s, 5, 2), d = parse_int(s, 8, 2);
    int hh = parse_int(s, 11, 2), mi = parse_int(s, 14, 2), ss = parse_int(s, 17, 2);
    require(mo >= 1 && mo <= 12 && d >= 1 && d <= 31 && hh <= 23,
            "bad timestamp '" + std::string(s) + "': field out of range");
    require(mi == 0 && ss == 0,
            "timestamp '" + std::string(s) + "' is not hour-aligned");
    return days_from_civil(y, mo, d) * 24 + hh;
}

std::string format_iso_hour(HourStamp h) {
    int y, mo, d;
    civil_from_days(day_index(h), y, mo, d);
    char buf[24];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:00:00Z", y, mo, d, hour_of_day(h));
    return buf;
}

int day_of_year(HourStamp h) {
    int y, mo, d;
    civil_from_days(day_index(h), y, mo, d);
    return static_cast<int>(day_index(h) - days_from_civil(y, 1, 1));
}

} // namespace btm
