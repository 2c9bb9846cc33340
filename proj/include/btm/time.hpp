#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace btm {

// Hours since the Unix epoch, UTC. All series in this project are hour-aligned.
using HourStamp = std::int64_t;

// Parses "YYYY-MM-DDThh:mm:ssZ". Minutes and seconds must be zero.
HourStamp parse_iso_hour(std::string_view s);

std::string format_iso_hour(HourStamp h);

inline int hour_of_day(HourStamp h) { return static_cast<int>(((h % 24) + 24) % 24); }

inline std::int64_t day_index(HourStamp h) {
    return (h - hour_of_day(h)) / 24;
}

// 0 = Sunday ... 6 = Saturday (1970-01-01 was a Thursday).
inline int weekday(HourStamp h) { return static_cast<int>(((day_index(h) + 4) % 7 + 7) % 7); }

// 0-based day within the civil year of the stamp.
int day_of_year(HourStamp h);

} // namespace btm
