#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace reqvar {

// Seconds since 1970-01-01T00:00:00 in local standard time (no DST).
using Timestamp = std::int64_t;

inline constexpr std::int64_t kSecondsPerDay = 86400;

Timestamp make_timestamp(int year, unsigned month, unsigned day, int hour = 0, int minute = 0,
                         int second = 0);

// Accepts "YYYY-MM-DD", "YYYY-MM-DDTHH:MM" and "YYYY-MM-DDTHH:MM:SS" (a space may
// replace the 'T'). Throws FormatError otherwise.
Timestamp parse_timestamp(std::string_view text);

std::string format_timestamp(Timestamp t);

struct CivilTime {
    int year;
    unsigned month;
    unsigned day;
    int hour;
    int minute;
    int second;
    unsigned weekday;      // 0 = Monday ... 6 = Sunday
    unsigned day_of_year;  // 1-based
};

CivilTime to_civil(Timestamp t);

}  // namespace reqvar
