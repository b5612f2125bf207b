#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace fintext {

/// Calendar date as a serial day count (midnight UTC of that civil date).
using Day = std::chrono::sys_days;

/// A point in time with the UTC offset it was recorded with. The local
/// wall-clock fields (date, time of day) are what filing feeds publish and
/// what the trading-day rules operate on.
struct Timestamp {
  std::chrono::sys_seconds utc{};
  std::chrono::minutes offset{0};
  bool has_time = true;  // false when parsed from a date-only string

  Day local_date() const;
  std::chrono::seconds local_time_of_day() const;

  friend auto operator<=>(const Timestamp& a, const Timestamp& b) {
    return a.utc <=> b.utc;
  }
  friend bool operator==(const Timestamp& a, const Timestamp& b) {
    return a.utc == b.utc;
  }
};

/// Parses "YYYY-MM-DD". Throws DataError on malformed input.
Day parse_date(std::string_view text);

/// Parses ISO-8601 "YYYY-MM-DDTHH:MM:SS+HH:MM" (also accepts 'Z', a space
/// separator, and date-only strings). Throws DataError on malformed input.
Timestamp parse_timestamp(std::string_view text);

std::string format_date(Day d);
std::string format_timestamp(const Timestamp& ts);

int year_of(Day d);
int month_of(Day d);
bool is_weekend(Day d);

}  // namespace fintext
