#include "fintext/dates.hpp"

#include <cctype>
#include <charconv>

#include "fintext/error.hpp"

namespace fintext {

namespace {

int parse_int_field(std::string_view s, std::string_view what,
                    std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DataError("malformed " + std::string(what) + " in '" +
                    std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Day Timestamp::local_date() const {
  return std::chrono::floor<std::chrono::days>(utc + offset);
}

std::chrono::seconds Timestamp::local_time_of_day() const {
  auto local = utc + offset;
  return local - std::chrono::floor<std::chrono::days>(local);
}

Day parse_date(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
    throw DataError("malformed date '" + std::string(text) +
                    "' (expected YYYY-MM-DD)");
  }
  int y = parse_int_field(text.substr(0, 4), "year", text);
  int m = parse_int_field(text.substr(5, 2), "month", text);
  int d = parse_int_field(text.substr(8, 2), "day", text);
  std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{unsigned(m)},
                                  std::chrono::day{unsigned(d)}};
  if (!ymd.ok()) {
    throw DataError("invalid calendar date '" + std::string(text) + "'");
  }
  return Day{ymd};
}

Timestamp parse_timestamp(std::string_view text) {
  if (text.size() == 10) {
    Timestamp ts;
    ts.utc = std::chrono::sys_seconds{parse_date(text).time_since_epoch()};
    ts.offset = std::chrono::minutes{0};
    ts.has_time = false;
    return ts;
  }
  if (text.size() < 19 || (text[10] != 'T' && text[10] != ' ')) {
    throw DataError("malformed timestamp '" + std::string(text) +
                    "' (expected YYYY-MM-DDTHH:MM:SS with offset)");
  }
  Day date = parse_date(text.substr(0, 10));
  if (text[13] != ':' || text[16] != ':') {
    throw DataError("malformed time in '" + std::string(text) + "'");
  }
  int hh = parse_int_field(text.substr(11, 2), "hour", text);
  int mm = parse_int_field(text.substr(14, 2), "minute", text);
  int ss = parse_int_field(text.substr(17, 2), "second", text);
  if (hh > 23 || mm > 59 || ss > 60) {
    throw DataError("time of day out of range in '" + std::string(text) + "'");
  }

  std::chrono::minutes offset{0};
  std::string_view rest = text.substr(19);
  if (rest.empty()) {
    throw DataError("timestamp '" + std::string(text) +
                    "' is missing a UTC offset (use Z or +HH:MM)");
  }
  if (rest == "Z" || rest == "z") {
    offset = std::chrono::minutes{0};
  } else if ((rest[0] == '+' || rest[0] == '-') &&
             (rest.size() == 6 && rest[3] == ':')) {
    int oh = parse_int_field(rest.substr(1, 2), "offset hour", text);
    int om = parse_int_field(rest.substr(4, 2), "offset minute", text);
    offset = std::chrono::minutes{oh * 60 + om};
    if (rest[0] == '-') offset = -offset;
  } else {
    throw DataError("malformed UTC offset in '" + std::string(text) + "'");
  }

  Timestamp ts;
  auto local = std::chrono::sys_seconds{date.time_since_epoch()} +
               std::chrono::hours{hh} + std::chrono::minutes{mm} +
               std::chrono::seconds{ss};
  ts.utc = local - offset;
  ts.offset = offset;
  ts.has_time = true;
  return ts;
}

std::string format_date(Day d) {
  std::chrono::year_month_day ymd{d};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", int(ymd.year()),
                unsigned(ymd.month()), unsigned(ymd.day()));
  return buf;
}

std::string format_timestamp(const Timestamp& ts) {
  auto local = ts.utc + ts.offset;
  Day date = std::chrono::floor<std::chrono::days>(local);
  auto tod = std::chrono::duration_cast<std::chrono::seconds>(local - date);
  if (!ts.has_time) return format_date(date);
  long s = tod.count();
  long off = ts.offset.count();
  char sign = off < 0 ? '-' : '+';
  if (off < 0) off = -off;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%sT%02ld:%02ld:%02ld%c%02ld:%02ld",
                format_date(date).c_str(), s / 3600, (s / 60) % 60, s % 60,
                sign, off / 60, off % 60);
  return buf;
}

int year_of(Day d) {
  return int(std::chrono::year_month_day{d}.year());
}

int month_of(Day d) {
  return int(unsigned(std::chrono::year_month_day{d}.month()));
}

bool is_weekend(Day d) {
  std::chrono::weekday wd{d};
  return wd == std::chrono::Saturday || wd == std::chrono::Sunday;
}

}  // namespace fintext
