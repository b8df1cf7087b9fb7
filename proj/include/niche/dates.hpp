#pragma once

#include <charconv>
#include <compare>
#include <cstdio>
#include <string>

#include "niche/common.hpp"

namespace niche {

// Calendar date with civil-day arithmetic; good enough for panel timelines.
struct Date {
  int year = 1970;
  int month = 1;  // 1..12
  int day = 1;    // 1..31

  auto operator<=>(const Date&) const = default;

  // Days since 1970-01-01 (Gregorian, proleptic).
  long serial() const {
    int y = year;
    const unsigned m = static_cast<unsigned>(month);
    const unsigned d = static_cast<unsigned>(day);
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return static_cast<long>(era) * 146097 + static_cast<long>(doe) - 719468;
  }

  std::string iso() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
    return buf;
  }
};

inline long days_between(const Date& from, const Date& to) {
  return to.serial() - from.serial();
}

inline Date parse_date(const std::string& s) {
  Date d;
  if (s.size() != 10 || s[4] != '-' || s[7] != '-')
    throw DataError("bad ISO date: '" + s + "'");
  auto num = [&](std::size_t off, std::size_t len, int& out) {
    auto res = std::from_chars(s.data() + off, s.data() + off + len, out);
    if (res.ec != std::errc() || res.ptr != s.data() + off + len)
      throw DataError("bad ISO date: '" + s + "'");
  };
  num(0, 4, d.year);
  num(5, 2, d.month);
  num(8, 2, d.day);
  if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > 31)
    throw DataError("date out of range: '" + s + "'");
  return d;
}

}  // namespace niche
