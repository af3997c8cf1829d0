// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace careerplan {

// Calendar month. All durations in the project are whole months.
struct DateStamp {
  int year = 1970;
  int month = 1;  // 1..12

  // Months elapsed since 0000-01; used for ordering and differences.
  constexpr int ordinal() const { return year * 12 + (month - 1); }

  static constexpr DateStamp from_ordinal(int ordinal) {
    return DateStamp{ordinal / 12, ordinal % 12 + 1};
  }

  // Accepts "YYYY-MM" and "YYYY-MM-DD"; the day is discarded.
  static DateStamp parse(std::string_view text);

  std::string to_string() const;

  friend constexpr bool operator==(const DateStamp& a, const DateStamp& b) {
    return a.ordinal() == b.ordinal();
  }
  friend constexpr std::strong_ordering operator<=>(const DateStamp& a,
                                                    const DateStamp& b) {
    return a.ordinal() <=> b.ordinal();
  }
};

// Signed number of months from `from` to `to`.
constexpr int months_between(const DateStamp& from, const DateStamp& to) {
  return to.ordinal() - from.ordinal();
}

constexpr DateStamp add_months(const DateStamp& date, int months) {
  return DateStamp::from_ordinal(date.ordinal() + months);
}

}  // namespace careerplan
