// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#include "careerplan/dates.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace careerplan {

namespace {

int parse_digits(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed date '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

DateStamp DateStamp::parse(std::string_view text) {
  // YYYY-MM or YYYY-MM-DD
  if ((text.size() != 7 && text.size() != 10) || text[4] != '-' ||
      (text.size() == 10 && text[7] != '-')) {
    throw std::invalid_argument("malformed date '" + std::string(text) +
                                "', expected YYYY-MM");
  }
  DateStamp date;
  date.year = parse_digits(text.substr(0, 4), text);
  date.month = parse_digits(text.substr(5, 2), text);
  if (date.month < 1 || date.month > 12) {
    throw std::invalid_argument("month out of range in '" + std::string(text) + "'");
  }
  if (text.size() == 10) {
    int day = parse_digits(text.substr(8, 2), text);
    if (day < 1 || day > 31) {
      throw std::invalid_argument("day out of range in '" + std::string(text) + "'");
    }
  }
  return date;
}

std::string DateStamp::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
  return buf;
}

}  // namespace careerplan
