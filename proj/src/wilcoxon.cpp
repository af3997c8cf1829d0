// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#include "careerplan/wilcoxon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace careerplan {

WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("paired samples differ in length");
  if (x.empty()) throw std::invalid_argument("empty sample");

  std::vector<double> diffs;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double d = x[i] - y[i];
    if (d != 0.0) diffs.push_back(d);
  }
  WilcoxonResult result;
  result.n = diffs.size();
  if (diffs.empty()) return result;

  const std::size_t n = diffs.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return std::abs(diffs[a]) < std::abs(diffs[b]); });

  // Ranks doubled so averaged ties stay integral.
  std::vector<long> twice_rank(n);
  double tie_term = 0.0;  // sum of t^3 - t over tie groups
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && std::abs(diffs[order[j + 1]]) == std::abs(diffs[order[i]])) ++j;
    const long twice_avg = static_cast<long>(i + 1 + j + 1);
    for (std::size_t k = i; k <= j; ++k) twice_rank[order[k]] = twice_avg;
    const double t = static_cast<double>(j - i + 1);
    tie_term += t * t * t - t;
    i = j + 1;
  }

  long twice_w_plus = 0;
  long twice_total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    twice_total += twice_rank[i];
    if (diffs[i] > 0) twice_w_plus += twice_rank[i];
  }
  const double w_plus = twice_w_plus / 2.0;
  const double w_minus = (twice_total - twice_w_plus) / 2.0;
  result.statistic = std::min(w_plus, w_minus);

  if (n <= kWilcoxonExactMaxN) {
    // counts[s] = number of sign assignments with doubled W+ equal to s
    std::vector<double> counts(static_cast<std::size_t>(twice_total) + 1, 0.0);
    counts[0] = 1.0;
    long reach = 0;
    for (long r : twice_rank) {
      for (long s = reach; s >= 0; --s) {
        if (counts[static_cast<std::size_t>(s)] != 0.0) {
          counts[static_cast<std::size_t>(s + r)] += counts[static_cast<std::size_t>(s)];
        }
      }
      reach += r;
    }
    const double total = std::ldexp(1.0, static_cast<int>(n));
    double lower = 0.0, upper = 0.0;
    for (long s = 0; s <= twice_total; ++s) {
      double c = counts[static_cast<std::size_t>(s)];
      if (s <= twice_w_plus) lower += c;
      if (s >= twice_w_plus) upper += c;
    }
    result.p_value = std::min(1.0, 2.0 * std::min(lower, upper) / total);
    result.exact = true;
    return result;
  }

  const double nd = static_cast<double>(n);
  const double mean = nd * (nd + 1.0) / 4.0;
  const double variance = nd * (nd + 1.0) * (2.0 * nd + 1.0) / 24.0 - tie_term / 48.0;
  if (variance <= 0.0) return result;
  const double distance = std::max(0.0, std::abs(w_plus - mean) - 0.5);
  const double z = distance / std::sqrt(variance);
  result.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
  return result;
}

}  // namespace careerplan
