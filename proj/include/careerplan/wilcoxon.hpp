// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>

namespace careerplan {

inline constexpr std::size_t kWilcoxonExactMaxN = 20;

struct WilcoxonResult {
  double statistic = 0.0;  // min(W+, W-)
  double p_value = 1.0;    // two-sided
  std::size_t n = 0;       // pairs with a nonzero difference
  bool exact = false;
};

// Wilcoxon signed-rank test on paired samples. Zero differences are dropped
// and tied magnitudes share their average rank. Up to kWilcoxonExactMaxN
// nonzero differences the null distribution of W+ is counted exactly over
// all sign assignments (ties included); beyond that a normal approximation
// with tie-corrected variance and a 0.5 continuity correction is used. If
// every difference is zero, p = 1. Throws std::invalid_argument for empty or
// unequal-length samples.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y);

}  // namespace careerplan
