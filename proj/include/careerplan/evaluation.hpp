// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

// Product of improvement means (PIM): the product of the per-criterion mean
// improvements of optimized over observed paths, made negative whenever any
// criterion fails to improve.

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "careerplan/planner.hpp"
#include "careerplan/weights.hpp"

namespace careerplan {

struct ImprovementMeans {
  std::vector<double> mu;  // one entry per criterion, in payoff order
  std::size_t count = 0;   // K
};

// Throws std::invalid_argument on size mismatch, an empty set, or an origin
// mismatch between a person's optimized and actual paths.
ImprovementMeans improvement_means(std::span<const PlannedPath> optimized,
                                   std::span<const PlannedPath> actual);

// min_i sgn(mu_i) * prod_i |mu_i|, where sgn(x) = +1 iff x > 0.
double pim(std::span<const double> mu);

// PIM of a single path pair's total differences.
double path_pim(const PlannedPath& optimized, const PlannedPath& actual);

// Per-criterion differences optimized - actual for one path pair.
PayoffVector path_improvement(const PlannedPath& optimized, const PlannedPath& actual);

// Largest PIM; ties go to the lexicographically smallest vector.
WeightVector select_lambda_star(std::span<const std::pair<WeightVector, double>> pims);

}  // namespace careerplan
