// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

// Decomposition-based multicriteria utility learning: one independent value
// iteration per feasible grid weight vector, each on the weighted-sum payoff.

#pragma once

#include <vector>

#include "careerplan/graph.hpp"
#include "careerplan/value_iteration.hpp"
#include "careerplan/weights.hpp"

namespace careerplan {

struct LearnedUtility {
  WeightVector lambda;
  UtilityTable table;
};

// Tables come back in the grid's feasible order whatever the thread count;
// threads == 0 uses the hardware concurrency.
std::vector<LearnedUtility> muld_learn(const TransitionGraph& graph, const WeightGrid& grid,
                                       const ValueIterationOptions& options,
                                       unsigned threads = 0);

}  // namespace careerplan
