// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "careerplan/graph.hpp"
#include "careerplan/trajectory.hpp"
#include "careerplan/value_iteration.hpp"

namespace careerplan {

inline constexpr int kDefaultMaxLen = 10;

struct PlannedPath {
  JobId origin = 0;
  std::vector<EdgeIndex> hops;  // consecutive edges starting at origin
  PayoffVector totals{};        // sum of [-D, L, R] over the hops
  std::string method;

  std::size_t length() const { return hops.size(); }
};

enum class GreedyCriterion { kMostCommon, kShortestDuration, kLevelGain, kDesirabilityGain };

std::string_view to_string(GreedyCriterion criterion);

// Rebuilds totals from the graph's edge statistics.
PayoffVector path_totals(const TransitionGraph& graph, std::span<const EdgeIndex> hops);

// Follows the utility-maximizing out-edge from the origin. Stops at a sink,
// after max_len hops, or when the chosen successor was already visited.
// Throws std::out_of_range for an unknown origin.
PlannedPath utility_path(const TransitionGraph& graph, std::span<const double> utilities,
                         JobId origin, int max_len = kDefaultMaxLen,
                         std::string method = "utility");

// Same walk, but each step maximizes the local edge score: hop count, -D, L or R.
PlannedPath greedy_path(const TransitionGraph& graph, JobId origin, GreedyCriterion criterion,
                        int max_len = kDefaultMaxLen);

// r(s,d) = w1*L - w2*D + w3*R. Defaults put R on roughly the scale of the
// month-valued criteria.
EdgePayoff equally_weighted_payoff(const TransitionGraph& graph, double w1 = 1.0,
                                   double w2 = 1.0, double w3 = 500.0);

// The observed path of a trajectory on the graph, scored with the graph's
// aggregated edge statistics. Repeated consecutive jobs are merged first.
// Returns nullopt when the trajectory has no hop; throws std::invalid_argument
// when a job or hop is missing from the graph.
std::optional<PlannedPath> actual_path(const TransitionGraph& graph,
                                       const CareerTrajectory& trajectory);

std::vector<PlannedPath> actual_paths(const TransitionGraph& graph,
                                      std::span<const CareerTrajectory> trajectories);

// Discounted payoff sum_t gamma^t r(hop_t).
double discounted_payoff(std::span<const double> payoff, std::span<const EdgeIndex> hops,
                         double gamma);

}  // namespace careerplan
