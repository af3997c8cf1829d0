// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#include "careerplan/planner.hpp"

#include <stdexcept>

namespace careerplan {

std::string_view to_string(GreedyCriterion criterion) {
  switch (criterion) {
    case GreedyCriterion::kMostCommon: return "greedy_most_common";
    case GreedyCriterion::kShortestDuration: return "greedy_shortest_duration";
    case GreedyCriterion::kLevelGain: return "greedy_level_gain";
    case GreedyCriterion::kDesirabilityGain: return "greedy_desirability_gain";
  }
  return "greedy";
}

PayoffVector path_totals(const TransitionGraph& graph, std::span<const EdgeIndex> hops) {
  PayoffVector totals{};
  for (EdgeIndex e : hops) {
    PayoffVector f = payoff_vector(graph.edge(e));
    for (std::size_t i = 0; i < kCriteria; ++i) totals[i] += f[i];
  }
  return totals;
}

namespace {

// Shared walk: `choose` returns the out-edge to follow from a node.
template <typename Choose>
PlannedPath walk(const TransitionGraph& graph, JobId origin, int max_len, std::string method,
                 Choose choose) {
  if (origin >= graph.job_count()) {
    throw std::out_of_range("origin job " + std::to_string(origin) + " is not in the graph");
  }
  if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
  PlannedPath path;
  path.origin = origin;
  path.method = std::move(method);
  std::vector<bool> visited(graph.job_count(), false);
  visited[origin] = true;
  JobId current = origin;
  while (static_cast<int>(path.hops.size()) < max_len) {
    std::optional<EdgeIndex> next = choose(current);
    if (!next) break;
    JobId target = graph.edge(*next).target;
    if (visited[target]) break;
    visited[target] = true;
    path.hops.push_back(*next);
    current = target;
  }
  path.totals = path_totals(graph, path.hops);
  return path;
}

double greedy_score(const Edge& edge, GreedyCriterion criterion) {
  switch (criterion) {
    case GreedyCriterion::kMostCommon: return edge.stats.hop_count;
    case GreedyCriterion::kShortestDuration: return -edge.stats.duration_cost;
    case GreedyCriterion::kLevelGain: return edge.stats.level_gain;
    case GreedyCriterion::kDesirabilityGain: return edge.stats.desirability_gain;
  }
  return 0.0;
}

}  // namespace

PlannedPath utility_path(const TransitionGraph& graph, std::span<const double> utilities,
                         JobId origin, int max_len, std::string method) {
  if (utilities.size() != graph.edge_count()) {
    throw std::invalid_argument("utility table does not match the graph");
  }
  return walk(graph, origin, max_len, std::move(method),
              [&](JobId node) { return best_out_edge(graph, utilities, node); });
}

PlannedPath greedy_path(const TransitionGraph& graph, JobId origin, GreedyCriterion criterion,
                        int max_len) {
  return walk(graph, origin, max_len, std::string(to_string(criterion)),
              [&](JobId node) -> std::optional<EdgeIndex> {
                auto [first, last] = graph.out_edge_range(node);
                if (first == last) return std::nullopt;
                EdgeIndex best = first;
                double best_score = greedy_score(graph.edge(first), criterion);
                for (EdgeIndex e = first + 1; e < last; ++e) {
                  double score = greedy_score(graph.edge(e), criterion);
                  if (score > best_score) {
                    best = e;
                    best_score = score;
                  }
                }
                return best;
              });
}

EdgePayoff equally_weighted_payoff(const TransitionGraph& graph, double w1, double w2, double w3) {
  EdgePayoff payoff(graph.edge_count());
  for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
    const EdgeStats& s = graph.edge(e).stats;
    payoff[e] = w1 * s.level_gain - w2 * s.duration_cost + w3 * s.desirability_gain;
  }
  return payoff;
}

std::optional<PlannedPath> actual_path(const TransitionGraph& graph,
                                       const CareerTrajectory& trajectory) {
  CareerTrajectory merged = merge_repeated_jobs(trajectory);
  if (merged.stints.size() < 2) return std::nullopt;
  auto lookup = [&](const JobKey& key) {
    auto id = graph.find_job(key);
    if (!id) throw std::invalid_argument("job " + key.to_string() + " is not in the graph");
    return *id;
  };
  PlannedPath path;
  path.method = "actual";
  path.origin = lookup(merged.stints.front().job);
  JobId current = path.origin;
  for (std::size_t k = 1; k < merged.stints.size(); ++k) {
    JobId next = lookup(merged.stints[k].job);
    auto e = graph.find_edge(current, next);
    if (!e) throw std::invalid_argument("observed hop is not an edge of the graph");
    path.hops.push_back(*e);
    current = next;
  }
  path.totals = path_totals(graph, path.hops);
  return path;
}

std::vector<PlannedPath> actual_paths(const TransitionGraph& graph,
                                      std::span<const CareerTrajectory> trajectories) {
  std::vector<PlannedPath> out;
  out.reserve(trajectories.size());
  for (const auto& t : trajectories) {
    if (auto path = actual_path(graph, t)) out.push_back(std::move(*path));
  }
  return out;
}

double discounted_payoff(std::span<const double> payoff, std::span<const EdgeIndex> hops,
                         double gamma) {
  double total = 0.0;
  double factor = 1.0;
  for (EdgeIndex e : hops) {
    total += factor * payoff[e];
    factor *= gamma;
  }
  return total;
}

}  // namespace careerplan
