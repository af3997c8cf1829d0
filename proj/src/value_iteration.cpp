// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#include "careerplan/value_iteration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace careerplan {

EdgePayoff criterion_payoff(const TransitionGraph& graph, Criterion criterion) {
  EdgePayoff payoff(graph.edge_count());
  const auto index = static_cast<std::size_t>(criterion);
  for (EdgeIndex e = 0; e < graph.edge_count(); ++e) payoff[e] = payoff_vector(graph.edge(e))[index];
  return payoff;
}

EdgePayoff scalarized_payoff(const TransitionGraph& graph, const WeightVector& lambda) {
  EdgePayoff payoff(graph.edge_count());
  for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
    payoff[e] = scalarize(payoff_vector(graph.edge(e)), lambda);
  }
  return payoff;
}

namespace {

inline double successor_value(const TransitionGraph& graph, std::span<const double> u, JobId node) {
  auto [first, last] = graph.out_edge_range(node);
  if (first == last) return 0.0;
  double best = u[first];
  for (EdgeIndex e = first + 1; e < last; ++e) best = std::max(best, u[e]);
  return best;
}

}  // namespace

UtilityTable value_iteration(const TransitionGraph& graph, std::span<const double> payoff,
                             const ValueIterationOptions& options,
                             std::span<const double> initial) {
  const std::size_t m = graph.edge_count();
  if (payoff.size() != m) throw std::invalid_argument("payoff size does not match edge count");
  for (double r : payoff) {
    if (!std::isfinite(r)) throw std::invalid_argument("non-finite payoff");
  }
  if (!(options.gamma > 0.0 && options.gamma <= 1.0)) {
    throw std::invalid_argument("gamma must be in (0,1]");
  }
  if (options.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  if (!initial.empty() && initial.size() != m) {
    throw std::invalid_argument("initial table size does not match edge count");
  }

  UtilityTable table;
  table.gamma = options.gamma;
  table.values.assign(m, 0.0);
  if (!initial.empty()) table.values.assign(initial.begin(), initial.end());

  std::vector<double> value(graph.job_count());
  std::vector<double>& u = table.values;
  for (int iter = 0; iter < options.max_iter; ++iter) {
    double delta = 0.0;
    if (options.mode == UpdateMode::kSync) {
      for (JobId node = 0; node < graph.job_count(); ++node) {
        value[node] = successor_value(graph, u, node);
      }
      for (EdgeIndex e = 0; e < m; ++e) {
        double updated = payoff[e] + options.gamma * value[graph.edge(e).target];
        delta = std::max(delta, std::abs(updated - u[e]));
        u[e] = updated;
      }
    } else {
      for (EdgeIndex e = 0; e < m; ++e) {
        double updated = payoff[e] + options.gamma * successor_value(graph, u, graph.edge(e).target);
        delta = std::max(delta, std::abs(updated - u[e]));
        u[e] = updated;
      }
    }
    table.trace.push_back(delta);
    if (options.stop_tol && delta < *options.stop_tol) break;
  }
  return table;
}

std::vector<double> node_values(const TransitionGraph& graph, std::span<const double> utilities) {
  std::vector<double> v(graph.job_count());
  for (JobId node = 0; node < graph.job_count(); ++node) {
    v[node] = successor_value(graph, utilities, node);
  }
  return v;
}

std::optional<EdgeIndex> best_out_edge(const TransitionGraph& graph,
                                       std::span<const double> utilities, JobId source) {
  auto [first, last] = graph.out_edge_range(source);
  if (first == last) return std::nullopt;
  EdgeIndex best = first;
  for (EdgeIndex e = first + 1; e < last; ++e) {
    if (utilities[e] > utilities[best]) best = e;
  }
  return best;
}

}  // namespace careerplan
