// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

// Value iteration over transition utilities:
//
//   U(s,d) <- r(s,d) + gamma * V(d),   V(d) = max_{d'} U(d,d'),
//
// with V = 0 at jobs that have no outgoing transition. The backup is a
// gamma-contraction in the sup norm, so for gamma < 1 the iterates converge to
// the unique fixed point from any starting table.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "careerplan/graph.hpp"
#include "careerplan/weights.hpp"

namespace careerplan {

enum class UpdateMode {
  kSync,   // Jacobi: every backup reads the previous iterate
  kAsync,  // Gauss-Seidel: in place, edges in (source, target) order
};

struct ValueIterationOptions {
  double gamma = 0.7;
  int max_iter = 50;  // T_max
  UpdateMode mode = UpdateMode::kSync;
  std::optional<double> stop_tol;  // stop once the sup-norm change drops below
};

struct UtilityTable {
  std::vector<double> lambda;  // weights the payoff was built from; empty if none
  double gamma = 0.0;
  std::vector<double> values;  // indexed by EdgeIndex
  std::vector<double> trace;   // sup-norm change of each sweep

  double utility(EdgeIndex e) const { return values.at(e); }
};

// Per-edge payoffs; index i belongs to graph.edge(i).
using EdgePayoff = std::vector<double>;

EdgePayoff criterion_payoff(const TransitionGraph& graph, Criterion criterion);
EdgePayoff scalarized_payoff(const TransitionGraph& graph, const WeightVector& lambda);

// Runs sweeps from `initial` (zeros when empty) until max_iter sweeps or the
// stop tolerance. Throws std::invalid_argument on a non-finite payoff, a size
// mismatch, gamma outside (0,1] or max_iter < 1.
UtilityTable value_iteration(const TransitionGraph& graph, std::span<const double> payoff,
                             const ValueIterationOptions& options,
                             std::span<const double> initial = {});

// V(s) = max over out-edges of U; 0 at sinks.
std::vector<double> node_values(const TransitionGraph& graph, std::span<const double> utilities);

// Out-edge of `source` with the largest utility, ties to the smallest target
// id; nullopt at sinks.
std::optional<EdgeIndex> best_out_edge(const TransitionGraph& graph,
                                       std::span<const double> utilities, JobId source);

}  // namespace careerplan
