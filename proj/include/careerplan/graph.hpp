// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

// Job-transition graph and the per-edge payoff statistics:
//   duration cost     D(s,d)  mean months spent in s before hopping to d
//   level gain        L(s,d)  = L(d) - L(s), levels being mean post-graduation
//                             experience at the end of a stint
//   desirability gain R(s,d)  = ln P(d) - ln P(s), P a hop-weighted PageRank

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "careerplan/trajectory.hpp"

namespace careerplan {

using JobId = std::uint32_t;
using EdgeIndex = std::size_t;

inline constexpr std::size_t kCriteria = 3;
using PayoffVector = std::array<double, kCriteria>;

// Order of the payoff vector components.
enum class Criterion : int { kNegDuration = 0, kLevel = 1, kDesirability = 2 };

struct EdgeStats {
  std::uint32_t hop_count = 0;   // distinct persons making the hop
  double duration_cost = 0.0;    // months
  double level_gain = 0.0;       // months
  double desirability_gain = 0.0;
};

struct Edge {
  JobId source = 0;
  JobId target = 0;
  EdgeStats stats;
};

struct NodeStats {
  double level = 0.0;     // months
  double pagerank = 0.0;
  std::uint32_t out_degree = 0;
};

struct PageRankOptions {
  double alpha = 0.15;  // teleport probability
  double tol = 1e-10;   // L1 change between iterates
  int max_iter = 200;
};

struct PageRankStatus {
  int iterations = 0;
  double last_change = 0.0;
  bool converged = false;
};

// Jobs get ids in JobKey order, so ids do not depend on input order. Edges are
// stored sorted by (source, target) with a CSR index over sources; the
// successors of a node are therefore visited in increasing target id.
class TransitionGraph {
 public:
  TransitionGraph() = default;
  // Edges need not be sorted; duplicates and self-loops are rejected.
  TransitionGraph(std::vector<JobKey> jobs, std::vector<Edge> edges,
                  std::vector<NodeStats> nodes = {});

  std::size_t job_count() const { return jobs_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return jobs_.empty(); }

  const JobKey& job(JobId id) const { return jobs_.at(id); }
  std::span<const JobKey> jobs() const { return jobs_; }
  std::optional<JobId> find_job(const JobKey& key) const;

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  std::optional<EdgeIndex> find_edge(JobId source, JobId target) const;

  // Indices of the out-edges of `source`, ascending by target.
  std::pair<EdgeIndex, EdgeIndex> out_edge_range(JobId source) const {
    return {offsets_[source], offsets_[source + 1]};
  }
  std::uint32_t out_degree(JobId source) const {
    return static_cast<std::uint32_t>(offsets_[source + 1] - offsets_[source]);
  }

  const NodeStats& node(JobId id) const { return nodes_.at(id); }
  std::span<const NodeStats> nodes() const { return nodes_; }

  // Statistics writers used by the compute_* passes.
  EdgeStats& mutable_stats(EdgeIndex e) { return edges_.at(e).stats; }
  NodeStats& mutable_node(JobId id) { return nodes_.at(id); }

  const PageRankStatus& pagerank_status() const { return pagerank_status_; }
  void set_pagerank_status(const PageRankStatus& status) { pagerank_status_ = status; }

 private:
  std::vector<JobKey> jobs_;
  std::map<JobKey, JobId> index_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<NodeStats> nodes_;
  PageRankStatus pagerank_status_;
};

// Nodes are every job appearing in the trajectories; edges every observed
// consecutive pair of distinct jobs, after merging repeated consecutive stints.
TransitionGraph build_graph(std::span<const CareerTrajectory> trajs);

// D(s,d): mean source-stint length over the persons making the hop. A person
// hopping s->d more than once contributes their first such hop only.
TransitionGraph compute_duration_cost(TransitionGraph graph,
                                      std::span<const CareerTrajectory> trajs);

// L(s): mean over all stints of s (by persons with a graduation date) of the
// months from graduation to the stint end. Jobs with no such stint get 0.
TransitionGraph compute_job_levels(TransitionGraph graph,
                                   std::span<const CareerTrajectory> trajs);

// Power iteration over the hop-count weighted transition matrix. Sink rows
// spread their mass uniformly; every step teleports with probability alpha.
// Non-convergence leaves the last iterate in place with converged = false.
TransitionGraph compute_pagerank(TransitionGraph graph, const PageRankOptions& options = {});

// All of the above in order.
TransitionGraph build_scored_graph(std::span<const CareerTrajectory> trajs,
                                   const PageRankOptions& options = {});

// [-D, L, R] for an edge.
PayoffVector payoff_vector(const Edge& edge);
// Throws std::out_of_range when (s,d) is not an edge.
PayoffVector payoff_vector(const TransitionGraph& graph, JobId source, JobId target);

// out-degree -> number of jobs with that out-degree
std::map<std::uint32_t, std::size_t> out_degree_distribution(const TransitionGraph& graph);

}  // namespace careerplan
