// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#include "careerplan/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace careerplan {

TransitionGraph::TransitionGraph(std::vector<JobKey> jobs, std::vector<Edge> edges,
                                 std::vector<NodeStats> nodes)
    : jobs_(std::move(jobs)), edges_(std::move(edges)), nodes_(std::move(nodes)) {
  for (std::size_t i = 0; i < jobs_.size(); ++i) {
    if (!index_.emplace(jobs_[i], static_cast<JobId>(i)).second) {
      throw std::invalid_argument("duplicate job " + jobs_[i].to_string());
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.source, a.target) < std::pair(b.source, b.target);
  });
  offsets_.assign(jobs_.size() + 1, 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.source >= jobs_.size() || edge.target >= jobs_.size()) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (edge.source == edge.target) throw std::invalid_argument("self-loop edge");
    if (e > 0 && edges_[e - 1].source == edge.source && edges_[e - 1].target == edge.target) {
      throw std::invalid_argument("duplicate edge");
    }
    ++offsets_[edge.source + 1];
  }
  for (std::size_t i = 0; i < jobs_.size(); ++i) offsets_[i + 1] += offsets_[i];

  if (nodes_.empty()) nodes_.resize(jobs_.size());
  if (nodes_.size() != jobs_.size()) throw std::invalid_argument("node stats size mismatch");
  for (std::size_t i = 0; i < jobs_.size(); ++i) {
    nodes_[i].out_degree = out_degree(static_cast<JobId>(i));
  }
}

std::optional<JobId> TransitionGraph::find_job(const JobKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> TransitionGraph::find_edge(JobId source, JobId target) const {
  if (source >= jobs_.size()) return std::nullopt;
  auto first = edges_.begin() + static_cast<std::ptrdiff_t>(offsets_[source]);
  auto last = edges_.begin() + static_cast<std::ptrdiff_t>(offsets_[source + 1]);
  auto it = std::lower_bound(first, last, target,
                             [](const Edge& e, JobId t) { return e.target < t; });
  if (it == last || it->target != target) return std::nullopt;
  return static_cast<EdgeIndex>(it - edges_.begin());
}

namespace {

std::vector<CareerTrajectory> merged(std::span<const CareerTrajectory> trajs) {
  std::vector<CareerTrajectory> out;
  out.reserve(trajs.size());
  for (const auto& t : trajs) out.push_back(merge_repeated_jobs(t));
  return out;
}

JobId require_job(const TransitionGraph& graph, const JobKey& key) {
  auto id = graph.find_job(key);
  if (!id) throw std::invalid_argument("job " + key.to_string() + " is not in the graph");
  return *id;
}

}  // namespace

TransitionGraph build_graph(std::span<const CareerTrajectory> trajs) {
  std::set<JobKey> keys;
  for (const auto& t : trajs) {
    for (const auto& s : t.stints) keys.insert(s.job);
  }
  std::vector<JobKey> jobs(keys.begin(), keys.end());
  std::map<JobKey, JobId> ids;
  for (std::size_t i = 0; i < jobs.size(); ++i) ids.emplace(jobs[i], static_cast<JobId>(i));

  std::map<std::pair<JobId, JobId>, std::set<std::string>> hoppers;
  for (const auto& raw : trajs) {
    CareerTrajectory t = merge_repeated_jobs(raw);
    for (std::size_t k = 0; k + 1 < t.stints.size(); ++k) {
      hoppers[{ids.at(t.stints[k].job), ids.at(t.stints[k + 1].job)}].insert(t.person_id);
    }
  }
  std::vector<Edge> edges;
  edges.reserve(hoppers.size());
  for (const auto& [pair, persons] : hoppers) {
    Edge edge;
    edge.source = pair.first;
    edge.target = pair.second;
    edge.stats.hop_count = static_cast<std::uint32_t>(persons.size());
    edges.push_back(edge);
  }
  return TransitionGraph(std::move(jobs), std::move(edges));
}

TransitionGraph compute_duration_cost(TransitionGraph graph,
                                      std::span<const CareerTrajectory> trajs) {
  std::vector<double> total(graph.edge_count(), 0.0);
  std::vector<std::size_t> count(graph.edge_count(), 0);
  std::set<std::pair<std::string, EdgeIndex>> counted;
  for (const auto& t : merged(trajs)) {
    for (std::size_t k = 0; k + 1 < t.stints.size(); ++k) {
      JobId s = require_job(graph, t.stints[k].job);
      JobId d = require_job(graph, t.stints[k + 1].job);
      auto e = graph.find_edge(s, d);
      if (!e) throw std::invalid_argument("trajectories do not match the graph");
      if (!counted.emplace(t.person_id, *e).second) continue;
      total[*e] += t.stints[k].duration_months();
      ++count[*e];
    }
  }
  for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
    graph.mutable_stats(e).duration_cost =
        count[e] > 0 ? total[e] / static_cast<double>(count[e]) : 0.0;
  }
  return graph;
}

TransitionGraph compute_job_levels(TransitionGraph graph,
                                   std::span<const CareerTrajectory> trajs) {
  std::vector<double> total(graph.job_count(), 0.0);
  std::vector<std::size_t> count(graph.job_count(), 0);
  for (const auto& t : merged(trajs)) {
    if (!t.graduation) continue;
    for (const auto& s : t.stints) {
      JobId id = require_job(graph, s.job);
      total[id] += months_between(*t.graduation, s.end);
      ++count[id];
    }
  }
  for (JobId id = 0; id < graph.job_count(); ++id) {
    graph.mutable_node(id).level = count[id] > 0 ? total[id] / static_cast<double>(count[id]) : 0.0;
  }
  for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    graph.mutable_stats(e).level_gain = graph.node(edge.target).level - graph.node(edge.source).level;
  }
  return graph;
}

TransitionGraph compute_pagerank(TransitionGraph graph, const PageRankOptions& options) {
  const std::size_t n = graph.job_count();
  if (n == 0) throw std::invalid_argument("pagerank on an empty graph");
  if (!(options.alpha > 0.0 && options.alpha < 1.0)) {
    throw std::invalid_argument("pagerank alpha must be in (0,1)");
  }
  std::vector<double> weighted_out(n, 0.0);
  for (const Edge& edge : graph.edges()) weighted_out[edge.source] += edge.stats.hop_count;

  const double uniform = 1.0 / static_cast<double>(n);
  std::vector<double> rank(n, uniform), next(n);
  PageRankStatus status;
  for (int iter = 1; iter <= options.max_iter; ++iter) {
    double sink_mass = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (weighted_out[i] <= 0.0) sink_mass += rank[i];
    }
    const double base = options.alpha * uniform + (1.0 - options.alpha) * sink_mass * uniform;
    std::fill(next.begin(), next.end(), base);
    for (const Edge& edge : graph.edges()) {
      next[edge.target] += (1.0 - options.alpha) * rank[edge.source] *
                           (edge.stats.hop_count / weighted_out[edge.source]);
    }
    // renormalize away rounding drift
    double sum = 0.0;
    for (double v : next) sum += v;
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= sum;
      change += std::abs(next[i] - rank[i]);
    }
    rank.swap(next);
    status.iterations = iter;
    status.last_change = change;
    if (change < options.tol) {
      status.converged = true;
      break;
    }
  }
  for (JobId id = 0; id < n; ++id) graph.mutable_node(id).pagerank = rank[id];
  for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    graph.mutable_stats(e).desirability_gain = std::log(rank[edge.target]) - std::log(rank[edge.source]);
  }
  graph.set_pagerank_status(status);
  return graph;
}

TransitionGraph build_scored_graph(std::span<const CareerTrajectory> trajs,
                                   const PageRankOptions& options) {
  TransitionGraph graph = build_graph(trajs);
  graph = compute_duration_cost(std::move(graph), trajs);
  graph = compute_job_levels(std::move(graph), trajs);
  if (!graph.empty()) graph = compute_pagerank(std::move(graph), options);
  return graph;
}

PayoffVector payoff_vector(const Edge& edge) {
  return {-edge.stats.duration_cost, edge.stats.level_gain, edge.stats.desirability_gain};
}

PayoffVector payoff_vector(const TransitionGraph& graph, JobId source, JobId target) {
  auto e = graph.find_edge(source, target);
  if (!e) {
    throw std::out_of_range("no edge " + std::to_string(source) + " -> " + std::to_string(target));
  }
  return payoff_vector(graph.edge(*e));
}

std::map<std::uint32_t, std::size_t> out_degree_distribution(const TransitionGraph& graph) {
  std::map<std::uint32_t, std::size_t> histogram;
  for (JobId id = 0; id < graph.job_count(); ++id) ++histogram[graph.out_degree(id)];
  return histogram;
}

}  // namespace careerplan
