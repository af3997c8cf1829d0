// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

// Path-planning benchmark: every method plans from the origin of every
// observed path, and is scored by its per-criterion mean improvement over the
// observed paths, the PIM of those means, and Wilcoxon tests of its per-path
// improvements against the multicriteria method.

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "careerplan/evaluation.hpp"
#include "careerplan/graph.hpp"
#include "careerplan/muld.hpp"
#include "careerplan/planner.hpp"
#include "careerplan/trajectory.hpp"
#include "careerplan/value_iteration.hpp"

#include "json.hpp"

namespace careerplan {

enum class Method {
  kGreedyMostCommon,
  kGreedyShortestDuration,
  kGreedyLevelGain,
  kGreedyDesirabilityGain,
  kUtilityDuration,
  kUtilityLevel,
  kUtilityDesirability,
  kEquallyWeighted,
  kMuld,
};

inline constexpr std::array<Method, 9> kAllMethods = {
    Method::kGreedyMostCommon,   Method::kGreedyShortestDuration, Method::kGreedyLevelGain,
    Method::kGreedyDesirabilityGain, Method::kUtilityDuration,     Method::kUtilityLevel,
    Method::kUtilityDesirability, Method::kEquallyWeighted,        Method::kMuld};

std::string_view method_label(Method method);         // e.g. "greedy_most_common"
std::string_view method_display_name(Method method);  // e.g. "Greedy most common"
// Throws std::invalid_argument for an unknown label.
Method parse_method(std::string_view label);
bool is_greedy(Method method);

struct BenchmarkOptions {
  ValueIterationOptions value_iteration;  // gamma 0.7, T_max 50, sync
  int H = 10;
  int max_len = kDefaultMaxLen;
  double equal_w1 = 1.0;
  double equal_w2 = 1.0;
  double equal_w3 = 500.0;
  double significance = 0.01;  // gates the better/worse markers
  unsigned threads = 0;
};

// One learned grid point scored against the observed paths.
struct GridScore {
  WeightVector lambda;
  ImprovementMeans means;
  double pim = 0.0;
  std::size_t iterations = 0;
  double first_delta = 0.0;
  double final_delta = 0.0;
};

// Plans a utility path from each observed path's origin. Paths sharing an
// origin share the planned path.
std::vector<PlannedPath> plan_for_origins(const TransitionGraph& graph,
                                          std::span<const double> utilities,
                                          std::span<const PlannedPath> actual, int max_len,
                                          const std::string& method);

std::vector<GridScore> score_grid(const TransitionGraph& graph,
                                  std::span<const LearnedUtility> learned,
                                  std::span<const PlannedPath> actual, int max_len);

// Maximizes PIM over the scored grid with the lexicographic tie rule.
WeightVector select_lambda_star(std::span<const GridScore> scores);

struct MethodRow {
  Method method = Method::kMuld;
  double pim = 0.0;  // PIM of the mean improvements
  // Mean improvement per criterion in payoff order: D_actual - D_opt,
  // L_opt - L_actual, R_opt - R_actual.
  std::array<double, kCriteria> mean{};
  // Two-sided Wilcoxon p-value of the per-path improvements against MUL/D;
  // absent on the MUL/D row or when MUL/D is not benchmarked.
  std::array<std::optional<double>, kCriteria> p_value{};
  std::array<char, kCriteria> marker{' ', ' ', ' '};  // '+', '-' or ' '
  std::vector<double> path_pims;  // PIM of each path's improvement vector
  std::vector<double> pim_deltas;  // PIM_P(MUL/D) - PIM_P(this); empty on MUL/D
  double path_pim_mean = 0.0;
  double delta_mean = 0.0;
  double delta_median = 0.0;
};

struct BenchmarkReport {
  std::size_t path_count = 0;
  BenchmarkOptions options;
  std::vector<MethodRow> rows;  // in the requested method order
  std::vector<GridScore> grid;  // empty unless MUL/D was benchmarked
  std::optional<WeightVector> lambda_star;
};

// Throws std::invalid_argument when there is no observed path to compare.
BenchmarkReport benchmark(const TransitionGraph& graph,
                          std::span<const CareerTrajectory> trajectories,
                          std::span<const Method> methods, const BenchmarkOptions& options);

nlohmann::json report_to_json(const BenchmarkReport& report, bool include_path_deltas = true);

// Fixed-width table: Method | PIM | mean dD | p | mean dL | p | mean dR | p | marker
std::string render_report_table(const BenchmarkReport& report);

double median(std::vector<double> values);

}  // namespace careerplan
