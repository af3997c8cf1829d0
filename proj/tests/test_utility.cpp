// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "careerplan/muld.hpp"
#include "careerplan/synthetic.hpp"
#include "careerplan/value_iteration.hpp"
#include "careerplan/weights.hpp"
#include "oracles.hpp"

using namespace careerplan;
using careerplan::testing::graph_from_edges;
using careerplan::testing::random_dag;

namespace {

const TransitionGraph& small_synthetic() {
  static const TransitionGraph graph = [] {
    GeneratorConfig config;
    config.jobs = 60;
    config.persons = 800;
    return build_scored_graph(clean(generate_synthetic(config, 7), {2, true}));
  }();
  return graph;
}

ValueIterationOptions sync(double gamma, int max_iter = 50) {
  ValueIterationOptions o;
  o.gamma = gamma;
  o.max_iter = max_iter;
  return o;
}

}  // namespace

TEST_CASE("weight grid counts") {
  WeightGrid g = make_weight_grid(3, 10);
  CHECK(g.raw_count() == 121);
  CHECK(g.feasible_count() == 66);
  CHECK(g.feasible().size() == 66);

  WeightGrid two = make_weight_grid(2, 4);
  CHECK(two.raw_count() == 5);
  CHECK(two.feasible_count() == 5);

  for (int h : {1, 3, 10}) {
    WeightGrid one = make_weight_grid(1, h);
    REQUIRE(one.feasible().size() == 1);
    CHECK(one.feasible()[0][0] == 1.0);
  }
  CHECK_THROWS_AS(make_weight_grid(0, 10), std::invalid_argument);
  CHECK_THROWS_AS(make_weight_grid(3, 0), std::invalid_argument);
}

TEST_CASE("feasible grid size matches a lattice-point count") {
  for (int m = 1; m <= 4; ++m) {
    for (int h = 1; h <= 8; ++h) {
      // count nonnegative integer vectors of length m summing to h
      std::size_t count = 0;
      std::vector<int> k(static_cast<std::size_t>(m), 0);
      auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == m - 1) {
          ++count;
          return;
        }
        for (int v = 0; v <= remaining; ++v) self(self, pos + 1, remaining - v);
      };
      rec(rec, 0, h);
      WeightGrid g = make_weight_grid(m, h);
      CHECK(g.feasible_count() == count);
      CHECK(g.raw_count() == static_cast<std::size_t>(std::pow(h + 1, m - 1)));
    }
  }
}

TEST_CASE("grid entries lie on the simplex and are lexicographically ordered") {
  WeightGrid g = make_weight_grid(3, 10);
  auto feasible = g.feasible();
  for (std::size_t j = 0; j < feasible.size(); ++j) {
    double sum = 0;
    for (double c : feasible[j].components()) {
      CHECK(c >= 0.0);
      sum += c;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-9);
    if (j > 0) CHECK(feasible[j - 1] < feasible[j]);
  }
  std::set<std::vector<int>> distinct;
  for (const auto& e : g.entries) distinct.insert(e.numerators);
  CHECK(distinct.size() == g.raw_count());
}

TEST_CASE("weight vectors validate their components") {
  CHECK_THROWS_AS(WeightVector({0.5, 0.4}), std::invalid_argument);
  CHECK_THROWS_AS(WeightVector({1.5, -0.5}), std::invalid_argument);
  CHECK_THROWS_AS(WeightVector(std::vector<double>{}), std::invalid_argument);
  CHECK(WeightVector::one_hot(3, 1).to_string() == "0,1,0");
  CHECK(WeightVector({0.1, 0.2, 0.7}).to_string() == "0.1,0.2,0.7");
}

TEST_CASE("scalarize") {
  std::vector<double> f{-18.0, 30.0, 0.6931};
  CHECK(scalarize(f, WeightVector({0.5, 0.5, 0.0})) == doctest::Approx(6.0).epsilon(1e-15));
  for (std::size_t i = 0; i < 3; ++i) CHECK(scalarize(f, WeightVector::one_hot(3, i)) == f[i]);
  WeightVector uniform({1.0 / 3, 1.0 / 3, 1.0 / 3});
  CHECK(scalarize(f, uniform) == doctest::Approx((f[0] + f[1] + f[2]) / 3).epsilon(1e-12));
  CHECK_THROWS_AS(scalarize(std::vector<double>{1.0, 2.0}, uniform), std::invalid_argument);
}

TEST_CASE("value iteration on a chain") {
  TransitionGraph g = graph_from_edges(3, {{0, 1}, {1, 2}});
  std::vector<double> r{1.0, 2.0};
  UtilityTable t = value_iteration(g, r, sync(0.5));
  CHECK(t.utility(*g.find_edge(1, 2)) == 2.0);
  CHECK(t.utility(*g.find_edge(0, 1)) == 2.0);
  CHECK(t.trace.size() == 50);
}

TEST_CASE("value iteration on a two-cycle reaches the fixed point") {
  TransitionGraph g = graph_from_edges(2, {{0, 1}, {1, 0}});
  std::vector<double> r{1.0, 1.0};
  UtilityTable t = value_iteration(g, r, sync(0.5, 200));
  CHECK(t.utility(0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(t.utility(1) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("value iteration matches path enumeration on random DAGs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto dag = random_dag(seed);
    TransitionGraph g = graph_from_edges(dag.nodes, dag.edges);
    // payoffs in graph edge order
    std::vector<double> r(g.edge_count());
    for (std::size_t k = 0; k < dag.edges.size(); ++k) {
      r[*g.find_edge(static_cast<JobId>(dag.edges[k].first), static_cast<JobId>(dag.edges[k].second))] =
          dag.payoff[k];
    }
    for (double gamma : {0.5, 0.7, 1.0}) {
      for (UpdateMode mode : {UpdateMode::kSync, UpdateMode::kAsync}) {
        ValueIterationOptions o = sync(gamma);
        o.mode = mode;
        UtilityTable t = value_iteration(g, r, o);
        auto v = node_values(g, t.values);
        for (int s = 0; s < dag.nodes; ++s) {
          double expected = careerplan::testing::best_path_value(dag, s, gamma);
          CHECK(std::abs(v[static_cast<std::size_t>(s)] - expected) <= 1e-9);
          if (dag.nodes <= 9) {
            CHECK(std::abs(careerplan::testing::best_path_value_enumerated(dag, s, gamma) - expected) <= 1e-9);
          }
        }
      }
    }
  }
}

TEST_CASE("sync traces contract by gamma on a synthetic graph") {
  const TransitionGraph& g = small_synthetic();
  for (const auto& lambda : make_weight_grid(3, 5).feasible()) {
    UtilityTable t = value_iteration(g, scalarized_payoff(g, lambda), sync(0.7));
    for (std::size_t k = 0; k + 1 < t.trace.size(); ++k) {
      CHECK(t.trace[k + 1] <= 0.7 * t.trace[k] + 1e-9);
    }
    for (std::size_t k = 0; k < t.trace.size(); ++k) {
      CHECK(t.trace[k] <= std::pow(0.7, static_cast<double>(k)) * t.trace[0] * (1 + 1e-9));
    }
  }
}

TEST_CASE("sync iterates stay within the geometric envelope of the limit") {
  const TransitionGraph& g = small_synthetic();
  EdgePayoff r = scalarized_payoff(g, WeightVector({0.2, 0.3, 0.5}));
  UtilityTable limit = value_iteration(g, r, sync(0.7, 200));
  double bound = 0;
  for (double v : limit.values) bound = std::max(bound, std::abs(v));
  for (int k : {1, 5, 10, 20}) {
    UtilityTable t = value_iteration(g, r, sync(0.7, k));
    double gap = 0;
    for (std::size_t e = 0; e < r.size(); ++e) gap = std::max(gap, std::abs(t.values[e] - limit.values[e]));
    CHECK(gap <= std::pow(0.7, k) * bound + 1e-9);
  }
}

TEST_CASE("converged utilities do not depend on the initial table") {
  const TransitionGraph& g = small_synthetic();
  EdgePayoff r = scalarized_payoff(g, WeightVector({0.5, 0.0, 0.5}));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(-100, 100);
  std::vector<double> init(g.edge_count());
  for (double& v : init) v = unit(rng);
  UtilityTable a = value_iteration(g, r, sync(0.7, 300));
  UtilityTable b = value_iteration(g, r, sync(0.7, 300), init);
  for (std::size_t e = 0; e < r.size(); ++e) CHECK(std::abs(a.values[e] - b.values[e]) <= 1e-9);
  CHECK_THROWS_AS(value_iteration(g, r, sync(0.7), std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("utilities scale linearly with the payoff") {
  const TransitionGraph& g = small_synthetic();
  EdgePayoff r = scalarized_payoff(g, WeightVector({0.3, 0.3, 0.4}));
  EdgePayoff scaled = r;
  for (double& v : scaled) v *= 4.0;
  UtilityTable a = value_iteration(g, r, sync(0.7));
  UtilityTable b = value_iteration(g, scaled, sync(0.7));
  for (std::size_t e = 0; e < r.size(); ++e) CHECK(b.values[e] == 4.0 * a.values[e]);
  for (JobId s = 0; s < g.job_count(); ++s) CHECK(best_out_edge(g, a.values, s) == best_out_edge(g, b.values, s));
}

TEST_CASE("async mode converges to the sync fixed point") {
  const TransitionGraph& g = small_synthetic();
  EdgePayoff r = scalarized_payoff(g, WeightVector({0.1, 0.6, 0.3}));
  ValueIterationOptions async = sync(0.7, 300);
  async.mode = UpdateMode::kAsync;
  UtilityTable a = value_iteration(g, r, sync(0.7, 300));
  UtilityTable b = value_iteration(g, r, async);
  for (std::size_t e = 0; e < r.size(); ++e) CHECK(std::abs(a.values[e] - b.values[e]) <= 1e-8);
}

TEST_CASE("stop tolerance ends iteration early") {
  const TransitionGraph& g = small_synthetic();
  EdgePayoff r = criterion_payoff(g, Criterion::kLevel);
  ValueIterationOptions o = sync(0.7, 500);
  o.stop_tol = 1e-6;
  UtilityTable t = value_iteration(g, r, o);
  CHECK(t.trace.size() < 500);
  CHECK(t.trace.back() < 1e-6);
}

TEST_CASE("value iteration rejects bad input") {
  TransitionGraph g = graph_from_edges(2, {{0, 1}});
  CHECK_THROWS_AS(value_iteration(g, std::vector<double>{std::nan("")}, sync(0.5)), std::invalid_argument);
  CHECK_THROWS_AS(value_iteration(g, std::vector<double>{std::numeric_limits<double>::infinity()}, sync(0.5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(value_iteration(g, std::vector<double>{1.0, 2.0}, sync(0.5)), std::invalid_argument);
  CHECK_THROWS_AS(value_iteration(g, std::vector<double>{1.0}, sync(0.0)), std::invalid_argument);
  CHECK_THROWS_AS(value_iteration(g, std::vector<double>{1.0}, sync(1.5)), std::invalid_argument);
  CHECK_THROWS_AS(value_iteration(g, std::vector<double>{1.0}, sync(0.5, 0)), std::invalid_argument);
}

TEST_CASE("best_out_edge breaks ties toward the smallest target") {
  TransitionGraph g = graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  std::vector<double> u{1.0, 3.0, 3.0};
  CHECK(*best_out_edge(g, u, 0) == *g.find_edge(0, 2));
  CHECK_FALSE(best_out_edge(g, u, 3));
}

TEST_CASE("MUL/D learns one table per feasible weight") {
  const TransitionGraph& g = small_synthetic();
  WeightGrid grid = make_weight_grid(3, 10);
  auto learned = muld_learn(g, grid, sync(0.7));
  REQUIRE(learned.size() == 66);
  auto feasible = grid.feasible();
  for (std::size_t j = 0; j < learned.size(); ++j) {
    CHECK(learned[j].lambda == feasible[j]);
    CHECK(learned[j].table.values.size() == g.edge_count());
    CHECK(learned[j].table.lambda == std::vector<double>(feasible[j].components().begin(),
                                                         feasible[j].components().end()));
  }

  SUBCASE("one-hot tables reduce to single-criterion value iteration exactly") {
    for (std::size_t i = 0; i < kCriteria; ++i) {
      WeightVector hot = WeightVector::one_hot(3, i);
      auto it = std::find(feasible.begin(), feasible.end(), hot);
      REQUIRE(it != feasible.end());
      UtilityTable single = value_iteration(g, criterion_payoff(g, static_cast<Criterion>(i)), sync(0.7));
      CHECK(learned[static_cast<std::size_t>(it - feasible.begin())].table.values == single.values);
    }
  }

  SUBCASE("thread count does not change results") {
    auto serial = muld_learn(g, grid, sync(0.7), 1);
    for (std::size_t j = 0; j < learned.size(); ++j) {
      CHECK(serial[j].table.values == learned[j].table.values);
      CHECK(serial[j].table.trace == learned[j].table.trace);
    }
  }
}

TEST_CASE("MUL/D rejects a grid of the wrong dimension") {
  CHECK_THROWS_AS(muld_learn(small_synthetic(), make_weight_grid(2, 4), sync(0.7)), std::invalid_argument);
}
