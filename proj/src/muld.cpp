// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#include "careerplan/muld.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace careerplan {

std::vector<LearnedUtility> muld_learn(const TransitionGraph& graph, const WeightGrid& grid,
                                       const ValueIterationOptions& options, unsigned threads) {
  if (grid.M != static_cast<int>(kCriteria)) {
    throw std::invalid_argument("weight grid must have one component per payoff criterion");
  }
  std::vector<WeightVector> lambdas = grid.feasible();
  if (lambdas.empty()) throw std::invalid_argument("weight grid has no feasible entry");

  std::vector<LearnedUtility> out(lambdas.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t j = next++; j < lambdas.size(); j = next++) {
      try {
        EdgePayoff payoff = scalarized_payoff(graph, lambdas[j]);
        UtilityTable table = value_iteration(graph, payoff, options);
        table.lambda.assign(lambdas[j].components().begin(), lambdas[j].components().end());
        out[j] = LearnedUtility{lambdas[j], std::move(table)};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(lambdas.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace careerplan
