// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#include "careerplan/evaluation.hpp"

#include <cmath>
#include <stdexcept>

namespace careerplan {

PayoffVector path_improvement(const PlannedPath& optimized, const PlannedPath& actual) {
  if (optimized.origin != actual.origin) {
    throw std::invalid_argument("optimized and actual paths start from different jobs");
  }
  PayoffVector diff{};
  for (std::size_t i = 0; i < kCriteria; ++i) diff[i] = optimized.totals[i] - actual.totals[i];
  return diff;
}

ImprovementMeans improvement_means(std::span<const PlannedPath> optimized,
                                   std::span<const PlannedPath> actual) {
  if (optimized.size() != actual.size()) {
    throw std::invalid_argument("optimized and actual path sets differ in size");
  }
  if (optimized.empty()) throw std::invalid_argument("no paths to compare");
  ImprovementMeans means;
  means.mu.assign(kCriteria, 0.0);
  means.count = optimized.size();
  for (std::size_t k = 0; k < optimized.size(); ++k) {
    PayoffVector diff = path_improvement(optimized[k], actual[k]);
    for (std::size_t i = 0; i < kCriteria; ++i) means.mu[i] += diff[i];
  }
  for (double& m : means.mu) m /= static_cast<double>(means.count);
  return means;
}

double pim(std::span<const double> mu) {
  double sign = 1.0;
  double product = 1.0;
  for (double m : mu) {
    if (!(m > 0.0)) sign = -1.0;
    product *= std::abs(m);
  }
  return sign * product;
}

double path_pim(const PlannedPath& optimized, const PlannedPath& actual) {
  PayoffVector diff = path_improvement(optimized, actual);
  return pim(diff);
}

WeightVector select_lambda_star(std::span<const std::pair<WeightVector, double>> pims) {
  if (pims.empty()) throw std::invalid_argument("no PIM values to select from");
  const std::pair<WeightVector, double>* best = &pims.front();
  for (const auto& candidate : pims) {
    if (candidate.second > best->second ||
        (candidate.second == best->second && candidate.first < best->first)) {
      best = &candidate;
    }
  }
  return best->first;
}

}  // namespace careerplan
