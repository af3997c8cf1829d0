// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#include "careerplan/weights.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace careerplan {

WeightVector::WeightVector(std::vector<double> components, double tolerance)
    : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("empty weight vector");
  double sum = 0.0;
  for (double c : components_) {
    if (!std::isfinite(c) || c < 0.0) {
      throw std::invalid_argument("weight components must be finite and nonnegative");
    }
    sum += c;
  }
  if (std::abs(sum - 1.0) > tolerance) {
    throw std::invalid_argument("weight components must sum to 1");
  }
}

WeightVector WeightVector::one_hot(std::size_t size, std::size_t index) {
  if (index >= size) throw std::invalid_argument("one-hot index out of range");
  std::vector<double> c(size, 0.0);
  c[index] = 1.0;
  return WeightVector(std::move(c));
}

std::string WeightVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out.push_back(',');
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), components_[i]);
    out.append(buf, ptr);
  }
  return out;
}

std::size_t WeightGrid::feasible_count() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.feasible;
  return n;
}

std::vector<WeightVector> WeightGrid::feasible() const {
  std::vector<WeightVector> out;
  for (const auto& e : entries) {
    if (e.feasible) out.emplace_back(e.lambda);
  }
  return out;
}

WeightGrid make_weight_grid(int M, int H) {
  if (M < 1) throw std::invalid_argument("criteria count must be >= 1");
  if (H < 1) throw std::invalid_argument("grid resolution H must be >= 1");
  WeightGrid grid;
  grid.M = M;
  grid.H = H;
  // odometer over the M-1 free numerators, first component most significant
  std::vector<int> free(static_cast<std::size_t>(M - 1), 0);
  while (true) {
    GridEntry entry;
    int used = 0;
    for (int k : free) {
      entry.numerators.push_back(k);
      used += k;
    }
    entry.numerators.push_back(H - used);
    entry.feasible = H - used >= 0;
    for (int k : entry.numerators) entry.lambda.push_back(static_cast<double>(k) / H);
    grid.entries.push_back(std::move(entry));

    int pos = M - 2;
    while (pos >= 0 && free[static_cast<std::size_t>(pos)] == H) {
      free[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++free[static_cast<std::size_t>(pos)];
  }
  return grid;
}

double scalarize(std::span<const double> payoff, const WeightVector& lambda) {
  if (payoff.size() != lambda.size()) {
    throw std::invalid_argument("payoff has " + std::to_string(payoff.size()) +
                                " criteria but the weight vector has " +
                                std::to_string(lambda.size()));
  }
  double r = 0.0;
  for (std::size_t i = 0; i < payoff.size(); ++i) r += lambda[i] * payoff[i];
  return r;
}

}  // namespace careerplan
