// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

// Criteria weight vectors on the probability simplex and the lattice of
// candidate vectors that decomposition-based learning enumerates.

#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace careerplan {

class WeightVector {
 public:
  WeightVector() = default;
  // Throws std::invalid_argument unless every component is >= 0 and the
  // components sum to 1 within `tolerance`.
  explicit WeightVector(std::vector<double> components, double tolerance = 1e-9);

  static WeightVector one_hot(std::size_t size, std::size_t index);

  std::span<const double> components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  double operator[](std::size_t i) const { return components_[i]; }

  // Comma-separated, shortest round-trip form of each component.
  std::string to_string() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  // Lexicographic.
  friend auto operator<=>(const WeightVector& a, const WeightVector& b) {
    return a.components_ <=> b.components_;
  }

 private:
  std::vector<double> components_;
};

struct GridEntry {
  std::vector<int> numerators;  // lambda_i * H; the last may be negative
  std::vector<double> lambda;
  bool feasible = false;  // last component >= 0
};

// All vectors whose first M-1 components lie in {0/H, ..., H/H}, the last
// completing the sum to one. There are (H+1)^(M-1) raw entries, of which
// C(H+M-1, M-1) are on the simplex.
struct WeightGrid {
  int M = 0;
  int H = 0;
  std::vector<GridEntry> entries;  // lexicographic in the free components

  std::size_t raw_count() const { return entries.size(); }
  std::size_t feasible_count() const;
  std::vector<WeightVector> feasible() const;
};

WeightGrid make_weight_grid(int M, int H);

// Weighted-sum scalarization. Throws std::invalid_argument on size mismatch.
double scalarize(std::span<const double> payoff, const WeightVector& lambda);

}  // namespace careerplan
