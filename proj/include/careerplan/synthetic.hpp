// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "careerplan/dates.hpp"
#include "careerplan/trajectory.hpp"

namespace careerplan {

struct GeneratorConfig {
  int jobs = 200;           // J
  int persons = 5000;       // P
  double mean_len = 4.0;    // mean stints per trajectory, >= 2
  double level_min = 0.0;   // latent level range
  double level_max = 1.0;
  DateStamp date_min{1980, 1};
  DateStamp date_max{2016, 11};
};

// Latent per-job parameters that drive the transition model. Exposed so
// tests can check that learned statistics recover them.
struct SyntheticJob {
  JobKey key;
  double latent_level = 0.0;
  double attractiveness = 1.0;  // heavy-tailed popularity weight
  double mean_tenure = 24.0;    // months
};

struct SyntheticCorpus {
  std::vector<SyntheticJob> jobs;
  std::vector<CareerTrajectory> trajectories;
};

// Deterministic for a fixed (config, seed). Careers start near the bottom of
// the latent level range and mostly climb: each hop prefers destinations
// slightly above the current level, weighted by attractiveness and industry
// affinity, with noise. Careers end early on reaching a job with no
// admissible successor. Throws std::invalid_argument for jobs < 2,
// persons < 1, mean_len < 2 or an empty date range.
SyntheticCorpus generate_synthetic_corpus(const GeneratorConfig& config, std::uint64_t seed);

std::vector<CareerTrajectory> generate_synthetic(const GeneratorConfig& config,
                                                 std::uint64_t seed);

}  // namespace careerplan
