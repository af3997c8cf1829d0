// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#include "careerplan/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <stdexcept>
#include <string_view>

namespace careerplan {

namespace {

constexpr std::array<std::string_view, 10> kIndustries = {
    "banking",       "it services",  "telecommunications", "semiconductors",
    "healthcare",    "education",    "logistics",          "retail",
    "manufacturing", "government"};

// Ordered from junior to senior; indexed by normalized latent level.
constexpr std::array<std::string_view, 11> kTiers = {
    "intern",  "assistant",      "associate", "analyst",       "engineer",
    "senior engineer", "manager", "senior manager", "director", "vice president",
    "managing director"};

constexpr std::array<std::string_view, 12> kSpecialties = {
    "software",   "finance",   "operations", "sales",   "research",  "marketing",
    "risk",       "process",   "network",    "product", "customer",  "data"};

// Preferred upward step and spread of the hop kernel, in normalized level units.
constexpr double kStepMean = 0.12;
constexpr double kStepSpread = 0.10;
constexpr double kMaxDemotion = 0.10;
constexpr double kIndustryAffinity = 4.0;
// Popularity is Pareto distributed; a shape near 1 gives a heavy tail.
constexpr double kParetoShape = 1.1;

struct Normalized {
  double lo, span;
  double operator()(double level) const { return span > 0 ? (level - lo) / span : 0.0; }
};

std::vector<SyntheticJob> make_jobs(const GeneratorConfig& config, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> industry_pick(0, kIndustries.size() - 1);
  std::uniform_int_distribution<int> size_pick(0, static_cast<int>(kCompanySizeLabels.size()) - 1);
  std::uniform_int_distribution<std::size_t> specialty_pick(0, kSpecialties.size() - 1);
  Normalized norm{config.level_min, config.level_max - config.level_min};

  std::vector<SyntheticJob> jobs;
  std::set<JobKey> seen;
  jobs.reserve(static_cast<std::size_t>(config.jobs));
  for (int j = 0; j < config.jobs; ++j) {
    SyntheticJob job;
    job.latent_level = config.level_min + (config.level_max - config.level_min) * unit(rng);
    auto tier = std::min(kTiers.size() - 1,
                         static_cast<std::size_t>(norm(job.latent_level) * kTiers.size()));
    std::string industry(kIndustries[industry_pick(rng)]);
    auto size = static_cast<CompanySize>(size_pick(rng));
    std::string title = std::string(kTiers[tier]) + " " +
                        std::string(kSpecialties[specialty_pick(rng)]);
    job.key = JobKey::make(industry, size, title);
    if (seen.contains(job.key)) {
      job.key = JobKey::make(industry, size, title + " " + std::to_string(j));
    }
    seen.insert(job.key);
    job.attractiveness = std::pow(1.0 - unit(rng), -1.0 / kParetoShape);
    job.mean_tenure = 12.0 + 36.0 * unit(rng);
    jobs.push_back(std::move(job));
  }
  return jobs;
}

}  // namespace

SyntheticCorpus generate_synthetic_corpus(const GeneratorConfig& config, std::uint64_t seed) {
  if (config.jobs < 2) throw std::invalid_argument("generator needs at least 2 jobs");
  if (config.persons < 1) throw std::invalid_argument("generator needs at least 1 person");
  if (!(config.mean_len >= 2.0)) throw std::invalid_argument("mean_len must be >= 2");
  if (config.date_max <= config.date_min) throw std::invalid_argument("empty date range");
  if (config.level_max < config.level_min) throw std::invalid_argument("empty level range");

  std::mt19937_64 rng(seed);
  SyntheticCorpus corpus;
  corpus.jobs = make_jobs(config, rng);
  const auto& jobs = corpus.jobs;
  const std::size_t job_count = jobs.size();
  Normalized norm{config.level_min, config.level_max - config.level_min};

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::poisson_distribution<int> extra_len(std::max(config.mean_len - 2.0, 1e-12));

  std::vector<double> start_weights(job_count);
  for (std::size_t j = 0; j < job_count; ++j) {
    start_weights[j] = jobs[j].attractiveness * std::exp(-4.0 * norm(jobs[j].latent_level));
  }
  std::discrete_distribution<std::size_t> start_pick(start_weights.begin(), start_weights.end());

  const int date_lo = config.date_min.ordinal();
  const int date_hi = config.date_max.ordinal();
  std::vector<double> weights(job_count);

  corpus.trajectories.reserve(static_cast<std::size_t>(config.persons));
  for (int p = 0; p < config.persons; ++p) {
    const int length = 2 + (config.mean_len > 2.0 ? extra_len(rng) : 0);
    CareerTrajectory traj;
    char id[32];
    std::snprintf(id, sizeof(id), "p%06d", p);
    traj.person_id = id;

    const int latest_graduation = std::max(date_lo, date_hi - length * 30);
    std::uniform_int_distribution<int> graduation_pick(date_lo, latest_graduation);
    traj.graduation = DateStamp::from_ordinal(graduation_pick(rng));
    int cursor = traj.graduation->ordinal() + static_cast<int>(unit(rng) * 7.0);

    std::vector<bool> visited(job_count, false);
    std::size_t current = start_pick(rng);
    while (true) {
      visited[current] = true;
      const auto& job = jobs[current];
      int duration = std::max(1, static_cast<int>(std::lround(job.mean_tenure * (0.5 + unit(rng)))));
      WorkStint stint;
      stint.job = job.key;
      stint.start = DateStamp::from_ordinal(std::min(cursor, date_hi));
      stint.end = DateStamp::from_ordinal(std::min(cursor + duration, date_hi));
      traj.stints.push_back(std::move(stint));
      cursor += duration + static_cast<int>(unit(rng) * 3.0);

      if (static_cast<int>(traj.stints.size()) >= length) break;
      const double level = norm(job.latent_level);
      const bool forced = traj.stints.size() < 2;
      // senior jobs tend to end careers
      if (!forced && unit(rng) < std::pow(level, 4.0)) break;

      double total = 0.0;
      for (std::size_t d = 0; d < job_count; ++d) {
        weights[d] = 0.0;
        if (visited[d]) continue;
        const double step = norm(jobs[d].latent_level) - level;
        if (step < -kMaxDemotion) continue;
        const double z = (step - kStepMean) / kStepSpread;
        double w = jobs[d].attractiveness * std::exp(-0.5 * z * z);
        if (jobs[d].key.industry == job.key.industry) w *= kIndustryAffinity;
        weights[d] = w;
        total += w;
      }
      if (!(total > 1e-300)) {
        if (!forced) break;
        for (std::size_t d = 0; d < job_count; ++d) weights[d] = visited[d] ? 0.0 : 1.0;
      }
      std::discrete_distribution<std::size_t> next_pick(weights.begin(), weights.end());
      current = next_pick(rng);
    }
    corpus.trajectories.push_back(std::move(traj));
  }
  return corpus;
}

std::vector<CareerTrajectory> generate_synthetic(const GeneratorConfig& config,
                                                 std::uint64_t seed) {
  return generate_synthetic_corpus(config, seed).trajectories;
}

}  // namespace careerplan
