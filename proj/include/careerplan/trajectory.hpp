// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

// Career trajectory records: the job identity tuple, work stints, JSONL
// ingest/serialization and the corpus cleaning pass.

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "careerplan/dates.hpp"

namespace careerplan {

// Ordinal company-size buckets.
enum class CompanySize : int {
  k2to10 = 0,
  k11to50,
  k51to200,
  k201to1000,
  k1001to5000,
  k5001to10000,
  k10001plus,
};

inline constexpr std::array<std::string_view, 7> kCompanySizeLabels = {
    "[2-10]",      "[11-50]",      "[51-200]", "[201-1000]",
    "[1001-5000]", "[5001-10000]", "[10001+]"};

std::string_view to_string(CompanySize size);
// Accepts the bracketed label with or without brackets, e.g. "[11-50]" or "11-50".
CompanySize parse_company_size(std::string_view label);

// Lowercase, trim and collapse internal whitespace runs to one space.
std::string normalize_title(std::string_view title);

// A job is a title within a company-size bucket of an industry, not a
// specific employer.
struct JobKey {
  std::string industry;
  CompanySize company_size = CompanySize::k2to10;
  std::string title;

  // Builds a key with a normalized title; throws std::invalid_argument on
  // empty fields.
  static JobKey make(std::string_view industry, CompanySize size,
                     std::string_view title);

  std::string to_string() const;

  friend bool operator==(const JobKey&, const JobKey&) = default;
  friend std::strong_ordering operator<=>(const JobKey&, const JobKey&) = default;
};

struct WorkStint {
  JobKey job;
  DateStamp start;
  DateStamp end;

  int duration_months() const { return months_between(start, end); }
  friend bool operator==(const WorkStint&, const WorkStint&) = default;
};

struct CareerTrajectory {
  std::string person_id;
  std::optional<DateStamp> graduation;  // last graduation date
  std::vector<WorkStint> stints;        // sorted by start, non-overlapping

  friend bool operator==(const CareerTrajectory&, const CareerTrajectory&) = default;
};

// ---------------------------------------------------------------------------
// Ingest

enum class IngestPolicy { kStrict, kSkip };

// Raised for malformed records under the strict policy.
class IngestError : public std::runtime_error {
 public:
  IngestError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct IngestResult {
  std::vector<CareerTrajectory> trajectories;
  std::vector<std::string> warnings;  // one per dropped or repaired record
  std::size_t dropped = 0;
  std::size_t repaired = 0;
};

// Parses trajectory JSONL. Blank lines are ignored. Malformed JSON and schema
// violations (missing field, unknown size category, end < start) throw
// IngestError under kStrict and drop the record with a warning under kSkip.
// Stints are sorted by start; an earlier stint overlapping the next one is
// truncated to the next one's start. "graduation" may be a date string, null,
// or an array of dates (the latest is kept).
IngestResult ingest(std::istream& in, IngestPolicy policy = IngestPolicy::kStrict);
IngestResult ingest_file(const std::string& path,
                         IngestPolicy policy = IngestPolicy::kStrict);

// One compact JSON object per line, keys in fixed order.
void serialize(std::ostream& out, std::span<const CareerTrajectory> trajs);
void serialize_file(const std::string& path, std::span<const CareerTrajectory> trajs);
std::string serialize_to_string(std::span<const CareerTrajectory> trajs);

// ---------------------------------------------------------------------------
// Cleaning

struct CleanOptions {
  int min_support = 2;  // distinct persons per job; 100 at full scale
  bool require_graduation = true;
};

// Drops trajectories without graduation (when required), stints that start
// before graduation, stints of jobs held by fewer than min_support distinct
// persons, and trajectories left with fewer than two stints. The support and
// length filters are applied until nothing changes, so clean is idempotent.
std::vector<CareerTrajectory> clean(std::span<const CareerTrajectory> trajs,
                                    const CleanOptions& options);

// Collapses consecutive stints of the same job into one stint spanning both.
CareerTrajectory merge_repeated_jobs(const CareerTrajectory& traj);

}  // namespace careerplan
