// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#include "careerplan/trajectory.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace careerplan {

using nlohmann::json;

std::string_view to_string(CompanySize size) {
  return kCompanySizeLabels.at(static_cast<std::size_t>(size));
}

CompanySize parse_company_size(std::string_view label) {
  std::string_view bare = label;
  if (bare.size() >= 2 && bare.front() == '[' && bare.back() == ']') {
    bare = bare.substr(1, bare.size() - 2);
  }
  for (std::size_t i = 0; i < kCompanySizeLabels.size(); ++i) {
    std::string_view known = kCompanySizeLabels[i];
    if (known.substr(1, known.size() - 2) == bare) {
      return static_cast<CompanySize>(i);
    }
  }
  throw std::invalid_argument("unknown company size category '" +
                              std::string(label) + "'");
}

std::string normalize_title(std::string_view title) {
  std::string out;
  out.reserve(title.size());
  bool pending_space = false;
  for (char raw : title) {
    auto c = static_cast<unsigned char>(raw);
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

JobKey JobKey::make(std::string_view industry, CompanySize size,
                    std::string_view title) {
  JobKey key;
  key.industry = std::string(industry);
  // trim the industry code but keep its case
  auto first = key.industry.find_first_not_of(" \t\r\n");
  auto last = key.industry.find_last_not_of(" \t\r\n");
  key.industry = first == std::string::npos
                     ? std::string()
                     : key.industry.substr(first, last - first + 1);
  key.company_size = size;
  key.title = normalize_title(title);
  if (key.industry.empty()) throw std::invalid_argument("empty industry");
  if (key.title.empty()) throw std::invalid_argument("empty title");
  return key;
}

std::string JobKey::to_string() const {
  return "(" + industry + ", " + std::string(careerplan::to_string(company_size)) +
         ", " + title + ")";
}

namespace {

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const json& obj, const char* key) {
  const json& value = require(obj, key);
  if (!value.is_string()) {
    throw std::invalid_argument(std::string("field '") + key + "' must be a string");
  }
  return value.get<std::string>();
}

std::optional<DateStamp> parse_graduation(const json& record) {
  auto it = record.find("graduation");
  if (it == record.end() || it->is_null()) return std::nullopt;
  if (it->is_string()) return DateStamp::parse(it->get<std::string>());
  if (it->is_array()) {
    std::optional<DateStamp> latest;
    for (const auto& entry : *it) {
      if (!entry.is_string()) throw std::invalid_argument("graduation entries must be strings");
      DateStamp date = DateStamp::parse(entry.get<std::string>());
      if (!latest || *latest < date) latest = date;
    }
    return latest;
  }
  throw std::invalid_argument("field 'graduation' must be a date, null or array");
}

// Returns the number of overlaps repaired.
std::size_t parse_record(const json& record, CareerTrajectory& out) {
  if (!record.is_object()) throw std::invalid_argument("record is not a JSON object");
  out.person_id = require_string(record, "person_id");
  if (out.person_id.empty()) throw std::invalid_argument("empty person_id");
  out.graduation = parse_graduation(record);

  const json& stints = require(record, "stints");
  if (!stints.is_array()) throw std::invalid_argument("field 'stints' must be an array");
  out.stints.clear();
  for (const auto& s : stints) {
    if (!s.is_object()) throw std::invalid_argument("stint is not a JSON object");
    WorkStint stint;
    stint.job = JobKey::make(require_string(s, "industry"),
                             parse_company_size(require_string(s, "company_size")),
                             require_string(s, "title"));
    stint.start = DateStamp::parse(require_string(s, "start"));
    stint.end = DateStamp::parse(require_string(s, "end"));
    if (stint.end < stint.start) {
      throw std::invalid_argument("stint ends (" + stint.end.to_string() +
                                  ") before it starts (" + stint.start.to_string() + ")");
    }
    out.stints.push_back(std::move(stint));
  }
  std::stable_sort(out.stints.begin(), out.stints.end(),
                   [](const WorkStint& a, const WorkStint& b) { return a.start < b.start; });

  std::size_t repaired = 0;
  for (std::size_t k = 0; k + 1 < out.stints.size(); ++k) {
    if (out.stints[k].end > out.stints[k + 1].start) {
      out.stints[k].end = out.stints[k + 1].start;
      ++repaired;
    }
  }
  return repaired;
}

}  // namespace

IngestResult ingest(std::istream& in, IngestPolicy policy) {
  IngestResult result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    CareerTrajectory traj;
    std::size_t repaired = 0;
    try {
      json record = json::parse(line);
      repaired = parse_record(record, traj);
    } catch (const std::exception& e) {
      if (policy == IngestPolicy::kStrict) throw IngestError(line_no, e.what());
      result.warnings.push_back("line " + std::to_string(line_no) + ": " + e.what());
      ++result.dropped;
      continue;
    }
    if (repaired > 0) {
      result.warnings.push_back("line " + std::to_string(line_no) + ": truncated " +
                                std::to_string(repaired) + " overlapping stint(s)");
      result.repaired += repaired;
    }
    result.trajectories.push_back(std::move(traj));
  }
  return result;
}

IngestResult ingest_file(const std::string& path, IngestPolicy policy) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trajectory file '" + path + "'");
  return ingest(in, policy);
}

void serialize(std::ostream& out, std::span<const CareerTrajectory> trajs) {
  for (const auto& traj : trajs) {
    json record = json::object();
    record["person_id"] = traj.person_id;
    record["graduation"] = traj.graduation ? json(traj.graduation->to_string()) : json(nullptr);
    json stints = json::array();
    for (const auto& s : traj.stints) {
      json stint = json::object();
      stint["industry"] = s.job.industry;
      stint["company_size"] = std::string(to_string(s.job.company_size));
      stint["title"] = s.job.title;
      stint["start"] = s.start.to_string();
      stint["end"] = s.end.to_string();
      stints.push_back(std::move(stint));
    }
    record["stints"] = std::move(stints);
    out << record.dump() << '\n';
  }
}

void serialize_file(const std::string& path, std::span<const CareerTrajectory> trajs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write trajectory file '" + path + "'");
  serialize(out, trajs);
}

std::string serialize_to_string(std::span<const CareerTrajectory> trajs) {
  std::ostringstream out;
  serialize(out, trajs);
  return out.str();
}

namespace {

// One support/length filtering pass; returns true when anything was removed.
bool support_pass(std::vector<CareerTrajectory>& trajs, int min_support) {
  std::map<JobKey, std::set<std::string>> holders;
  for (const auto& traj : trajs) {
    for (const auto& s : traj.stints) holders[s.job].insert(traj.person_id);
  }
  bool changed = false;
  std::vector<CareerTrajectory> kept;
  kept.reserve(trajs.size());
  for (auto& traj : trajs) {
    auto before = traj.stints.size();
    std::erase_if(traj.stints, [&](const WorkStint& s) {
      return holders[s.job].size() < static_cast<std::size_t>(min_support);
    });
    changed |= traj.stints.size() != before;
    if (traj.stints.size() < 2) {
      changed = true;
      continue;
    }
    kept.push_back(std::move(traj));
  }
  trajs = std::move(kept);
  return changed;
}

}  // namespace

std::vector<CareerTrajectory> clean(std::span<const CareerTrajectory> trajs,
                                    const CleanOptions& options) {
  if (options.min_support < 1) throw std::invalid_argument("min_support must be >= 1");
  std::vector<CareerTrajectory> out;
  out.reserve(trajs.size());
  for (const auto& traj : trajs) {
    if (options.require_graduation && !traj.graduation) continue;
    CareerTrajectory copy = traj;
    if (copy.graduation) {
      std::erase_if(copy.stints,
                    [&](const WorkStint& s) { return s.start < *copy.graduation; });
    }
    out.push_back(std::move(copy));
  }
  while (support_pass(out, options.min_support)) {
  }
  return out;
}

CareerTrajectory merge_repeated_jobs(const CareerTrajectory& traj) {
  CareerTrajectory out;
  out.person_id = traj.person_id;
  out.graduation = traj.graduation;
  for (const auto& s : traj.stints) {
    if (!out.stints.empty() && out.stints.back().job == s.job) {
      out.stints.back().end = std::max(out.stints.back().end, s.end);
      continue;
    }
    out.stints.push_back(s);
  }
  return out;
}

}  // namespace careerplan
