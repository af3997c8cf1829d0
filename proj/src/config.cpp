// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#include "careerplan/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>

namespace careerplan {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_value(std::string_view key, std::string_view text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("invalid value '" + std::string(text) + "' for " + std::string(key));
  }
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError("invalid boolean '" + std::string(text) + "' for " + std::string(key));
}

DateStamp parse_date(std::string_view key, std::string_view text) {
  try {
    return DateStamp::parse(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(key) + ": " + e.what());
  }
}

}  // namespace

std::string to_string(UpdateMode mode) { return mode == UpdateMode::kSync ? "sync" : "async"; }

UpdateMode parse_update_mode(std::string_view text) {
  if (text == "sync") return UpdateMode::kSync;
  if (text == "async") return UpdateMode::kAsync;
  throw ConfigError("mode must be sync or async, got '" + std::string(text) + "'");
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "gamma",   "T_max",    "H",        "alpha",    "max_len",  "min_support",
      "require_graduation", "seed", "mode", "stop_tol", "threads", "jobs",
      "persons", "mean_len", "date_min", "date_max", "workdir",  "static_dir"};
  return keys;
}

void apply_config_value(PipelineConfig& c, std::string_view key, std::string_view raw) {
  std::string_view v = trim(raw);
  if (key == "gamma") c.gamma = parse_value<double>(key, v);
  else if (key == "T_max") c.T_max = parse_value<int>(key, v);
  else if (key == "H") c.H = parse_value<int>(key, v);
  else if (key == "alpha") c.alpha = parse_value<double>(key, v);
  else if (key == "max_len") c.max_len = parse_value<int>(key, v);
  else if (key == "min_support") c.min_support = parse_value<int>(key, v);
  else if (key == "require_graduation") c.require_graduation = parse_bool(key, v);
  else if (key == "seed") c.seed = parse_value<std::uint64_t>(key, v);
  else if (key == "mode") c.mode = parse_update_mode(v);
  else if (key == "stop_tol") c.stop_tol = parse_value<double>(key, v);
  else if (key == "threads") c.threads = parse_value<unsigned>(key, v);
  else if (key == "jobs") c.generator.jobs = parse_value<int>(key, v);
  else if (key == "persons") c.generator.persons = parse_value<int>(key, v);
  else if (key == "mean_len") c.generator.mean_len = parse_value<double>(key, v);
  else if (key == "date_min") c.generator.date_min = parse_date(key, v);
  else if (key == "date_max") c.generator.date_max = parse_date(key, v);
  else if (key == "workdir") c.workdir = std::string(v);
  else if (key == "static_dir") c.static_dir = std::string(v);
  else throw ConfigError("unknown config key '" + std::string(key) + "'");
}

std::map<std::string, std::string> parse_config_text(std::istream& in) {
  std::map<std::string, std::string> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = line;
    if (auto hash = text.find_first_of("#;"); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']') {
        throw ConfigError("line " + std::to_string(line_no) + ": malformed section header");
      }
      continue;
    }
    auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key(trim(text.substr(0, eq)));
    if (!values.emplace(key, std::string(trim(text.substr(eq + 1)))).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
  }
  return values;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  PipelineConfig config;
  for (const auto& [key, value] : parse_config_text(in)) apply_config_value(config, key, value);
  return config;
}

void PipelineConfig::validate() const {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw ConfigError("gamma must be in (0,1]");
  if (T_max < 1) throw ConfigError("T_max must be positive");
  if (H < 1) throw ConfigError("H must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must be in (0,1)");
  if (max_len < 1) throw ConfigError("max_len must be positive");
  if (min_support < 1) throw ConfigError("min_support must be positive");
  if (stop_tol < 0.0) throw ConfigError("stop_tol must be >= 0");
  if (generator.jobs < 2) throw ConfigError("jobs must be >= 2");
  if (generator.persons < 1) throw ConfigError("persons must be >= 1");
  if (!(generator.mean_len >= 2.0)) throw ConfigError("mean_len must be >= 2");
  if (generator.date_max <= generator.date_min) throw ConfigError("date range is empty");
}

ValueIterationOptions PipelineConfig::value_iteration_options() const {
  ValueIterationOptions options;
  options.gamma = gamma;
  options.max_iter = T_max;
  options.mode = mode;
  if (stop_tol > 0.0) options.stop_tol = stop_tol;
  return options;
}

}  // namespace careerplan
