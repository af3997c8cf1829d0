// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

// Pipeline configuration. Config files hold flat `key = value` lines grouped
// under optional `[section]` headers; sections are only for readability and
// every key is unique across the file. `#` and `;` start comments.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "careerplan/synthetic.hpp"
#include "careerplan/value_iteration.hpp"

namespace careerplan {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PipelineConfig {
  double gamma = 0.7;
  int T_max = 50;
  int H = 10;
  double alpha = 0.15;
  int max_len = 10;
  int min_support = 2;
  bool require_graduation = true;
  std::uint64_t seed = 42;
  UpdateMode mode = UpdateMode::kSync;
  double stop_tol = 0.0;  // 0 runs all T_max sweeps
  unsigned threads = 0;
  GeneratorConfig generator;
  std::string workdir = ".";
  std::string static_dir;  // served at / by `serve` when set

  // Throws ConfigError when any value is out of range.
  void validate() const;

  ValueIterationOptions value_iteration_options() const;
};

// Every key accepted in config files and as a --key flag.
const std::vector<std::string>& config_keys();

std::map<std::string, std::string> parse_config_text(std::istream& in);

// Throws ConfigError for unknown keys or unparseable values.
void apply_config_value(PipelineConfig& config, std::string_view key, std::string_view value);

PipelineConfig load_config(const std::filesystem::path& path);

std::string to_string(UpdateMode mode);
UpdateMode parse_update_mode(std::string_view text);

}  // namespace careerplan
