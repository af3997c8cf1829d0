// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace careerplan {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,          // unknown flag or subcommand, malformed argument
  kExitMissingInput = 3,   // a required artifact does not exist
  kExitConfig = 4,         // configuration value out of range
  kExitData = 5,           // malformed input data or unknown job
};

// Entry point of the `careerplan` tool. Subcommands: generate, ingest, build,
// learn, select, plan, benchmark, plot-data, stats, serve.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace careerplan
