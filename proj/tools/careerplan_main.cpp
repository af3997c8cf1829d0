// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "careerplan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return careerplan::run_cli(args, std::cout, std::cerr);
}
