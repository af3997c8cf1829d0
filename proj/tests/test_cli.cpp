// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <iterator>

#include "careerplan/artifacts.hpp"
#include "careerplan/config.hpp"
#include "pipeline_fixture.hpp"

using namespace careerplan;
using careerplan::testing::run;
using careerplan::testing::scratch_dir;
using nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const std::vector<std::string> kSmall{"--jobs", "50", "--persons", "600"};

std::vector<std::string> with(std::vector<std::string> args, const std::filesystem::path& dir,
                              const std::vector<std::string>& extra = kSmall) {
  args.insert(args.end(), extra.begin(), extra.end());
  args.push_back("--workdir");
  args.push_back(dir.string());
  return args;
}

}  // namespace

TEST_CASE("generate is deterministic for a seed") {
  auto dir = scratch_dir("cli_generate");
  REQUIRE(run(with({"generate", "--seed", "42", "--out", (dir / "a.jsonl").string()}, dir)).code == 0);
  REQUIRE(run(with({"generate", "--seed", "42", "--out", (dir / "b.jsonl").string()}, dir)).code == 0);
  REQUIRE(run(with({"generate", "--seed", "43", "--out", (dir / "c.jsonl").string()}, dir)).code == 0);
  CHECK(slurp(dir / "a.jsonl") == slurp(dir / "b.jsonl"));
  CHECK(slurp(dir / "a.jsonl") != slurp(dir / "c.jsonl"));
  CHECK_FALSE(slurp(dir / "a.jsonl").empty());
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"plan"}).code == kExitUsage);
  CHECK(run({"generate", "--no-such-flag"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("missing artifacts exit with code 3") {
  auto dir = scratch_dir("cli_missing");
  auto r = run(with({"build"}, dir));
  CHECK(r.code == kExitMissingInput);
  CHECK(r.err.find("corpus.clean.jsonl") != std::string::npos);
  CHECK(run(with({"learn"}, dir)).code == kExitMissingInput);
  CHECK(run(with({"plan", "--origin", "0"}, dir)).code == kExitMissingInput);
}

TEST_CASE("out-of-range configuration exits with code 4") {
  auto dir = scratch_dir("cli_config");
  CHECK(run(with({"generate", "--gamma", "1.5"}, dir)).code == kExitConfig);
  CHECK(run(with({"generate", "--H", "0"}, dir)).code == kExitConfig);
  CHECK(run(with({"generate", "--mode", "sideways"}, dir)).code == kExitConfig);
  CHECK(run(with({"generate", "--T_max", "many"}, dir)).code == kExitConfig);
  std::ofstream(dir / "bad.conf") << "gamma = 0.7\ngamma = 0.5\n";
  CHECK(run(with({"generate", "--config", (dir / "bad.conf").string()}, dir)).code == kExitConfig);
}

TEST_CASE("malformed data exits with code 5") {
  auto dir = scratch_dir("cli_data");
  std::ofstream(dir / "corpus.jsonl") << "{broken\n";
  auto strict = run(with({"ingest"}, dir));
  CHECK(strict.code == kExitData);
  CHECK(strict.err.find("line 1") != std::string::npos);
  CHECK(run(with({"ingest", "--policy", "skip"}, dir)).code == kExitOk);
}

TEST_CASE("config files set values and flags override them") {
  auto dir = scratch_dir("cli_conffile");
  std::ofstream(dir / "run.conf") << "# pipeline\n[generator]\njobs = 40\npersons = 300\n\n[learning]\nH = 4\n";
  PipelineConfig c = load_config(dir / "run.conf");
  CHECK(c.generator.jobs == 40);
  CHECK(c.H == 4);
  auto r = careerplan::testing::run_pipeline(
      dir, {"--config", (dir / "run.conf").string(), "--persons", "400"});
  REQUIRE(r.code == 0);
  json manifest = read_json_file(ArtifactPaths{dir}.manifest());
  CHECK(manifest["H"] == 4);
  CHECK(manifest["feasible_count"] == 15);
}

TEST_CASE("full pipeline produces every artifact") {
  auto dir = scratch_dir("cli_pipeline");
  auto r = careerplan::testing::run_pipeline(dir, kSmall);
  REQUIRE(r.code == 0);
  ArtifactPaths paths{dir};
  for (const auto& p : {paths.raw_corpus(), paths.clean_corpus(), paths.nodes(), paths.edges(),
                        paths.manifest(), paths.selection(), paths.report_json(), paths.report_text()}) {
    CHECK(std::filesystem::exists(p));
  }
  std::size_t tables = 0;
  for (const auto& entry : std::filesystem::directory_iterator(paths.utilities_dir())) {
    if (entry.path().extension() == ".csv") ++tables;
  }
  CHECK(tables == 66);
  CHECK(read_json_file(paths.report_json())["methods"].size() == 9);
  CHECK(slurp(paths.edges()).rfind("s_id,d_id,hop_count,duration_cost,level_gain,desirability_gain\n", 0) == 0);

  SUBCASE("plan with the selected weights") {
    auto plan = run(with({"plan", "--origin", "0", "--lambda", "auto"}, dir));
    REQUIRE(plan.code == 0);
    json path = json::parse(plan.out);
    json selection = read_json_file(paths.selection());
    CHECK(path["lambda"] == selection["lambda_star"]);
    CHECK(path["schema_version"] == 1);
  }
  SUBCASE("plan errors map to exit codes") {
    CHECK(run(with({"plan", "--origin", "99999"}, dir)).code == kExitData);
    CHECK(run(with({"plan", "--origin", "0", "--lambda", "0.33,0.33,0.34"}, dir)).code == kExitMissingInput);
    CHECK(run(with({"plan", "--origin", "0", "--lambda", "0.33,0.33,0.34", "--snap"}, dir)).code == kExitOk);
    CHECK(run(with({"plan", "--origin", "0", "--lambda", "0.5,0.1,0.1"}, dir)).code == kExitConfig);
    CHECK(run(with({"plan", "--origin", "0", "--lambda", "x,y,z"}, dir)).code == kExitConfig);
  }
  SUBCASE("plan writes to a file") {
    auto out = dir / "path.json";
    REQUIRE(run(with({"plan", "--origin", "1", "--method", "greedy_most_common", "--out", out.string()}, dir))
                .code == 0);
    CHECK(json::parse(slurp(out))["method"] == "greedy_most_common");
  }
  SUBCASE("stats and plot data") {
    auto stats = run(with({"stats"}, dir));
    REQUIRE(stats.code == 0);
    CHECK(stats.out.rfind("out_degree,job_count\n", 0) == 0);
    CHECK(slurp(paths.histogram()) == stats.out);
    REQUIRE(run(with({"plot-data"}, dir)).code == 0);
    std::string csv = slurp(paths.pim_deltas());
    CHECK(csv.rfind("method,path_index,pim_delta\n", 0) == 0);
    CHECK(csv.find("greedy_most_common,0,") != std::string::npos);
  }
  SUBCASE("benchmark subset") {
    auto b = run(with({"benchmark", "--methods", "muld,greedy_level_gain"}, dir));
    REQUIRE(b.code == 0);
    CHECK(read_json_file(paths.report_json())["methods"].size() == 2);
    CHECK(run(with({"benchmark", "--methods", "nope"}, dir)).code == kExitData);
  }
}

TEST_CASE("rerunning the pipeline reproduces the report byte for byte") {
  auto a = scratch_dir("cli_rerun_a");
  auto b = scratch_dir("cli_rerun_b");
  REQUIRE(careerplan::testing::run_pipeline(a, kSmall).code == 0);
  REQUIRE(careerplan::testing::run_pipeline(b, {"--jobs", "50", "--persons", "600", "--threads", "1"}).code == 0);
  CHECK(slurp(ArtifactPaths{a}.report_json()) == slurp(ArtifactPaths{b}.report_json()));
  CHECK(slurp(ArtifactPaths{a}.selection()) == slurp(ArtifactPaths{b}.selection()));
  CHECK(slurp(ArtifactPaths{a}.edges()) == slurp(ArtifactPaths{b}.edges()));
}
