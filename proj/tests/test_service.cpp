// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <thread>

#include "careerplan/config.hpp"
#include "careerplan/service.hpp"
#include "httplib.h"
#include "pipeline_fixture.hpp"

using namespace careerplan;
using careerplan::testing::run;
using nlohmann::json;

namespace {

struct Fixture {
  std::filesystem::path dir;
  std::shared_ptr<const ServiceState> state;
};

const Fixture& fixture() {
  static const Fixture f = [] {
    Fixture out;
    out.dir = careerplan::testing::scratch_dir("service");
    auto r = careerplan::testing::run_pipeline(out.dir, {"--jobs", "60", "--persons", "800", "--seed", "5"});
    REQUIRE(r.code == 0);
    PipelineConfig config;
    config.workdir = out.dir.string();
    out.state = load_service_state(config);
    return out;
  }();
  return f;
}

const ServiceState& state() { return *fixture().state; }

json plan_body(JobId origin, json lambda, const char* method = "muld") {
  return json{{"origin_job_id", origin}, {"lambda", std::move(lambda)}, {"method", method}};
}

}  // namespace

TEST_CASE("weights endpoint lists the feasible grid") {
  ApiResult r = api_weights(state());
  CHECK(r.status == 200);
  CHECK(r.body["schema_version"] == 1);
  CHECK(r.body["entries"].size() == 66);
  CHECK(r.body["raw_count"] == 121);
  int stars = 0;
  for (const auto& e : r.body["entries"]) {
    if (e["is_star"].get<bool>()) ++stars;
    CHECK(e["pim"].is_number());
  }
  CHECK(stars == 1);
  CHECK(r.body["lambda_star"].size() == 3);
}

TEST_CASE("plan validation errors") {
  CHECK(api_plan(state(), plan_body(0, {0.25, 0.25, 0.0}).dump()).status == 400);
  CHECK(api_plan(state(), plan_body(0, {0.5, 0.5}).dump()).status == 400);
  CHECK(api_plan(state(), plan_body(0, {1.5, -0.5, 0.0}).dump()).status == 400);
  CHECK(api_plan(state(), plan_body(0, "sometimes").dump()).status == 400);
  CHECK(api_plan(state(), "{not json").status == 400);
  CHECK(api_plan(state(), json{{"lambda", "auto"}}.dump()).status == 400);
  CHECK(api_plan(state(), plan_body(0, "auto", "unknown_method").dump()).status == 400);
  ApiResult missing = api_plan(state(), plan_body(100000, "auto").dump());
  CHECK(missing.status == 404);
  CHECK(missing.body["schema_version"] == 1);
  CHECK(missing.body["error"].is_string());
}

TEST_CASE("off-grid weights need snapping") {
  json off = plan_body(0, {0.33, 0.33, 0.34});
  CHECK(api_plan(state(), off.dump()).status == 409);
  off["snap"] = true;
  ApiResult snapped = api_plan(state(), off.dump());
  REQUIRE(snapped.status == 200);
  CHECK(snapped.body["lambda"] == json({0.3, 0.3, 0.4}));
  ApiResult direct = api_plan(state(), plan_body(0, {0.3, 0.3, 0.4}).dump());
  CHECK(direct.body == snapped.body);
}

TEST_CASE("auto weights use the selected vector") {
  ApiResult r = api_plan(state(), plan_body(1, "auto").dump());
  REQUIRE(r.status == 200);
  CHECK(r.body["lambda"] == api_weights(state()).body["lambda_star"]);

  auto without = make_service_state(state().graph, state().grid, state().learned, state().options,
                                    std::nullopt, std::nullopt);
  CHECK(api_plan(*without, plan_body(1, "auto").dump()).status == 409);
  CHECK(api_benchmark(*without).status == 404);
}

TEST_CASE("plan json structure") {
  ApiResult r = api_plan(state(), plan_body(2, json::array({0.0, 1.0, 0.0})).dump());
  REQUIRE(r.status == 200);
  const json& b = r.body;
  CHECK(b["schema_version"] == 1);
  CHECK(b["origin"]["id"] == 2);
  CHECK(b["method"] == "muld");
  CHECK(b["length"] == b["hops"].size());
  double l = 0;
  JobId at = 2;
  for (const auto& hop : b["hops"]) {
    CHECK(hop["from"]["id"] == at);
    at = hop["to"]["id"].get<JobId>();
    l += hop["L"].get<double>();
  }
  CHECK(b["totals"]["L"].get<double>() == doctest::Approx(l));
}

TEST_CASE("every method can be planned") {
  for (Method m : kAllMethods) {
    ApiResult r = api_plan(state(), plan_body(0, "auto", std::string(method_label(m)).c_str()).dump());
    CHECK(r.status == 200);
    CHECK(r.body["method"] == std::string(method_label(m)));
  }
}

TEST_CASE("jobs and neighbors") {
  ApiResult all = api_jobs(state(), "", 1000);
  CHECK(all.body["jobs"].size() == state().graph.job_count());
  CHECK(api_jobs(state(), "", 3).body["jobs"].size() == 3);
  const std::string title = state().graph.job(4).title;
  ApiResult found = api_jobs(state(), title, 1000);
  bool has = false;
  for (const auto& j : found.body["jobs"]) has = has || j["id"] == 4;
  CHECK(has);
  CHECK(api_jobs(state(), "zzzz no such job", 10).body["jobs"].empty());

  ApiResult n = api_neighbors(state(), "0");
  CHECK(n.status == 200);
  CHECK(n.body["out_edges"].size() == state().graph.out_degree(0));
  CHECK(api_neighbors(state(), "abc").status == 400);
  CHECK(api_neighbors(state(), "999999").status == 404);
}

TEST_CASE("benchmark endpoint returns the stored report") {
  ApiResult r = api_benchmark(state());
  REQUIRE(r.status == 200);
  CHECK(r.body["schema_version"] == 1);
  CHECK(r.body["methods"].size() == 9);
}

TEST_CASE("one-hot plan matches the command line") {
  for (JobId origin : {0u, 3u, 7u}) {
    auto cli = run({"plan", "--origin", std::to_string(origin), "--lambda", "0,1,0", "--workdir",
                    fixture().dir.string()});
    REQUIRE(cli.code == 0);
    ApiResult api = api_plan(state(), plan_body(origin, {0.0, 1.0, 0.0}).dump());
    CHECK(json::parse(cli.out) == api.body);
  }
}

TEST_CASE("http round trip over loopback") {
  httplib::Server server;
  register_routes(server, fixture().state);
  int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto weights = client.Get("/api/weights");
  REQUIRE(weights);
  CHECK(weights->status == 200);
  CHECK(json::parse(weights->body)["entries"].size() == 66);

  auto plan = client.Post("/api/plan", plan_body(0, {0.0, 1.0, 0.0}).dump(), "application/json");
  REQUIRE(plan);
  CHECK(plan->status == 200);
  CHECK(json::parse(plan->body) == api_plan(state(), plan_body(0, {0.0, 1.0, 0.0}).dump()).body);

  auto bad = client.Post("/api/plan", plan_body(0, {0.5, 0.0, 0.0}).dump(), "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);

  auto jobs = client.Get("/api/jobs?q=&limit=5");
  REQUIRE(jobs);
  CHECK(json::parse(jobs->body)["jobs"].size() == 5);
  auto bad_limit = client.Get("/api/jobs?limit=x");
  REQUIRE(bad_limit);
  CHECK(bad_limit->status == 400);

  auto neighbors = client.Get("/api/graph/neighbors/1");
  REQUIRE(neighbors);
  CHECK(neighbors->status == 200);
  auto unknown = client.Get("/api/graph/neighbors/424242");
  REQUIRE(unknown);
  CHECK(unknown->status == 404);

  auto bench = client.Get("/api/benchmark");
  REQUIRE(bench);
  CHECK(bench->status == 200);

  server.stop();
  worker.join();
}
