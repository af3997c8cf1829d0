// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "careerplan/synthetic.hpp"
#include "careerplan/trajectory.hpp"

using namespace careerplan;

namespace {

WorkStint stint(const std::string& title, const char* start, const char* end) {
  return WorkStint{JobKey::make("it", CompanySize::k11to50, title), DateStamp::parse(start),
                   DateStamp::parse(end)};
}

CareerTrajectory person(const std::string& id, const char* graduation,
                        std::vector<WorkStint> stints) {
  CareerTrajectory t;
  t.person_id = id;
  if (graduation) t.graduation = DateStamp::parse(graduation);
  t.stints = std::move(stints);
  return t;
}

}  // namespace

TEST_CASE("dates parse, order and subtract in months") {
  DateStamp a = DateStamp::parse("2010-11");
  DateStamp b = DateStamp::parse("2012-02-17");
  CHECK(a < b);
  CHECK(months_between(a, b) == 15);
  CHECK(months_between(b, a) == -15);
  CHECK(b.to_string() == "2012-02");
  CHECK(add_months(a, 2) == DateStamp{2011, 1});
  CHECK_THROWS_AS(DateStamp::parse("2010-13"), std::invalid_argument);
  CHECK_THROWS_AS(DateStamp::parse("2010/01"), std::invalid_argument);
  CHECK_THROWS_AS(DateStamp::parse("20x0-01"), std::invalid_argument);
}

TEST_CASE("job keys normalize titles and validate categories") {
  JobKey k = JobKey::make(" banking ", parse_company_size("10001+"), "  Senior   Vice\tPresident ");
  CHECK(k.industry == "banking");
  CHECK(k.title == "senior vice president");
  CHECK(k.company_size == CompanySize::k10001plus);
  CHECK(parse_company_size("[2-10]") == CompanySize::k2to10);
  CHECK_THROWS_AS(parse_company_size("[3-9]"), std::invalid_argument);
  CHECK_THROWS_AS(JobKey::make("", CompanySize::k2to10, "x"), std::invalid_argument);
  CHECK_THROWS_AS(JobKey::make("a", CompanySize::k2to10, "   "), std::invalid_argument);
}

TEST_CASE("ingest parses a valid record") {
  std::istringstream in(
      R"({"person_id": "p1", "graduation": "2005-06", "stints": [)"
      R"({"industry": "banking", "company_size": "[10001+]", "title": "Analyst", "start": "2005-07", "end": "2007-01"},)"
      R"({"industry": "banking", "company_size": "[10001+]", "title": "Associate", "start": "2007-01", "end": "2010-03"},)"
      R"({"industry": "banking", "company_size": "[10001+]", "title": "Vice President", "start": "2010-04", "end": "2014-12"}]})"
      "\n");
  IngestResult r = ingest(in);
  REQUIRE(r.trajectories.size() == 1);
  CHECK(r.trajectories[0].stints.size() == 3);
  CHECK(r.trajectories[0].graduation == DateStamp{2005, 6});
  CHECK(r.trajectories[0].stints[2].job.title == "vice president");
  CHECK(r.warnings.empty());
}

TEST_CASE("ingest: end before start is dropped under skip and fatal under strict") {
  const std::string bad =
      R"({"person_id": "p1", "graduation": "2005-06", "stints": [)"
      R"({"industry": "it", "company_size": "[2-10]", "title": "dev", "start": "2007-01", "end": "2006-01"}]})"
      "\n";
  std::istringstream skip_in(bad);
  IngestResult r = ingest(skip_in, IngestPolicy::kSkip);
  CHECK(r.trajectories.empty());
  CHECK(r.dropped == 1);
  CHECK(r.warnings.size() == 1);

  std::istringstream strict_in("\n" + bad);
  try {
    ingest(strict_in, IngestPolicy::kStrict);
    FAIL("expected IngestError");
  } catch (const IngestError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("ingest reports malformed JSON and missing fields with line numbers") {
  std::istringstream in("{\"person_id\": \"p\", \"stints\": []}\n{not json\n");
  CHECK_THROWS_AS(ingest(in), IngestError);
  std::istringstream missing(R"({"person_id": "p", "graduation": null})");
  try {
    ingest(missing);
    FAIL("expected IngestError");
  } catch (const IngestError& e) {
    CHECK(e.line() == 1);
    CHECK(std::string(e.what()).find("stints") != std::string::npos);
  }
}

TEST_CASE("ingest of an empty file yields nothing") {
  std::istringstream in("");
  IngestResult r = ingest(in);
  CHECK(r.trajectories.empty());
  CHECK(r.warnings.empty());
}

TEST_CASE("ingest sorts stints, repairs overlaps and keeps the latest graduation") {
  std::istringstream in(
      R"({"person_id": "p", "graduation": ["2001-01", "2004-05"], "stints": [)"
      R"({"industry": "it", "company_size": "[2-10]", "title": "b", "start": "2006-01", "end": "2008-01"},)"
      R"({"industry": "it", "company_size": "[2-10]", "title": "a", "start": "2004-06", "end": "2006-05"}]})");
  IngestResult r = ingest(in);
  REQUIRE(r.trajectories.size() == 1);
  const auto& t = r.trajectories[0];
  CHECK(t.graduation == DateStamp{2004, 5});
  CHECK(t.stints[0].job.title == "a");
  CHECK(t.stints[0].end == DateStamp{2006, 1});
  CHECK(r.repaired == 1);
}

TEST_CASE("serialize then ingest is the identity on generated corpora") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    GeneratorConfig config;
    config.jobs = 30;
    config.persons = 40;
    auto trajs = generate_synthetic(config, seed);
    std::istringstream in(serialize_to_string(trajs));
    CHECK(ingest(in).trajectories == trajs);
  }
}

TEST_CASE("clean removes low-support jobs") {
  std::vector<CareerTrajectory> trajs = {
      person("p1", "2000-01", {stint("a", "2000-02", "2001-01"), stint("b", "2001-02", "2002-01"),
                               stint("rare", "2002-02", "2003-01")}),
      person("p2", "2000-01", {stint("a", "2000-02", "2001-01"), stint("b", "2001-02", "2002-01")}),
  };
  auto out = clean(trajs, {2, true});
  REQUIRE(out.size() == 2);
  CHECK(out[0].stints.size() == 2);
  for (const auto& t : out) {
    for (const auto& s : t.stints) CHECK(s.job.title != "rare");
  }
}

TEST_CASE("clean with support 1 keeps a post-graduation corpus intact") {
  std::vector<CareerTrajectory> trajs = {
      person("p1", "2000-01", {stint("a", "2000-02", "2001-01"), stint("b", "2001-02", "2002-01")}),
      person("p2", "1999-01", {stint("c", "2000-02", "2001-01"), stint("a", "2001-02", "2002-01")}),
  };
  CHECK(clean(trajs, {1, true}) == trajs);
}

TEST_CASE("clean removes work before graduation and ungraduated persons") {
  std::vector<CareerTrajectory> trajs = {
      person("p1", "2003-01", {stint("intern", "2001-01", "2002-01"), stint("a", "2003-02", "2004-01"),
                               stint("b", "2004-02", "2006-01")}),
      person("p2", nullptr, {stint("a", "2003-02", "2004-01"), stint("b", "2004-02", "2006-01")}),
  };
  auto out = clean(trajs, {1, true});
  REQUIRE(out.size() == 1);
  CHECK(out[0].person_id == "p1");
  CHECK(out[0].stints.size() == 2);
  CHECK(out[0].stints.front().job.title == "a");

  auto lenient = clean(trajs, {1, false});
  CHECK(lenient.size() == 2);
}

TEST_CASE("clean is idempotent on random corpora") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 25; ++round) {
    std::uniform_int_distribution<int> title(0, 8), len(1, 5), persons(1, 15), support(1, 4);
    std::vector<CareerTrajectory> trajs;
    int p_count = persons(rng);
    for (int p = 0; p < p_count; ++p) {
      CareerTrajectory t;
      t.person_id = "p" + std::to_string(p);
      t.graduation = DateStamp{2000, 1 + p % 12};
      int cursor = DateStamp{1999, 6}.ordinal();
      int n = len(rng);
      for (int k = 0; k < n; ++k) {
        WorkStint s{JobKey::make("x", CompanySize::k2to10, "t" + std::to_string(title(rng))),
                    DateStamp::from_ordinal(cursor), DateStamp::from_ordinal(cursor + 10)};
        cursor += 11;
        t.stints.push_back(s);
      }
      trajs.push_back(t);
    }
    CleanOptions options{support(rng), round % 2 == 0};
    auto once = clean(trajs, options);
    CHECK(clean(once, options) == once);
    for (const auto& t : once) {
      CHECK(t.stints.size() >= 2);
      for (const auto& s : t.stints) CHECK(s.start >= *t.graduation);
    }
  }
}

TEST_CASE("merge_repeated_jobs collapses consecutive identical jobs") {
  auto t = person("p", "2000-01", {stint("a", "2000-02", "2001-01"), stint("a", "2001-02", "2003-01"),
                                   stint("b", "2003-02", "2004-01")});
  auto m = merge_repeated_jobs(t);
  REQUIRE(m.stints.size() == 2);
  CHECK(m.stints[0].start == DateStamp{2000, 2});
  CHECK(m.stints[0].end == DateStamp{2003, 1});
}

TEST_CASE("generator is deterministic and validates its config") {
  GeneratorConfig config;
  config.jobs = 50;
  config.persons = 200;
  CHECK(serialize_to_string(generate_synthetic(config, 42)) ==
        serialize_to_string(generate_synthetic(config, 42)));
  CHECK(serialize_to_string(generate_synthetic(config, 42)) !=
        serialize_to_string(generate_synthetic(config, 43)));

  GeneratorConfig bad = config;
  bad.jobs = 1;
  CHECK_THROWS_AS(generate_synthetic(bad, 1), std::invalid_argument);
  bad = config;
  bad.persons = 0;
  CHECK_THROWS_AS(generate_synthetic(bad, 1), std::invalid_argument);
  bad = config;
  bad.date_max = bad.date_min;
  CHECK_THROWS_AS(generate_synthetic(bad, 1), std::invalid_argument);
}

TEST_CASE("generator with two jobs, one person and length two") {
  GeneratorConfig config;
  config.jobs = 2;
  config.persons = 1;
  config.mean_len = 2.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto trajs = generate_synthetic(config, seed);
    REQUIRE(trajs.size() == 1);
    REQUIRE(trajs[0].stints.size() == 2);
    CHECK(trajs[0].stints[0].job != trajs[0].stints[1].job);
  }
}

TEST_CASE("generated trajectories satisfy the record invariants") {
  GeneratorConfig config;
  config.jobs = 80;
  config.persons = 500;
  auto trajs = generate_synthetic(config, 42);
  for (const auto& t : trajs) {
    REQUIRE(t.graduation);
    REQUIRE(t.stints.size() >= 2);
    for (std::size_t k = 0; k < t.stints.size(); ++k) {
      CHECK(t.stints[k].end >= t.stints[k].start);
      CHECK(t.stints[k].start >= *t.graduation);
      CHECK(t.stints[k].end <= config.date_max);
      if (k + 1 < t.stints.size()) {
        CHECK(t.stints[k].end <= t.stints[k + 1].start);
        CHECK(t.stints[k].job != t.stints[k + 1].job);
      }
    }
  }
  // passes cleaning at support 1 unchanged
  CHECK(clean(trajs, {1, true}) == trajs);
}
