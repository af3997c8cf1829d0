// Copyright 2026 The Careerplan Authors
// SPDX-License-Identifier: Apache-2.0

#include "careerplan/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "careerplan/artifacts.hpp"
#include "careerplan/benchmark.hpp"
#include "careerplan/config.hpp"
#include "careerplan/graph_io.hpp"
#include "careerplan/muld.hpp"
#include "careerplan/service.hpp"
#include "careerplan/synthetic.hpp"
#include "careerplan/trajectory.hpp"
#include "httplib.h"

namespace careerplan {

namespace {

using nlohmann::json;

struct PlanError : std::runtime_error {
  PlanError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<CareerTrajectory> read_clean_corpus(const ArtifactPaths& paths) {
  require_file(paths.clean_corpus());
  return ingest_file(paths.clean_corpus().string()).trajectories;
}

TransitionGraph read_graph(const ArtifactPaths& paths) {
  require_file(paths.nodes());
  require_file(paths.edges());
  return load_graph(paths.nodes().string(), paths.edges().string());
}

void emit(std::ostream& out, const std::string& file, const std::string& text) {
  if (file.empty()) {
    out << text;
  } else {
    write_text_file(file, text);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multicriteria career path planning over job-transition graphs", "careerplan"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_file;
  app.add_option("--config", config_file, "key = value config file");
  std::map<std::string, std::string> overrides;
  for (const auto& key : config_keys()) {
    app.add_option_function<std::string>(
        "--" + key, [&overrides, key](const std::string& v) { overrides[key] = v; },
        "override config key '" + key + "'");
  }

  auto* generate = app.add_subcommand("generate", "write a seeded synthetic trajectory corpus");
  std::string generate_out;
  generate->add_option("--out", generate_out, "output JSONL (default <workdir>/corpus.jsonl)");

  auto* ingest_cmd = app.add_subcommand("ingest", "validate and clean a trajectory JSONL file");
  std::string ingest_in, ingest_out, policy = "strict";
  ingest_cmd->add_option("--input", ingest_in, "input JSONL (default <workdir>/corpus.jsonl)");
  ingest_cmd->add_option("--out", ingest_out, "cleaned JSONL (default <workdir>/corpus.clean.jsonl)");
  ingest_cmd->add_option("--policy", policy, "strict or skip")
      ->check(CLI::IsMember({"strict", "skip"}));

  auto* build = app.add_subcommand("build", "build the transition graph and its statistics");
  auto* learn = app.add_subcommand("learn", "learn utility tables over the weight grid");
  auto* select = app.add_subcommand("select", "score the grid by PIM and pick lambda*");

  auto* plan = app.add_subcommand("plan", "plan a path from an origin job");
  JobId origin = 0;
  std::string lambda_text = "auto", method_text = "muld", plan_out;
  bool snap = false;
  plan->add_option("--origin", origin, "origin job id")->required();
  plan->add_option("--lambda", lambda_text, "\"auto\" or comma-separated weights");
  plan->add_option("--method", method_text, "planning method label");
  plan->add_flag("--snap", snap, "snap lambda to the nearest learned grid point");
  plan->add_option("--out", plan_out, "write the path JSON here instead of stdout");

  auto* bench = app.add_subcommand("benchmark", "benchmark every planner against observed paths");
  std::string methods_text;
  bench->add_option("--methods", methods_text, "comma-separated method labels (default all)");

  auto* plot = app.add_subcommand("plot-data", "export per-path PIM deltas as CSV");
  std::string plot_out;
  plot->add_option("--out", plot_out, "CSV path (default <workdir>/pim_deltas.csv)");

  auto* stats = app.add_subcommand("stats", "export the out-degree histogram");
  std::string stats_out;
  stats->add_option("--out", stats_out, "CSV path (default <workdir>/out_degree.csv)");

  auto* serve = app.add_subcommand("serve", "serve the HTTP query API");
  std::string host = "127.0.0.1";
  int port = 8080;
  serve->add_option("--host", host, "bind address");
  serve->add_option("--port", port, "TCP port");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    PipelineConfig config = config_file.empty() ? PipelineConfig{} : load_config(config_file);
    for (const auto& [key, value] : overrides) apply_config_value(config, key, value);
    config.validate();
    const ArtifactPaths paths{config.workdir};
    std::filesystem::create_directories(paths.root);

    if (generate->parsed()) {
      auto trajs = generate_synthetic(config.generator, config.seed);
      std::string file = generate_out.empty() ? paths.raw_corpus().string() : generate_out;
      serialize_file(file, trajs);
      out << "wrote " << trajs.size() << " trajectories to " << file << '\n';
    } else if (ingest_cmd->parsed()) {
      std::string in_file = ingest_in.empty() ? paths.raw_corpus().string() : ingest_in;
      require_file(in_file);
      IngestResult raw = ingest_file(in_file, policy == "skip" ? IngestPolicy::kSkip
                                                               : IngestPolicy::kStrict);
      for (const auto& w : raw.warnings) err << "warning: " << w << '\n';
      auto cleaned = clean(raw.trajectories, {config.min_support, config.require_graduation});
      std::string file = ingest_out.empty() ? paths.clean_corpus().string() : ingest_out;
      serialize_file(file, cleaned);
      out << "ingested " << raw.trajectories.size() << " trajectories (" << raw.dropped
          << " dropped, " << raw.repaired << " overlaps repaired); kept " << cleaned.size()
          << " after cleaning; wrote " << file << '\n';
    } else if (build->parsed()) {
      auto trajs = read_clean_corpus(paths);
      PageRankOptions pr;
      pr.alpha = config.alpha;
      TransitionGraph graph = build_scored_graph(trajs, pr);
      if (!graph.empty() && !graph.pagerank_status().converged) {
        err << "warning: PageRank did not converge (last L1 change "
            << graph.pagerank_status().last_change << ")\n";
      }
      save_graph(paths.nodes().string(), paths.edges().string(), graph);
      out << "graph: " << graph.job_count() << " jobs, " << graph.edge_count() << " transitions\n";
    } else if (learn->parsed()) {
      TransitionGraph graph = read_graph(paths);
      WeightGrid grid = make_weight_grid(static_cast<int>(kCriteria), config.H);
      auto options = config.value_iteration_options();
      auto learned = muld_learn(graph, grid, options, config.threads);
      save_learned(paths, graph, grid, learned, options);
      out << "learned " << learned.size() << " utility tables (" << grid.raw_count()
          << " raw grid entries, " << grid.feasible_count() << " feasible)\n";
    } else if (select->parsed()) {
      TransitionGraph graph = read_graph(paths);
      LoadedGrid loaded = load_learned(paths, graph);
      auto trajs = read_clean_corpus(paths);
      auto actual = actual_paths(graph, trajs);
      if (actual.empty()) throw std::invalid_argument("no observed path with at least one hop");
      auto scores = score_grid(graph, loaded.learned, actual, config.max_len);
      WeightVector star = select_lambda_star(std::span<const GridScore>(scores));
      json doc = selection_to_json(scores, star, actual.size());
      write_json_file(paths.selection(), doc);
      out << "lambda* = (" << star.to_string() << "), PIM = " << doc["pim_star"].get<double>()
          << '\n';
    } else if (plan->parsed()) {
      auto state = load_service_state(config);
      PlanRequest request;
      request.origin = origin;
      request.method = parse_method(method_text);
      request.snap = snap;
      request.max_len = config.max_len;
      if (lambda_text != "auto") {
        std::vector<double> weights;
        for (const auto& item : split_commas(lambda_text)) {
          try {
            weights.push_back(std::stod(item));
          } catch (const std::exception&) {
            throw ConfigError("malformed lambda '" + lambda_text + "'");
          }
        }
        request.lambda = std::move(weights);
      }
      ApiResult result = plan_query(*state, request);
      if (result.status != 200) {
        int code = result.status == 404 ? kExitData
                   : result.status == 409 ? kExitMissingInput
                                          : kExitConfig;
        throw PlanError(code, result.body.value("error", "plan failed"));
      }
      emit(out, plan_out, result.body.dump(2) + "\n");
    } else if (bench->parsed()) {
      TransitionGraph graph = read_graph(paths);
      auto trajs = read_clean_corpus(paths);
      std::vector<Method> methods;
      if (methods_text.empty()) {
        methods.assign(kAllMethods.begin(), kAllMethods.end());
      } else {
        for (const auto& label : split_commas(methods_text)) methods.push_back(parse_method(label));
      }
      BenchmarkOptions options;
      options.value_iteration = config.value_iteration_options();
      options.H = config.H;
      options.max_len = config.max_len;
      options.threads = config.threads;
      BenchmarkReport report = benchmark(graph, trajs, methods, options);
      std::string table = render_report_table(report);
      write_json_file(paths.report_json(), report_to_json(report));
      write_text_file(paths.report_text(), table);
      out << table;
    } else if (plot->parsed()) {
      json report = read_json_file(paths.report_json());
      std::ostringstream csv;
      csv << "method,path_index,pim_delta\n";
      for (const auto& [label, deltas] : report.at("path_pim_deltas").items()) {
        std::size_t k = 0;
        for (const auto& d : deltas) {
          csv << label << ',' << k++ << ',' << format_real(d.get<double>()) << '\n';
        }
      }
      std::string file = plot_out.empty() ? paths.pim_deltas().string() : plot_out;
      write_text_file(file, csv.str());
      out << "wrote " << file << '\n';
    } else if (stats->parsed()) {
      TransitionGraph graph = read_graph(paths);
      std::ostringstream csv;
      write_histogram_csv(csv, out_degree_distribution(graph));
      std::string file = stats_out.empty() ? paths.histogram().string() : stats_out;
      write_text_file(file, csv.str());
      out << csv.str();
    } else if (serve->parsed()) {
      auto state = load_service_state(config);
      httplib::Server server;
      register_routes(server, state, config.static_dir);
      out << "serving " << state->graph.job_count() << " jobs on http://" << host << ':' << port
          << '\n'
          << std::flush;
      if (!server.listen(host, port)) {
        err << "error: cannot listen on " << host << ':' << port << '\n';
        return kExitFailure;
      }
    }
  } catch (const PlanError& e) {
    err << "error: " << e.what() << '\n';
    return e.code;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const MissingArtifact& e) {
    err << "error: " << e.what() << '\n';
    return kExitMissingInput;
  } catch (const IngestError& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace careerplan
