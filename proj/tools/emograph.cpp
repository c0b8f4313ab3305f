// Copyright 2026 The Emograph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line entry point wiring the four pipeline stages together:
// synthetic generation, baseline propagation, LLM-driven contagion,
// real-record ingestion, structural comparison and GCN training.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "emograph/batch.hpp"
#include "emograph/errors.hpp"
#include "emograph/gcn.hpp"
#include "emograph/generators.hpp"
#include "emograph/graph_io.hpp"
#include "emograph/ingest.hpp"
#include "emograph/llm_diffusion.hpp"
#include "emograph/metrics.hpp"
#include "emograph/propagation.hpp"
#include "emograph/provider.hpp"
#include "emograph/rng.hpp"
#include "emograph/version.hpp"

namespace {

using emograph::ArgumentError;
using emograph::ConfigError;
using emograph::ContractError;
using emograph::IoError;
using emograph::ParseError;
using ordered_json = nlohmann::ordered_json;

// Exit code classes; documented in the README.
enum ExitCode {
  kOk = 0,
  kRuntimeError = 1,
  kUsageError = 2,
  kIoError = 3,
  kConfigError = 4,
  kContractError = 5,
};

// JSON config file support: a flat object per subcommand, e.g.
// {"batch": {"runs": 50}, "seed": 1}. Flags given on the command line
// override config values (CLI11 default precedence).
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool default_also, bool,
                        std::string) const override {
    ordered_json j;
    for (const CLI::Option* opt : app->get_options({})) {
      if (!opt->get_lnames().empty() && opt->get_configurable()) {
        if (opt->count() == 1) {
          j[opt->get_lnames()[0]] = opt->results().at(0);
        } else if (opt->count() > 1) {
          j[opt->get_lnames()[0]] = opt->results();
        } else if (default_also && !opt->get_default_str().empty()) {
          j[opt->get_lnames()[0]] = opt->get_default_str();
        }
      }
    }
    return j.dump(2);
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    ordered_json j;
    try {
      input >> j;
    } catch (const nlohmann::json::exception& e) {
      throw CLI::FileError(std::string("config is not valid JSON: ") +
                           e.what());
    }
    std::vector<CLI::ConfigItem> items;
    collect(j, {}, items);
    return items;
  }

 private:
  static std::string scalar(const ordered_json& value) {
    return value.is_string() ? value.get<std::string>() : value.dump();
  }

  static void collect(const ordered_json& j, std::vector<std::string> parents,
                      std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        auto nested = parents;
        nested.push_back(key);
        collect(value, nested, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        for (const auto& element : value) item.inputs.push_back(scalar(element));
      } else {
        item.inputs.push_back(scalar(value));
      }
      items.push_back(std::move(item));
    }
  }
};

ordered_json tool_echo(ordered_json params) {
  ordered_json tool;
  tool["version"] = emograph::kVersion;
  tool["config"] = std::move(params);
  return tool;
}

// Adds the tool/config echo to a serialized JSON document.
std::string with_tool_echo(const std::string& document,
                           const ordered_json& params) {
  ordered_json j = ordered_json::parse(document);
  j["tool"] = tool_echo(params);
  return j.dump(2) + "\n";
}

emograph::EmotionDistribution parse_distribution(const std::string& text) {
  emograph::EmotionDistribution dist;
  std::array<double, 3> values{};
  std::istringstream in(text);
  std::string token;
  for (int i = 0; i < 3; ++i) {
    if (!std::getline(in, token, ','))
      throw ArgumentError("distribution needs three comma-separated weights");
    try {
      values[i] = std::stod(token);
    } catch (const std::exception&) {
      throw ArgumentError("distribution weight '" + token +
                          "' is not a number");
    }
  }
  if (std::getline(in, token, ','))
    throw ArgumentError("distribution needs exactly three weights");
  dist.positive = values[0];
  dist.neutral = values[1];
  dist.negative = values[2];
  return dist;
}

void maybe_write_dot(const emograph::Graph& graph, const std::string& path) {
  if (!path.empty()) emograph::write_text_file(path, emograph::to_dot(graph));
}

ordered_json metrics_json(const emograph::Graph& graph) {
  const emograph::DegreeStats stats = emograph::degree_stats(graph);
  ordered_json j;
  j["directed"] = graph.directed();
  j["provenance"] = std::string(to_string(graph.provenance()));
  j["nodes"] = stats.node_count;
  j["edges"] = stats.edge_count;
  j["average_degree"] = stats.average_degree;
  j["max_degree"] = stats.max_degree;
  j["degree_histogram"] = stats.degree_histogram;
  j["clustering_coefficient"] = emograph::clustering_coefficient(graph);
  if (graph.directed()) {
    j["reciprocity"] = emograph::reciprocity(graph);
  } else {
    j["reciprocity"] = nullptr;
  }
  j["components"] = emograph::weakly_connected_components(graph);
  return j;
}

ordered_json eval_metrics_json(const emograph::EvalMetrics& metrics) {
  ordered_json per_class = ordered_json::array();
  for (int c = 0; c < emograph::kNumClasses; ++c) {
    per_class.push_back(
        {{"label", to_string(emograph::emotion_from_index(c))},
         {"precision", metrics.per_class[c].precision},
         {"recall", metrics.per_class[c].recall},
         {"f1", metrics.per_class[c].f1},
         {"support", metrics.per_class[c].support}});
  }
  ordered_json confusion = ordered_json::array();
  for (int r = 0; r < emograph::kNumClasses; ++r) {
    confusion.push_back(std::vector<std::size_t>(
        metrics.confusion[r].begin(), metrics.confusion[r].end()));
  }
  return {{"accuracy", metrics.accuracy},
          {"macro_f1", metrics.macro_f1},
          {"per_class", std::move(per_class)},
          {"confusion", std::move(confusion)},
          {"confusion_text", emograph::render_confusion_matrix(metrics)}};
}

// ---------------------------------------------------------------------------
// gen-graph

struct GenGraphArgs {
  int nodes = 10;
  double edge_prob = 0.5;
  int chains = 0;
  int chain_len = 4;
  bool attach_root = false;
  std::uint64_t seed = 42;
  std::uint64_t attr_seed = 0;  // 0 = derive from seed
  std::string dist = "1,1,1";
  std::string out;
  std::string dot;
};

int run_gen_graph(const GenGraphArgs& args) {
  const std::uint64_t attr_seed =
      args.attr_seed != 0 ? args.attr_seed : emograph::derive_seed(args.seed, 1);

  emograph::Graph graph =
      args.chains > 0
          ? (args.attach_root
                 ? emograph::generate_star_chain_graph(args.chains,
                                                       args.chain_len,
                                                       args.seed)
                 : emograph::generate_chain_graphs(args.chains, args.chain_len,
                                                   args.seed))
          : emograph::generate_er_graph(args.nodes, args.edge_prob, args.seed);
  emograph::init_node_attributes(graph, parse_distribution(args.dist),
                                 attr_seed);

  ordered_json params{{"command", "gen-graph"},
                      {"seed", args.seed},
                      {"attr_seed", attr_seed},
                      {"dist", args.dist}};
  if (args.chains > 0) {
    params["chains"] = args.chains;
    params["chain_len"] = args.chain_len;
    params["attach_root"] = args.attach_root;
  } else {
    params["nodes"] = args.nodes;
    params["edge_prob"] = args.edge_prob;
  }
  emograph::write_text_file(
      args.out, with_tool_echo(emograph::serialize_graph(graph), params));
  maybe_write_dot(graph, args.dot);
  std::cout << "wrote " << graph.node_count() << " nodes / "
            << graph.edge_count() << " edges\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateArgs {
  std::string graph;
  std::string strategy = "random";
  std::string seed_node;
  int rounds = emograph::kDefaultMaxRounds;
  std::uint64_t rng_seed = 1;
  double p_fixed = -1.0;
  double neutral_intensity = -1.0;
  double base_p = -1.0;
  std::string out;
};

emograph::StrategyParams strategy_params_from(const std::string& strategy,
                                              double p_fixed,
                                              double neutral_intensity,
                                              double base_p) {
  emograph::StrategyParams params;
  params.strategy = emograph::strategy_from_string(strategy);
  if (p_fixed >= 0.0) params.p_fixed = p_fixed;
  if (neutral_intensity >= 0.0) params.neutral_intensity = neutral_intensity;
  if (base_p >= 0.0) params.base_p = base_p;
  return params;
}

int run_simulate(const SimulateArgs& args) {
  emograph::Graph graph = emograph::read_graph_file(args.graph);
  emograph::StrategyParams params = strategy_params_from(
      args.strategy, args.p_fixed, args.neutral_intensity, args.base_p);
  emograph::DiffusionTrace trace = emograph::run_simulation(
      graph, params, args.seed_node, args.rounds, args.rng_seed);

  std::string serialized = emograph::serialize_trace(trace);
  // The terminal summary record carries the config echo.
  const auto last_newline = serialized.rfind('\n', serialized.size() - 2);
  ordered_json summary = ordered_json::parse(
      serialized.substr(last_newline + 1));
  summary["tool"] = tool_echo({{"command", "simulate"},
                               {"strategy", args.strategy},
                               {"seed_node", args.seed_node},
                               {"rounds", args.rounds},
                               {"rng_seed", args.rng_seed}});
  serialized = serialized.substr(0, last_newline + 1) + summary.dump() + "\n";
  emograph::write_text_file(args.out, serialized);

  for (std::size_t round = 0; round < trace.infected_by_round.size(); ++round) {
    std::cout << "round " << round + 1 << ": " << trace.infected_by_round[round]
              << " infected\n";
  }
  std::cout << "spread " << trace.spread() << ", reward "
            << trace.reward.total << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// batch

struct BatchArgs {
  int runs = 50;
  int nodes = 10;
  double edge_prob = 0.5;
  int rounds = emograph::kDefaultMaxRounds;
  std::uint64_t rng_seed = 42;
  std::string dist = "1,1,1";
  double p_fixed = -1.0;
  double neutral_intensity = -1.0;
  double base_p = -1.0;
  std::string out;
  std::string table;
  bool assert_ordering = false;
};

int run_batch(const BatchArgs& args) {
  emograph::BatchConfig config;
  config.nodes = args.nodes;
  config.edge_prob = args.edge_prob;
  config.emotion_dist = parse_distribution(args.dist);
  config.max_rounds = args.rounds;
  config.master_seed = args.rng_seed;
  config.params = strategy_params_from("random", args.p_fixed,
                                       args.neutral_intensity, args.base_p);

  emograph::BatchSummary summary = emograph::batch_experiment(config, args.runs);
  const std::string table = emograph::render_summary_table(summary);
  std::cout << table;

  if (!args.out.empty()) {
    ordered_json j = ordered_json::parse(
        emograph::serialize_batch_summary(summary));
    j["tool"] = tool_echo({{"command", "batch"},
                           {"runs", args.runs},
                           {"rng_seed", args.rng_seed},
                           {"rounds", args.rounds}});
    emograph::write_text_file(args.out, j.dump(2) + "\n");
  }
  if (!args.table.empty()) emograph::write_text_file(args.table, table);

  if (args.assert_ordering && !emograph::strategy_ordering_holds(summary)) {
    std::cerr << "strategy ordering assertion failed: expected random > "
                 "theory > eic on mean spread and mean reward\n";
    return kContractError;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// llm-diffuse

struct LlmDiffuseArgs {
  std::string graph;
  std::string provider = "mock";
  std::string script;
  std::string seed_node;
  int rounds = 2;
  std::uint64_t rng_seed = 1;
  std::string tone_policy = "current";
  double mock_persistence = 1.0;
  std::string mock_drift = "1,0,0";
  std::string model = "default";
  int max_in_flight = 1;
  std::string out_trace;
  std::string out_graph;
  std::string out_report;
  std::string dot;
};

int run_llm_diffuse(const LlmDiffuseArgs& args) {
  if (args.rounds < 1) throw ArgumentError("--rounds must be >= 1");
  emograph::Graph graph = emograph::read_graph_file(args.graph);

  emograph::TonePolicy policy;
  if (args.tone_policy == "current") {
    policy = emograph::TonePolicy::CurrentLabel;
  } else if (args.tone_policy == "seed") {
    policy = emograph::TonePolicy::SeedTone;
  } else {
    throw ArgumentError("--tone-policy must be 'current' or 'seed'");
  }

  std::unique_ptr<emograph::GenerationProvider> provider;
  if (args.provider == "mock") {
    emograph::MockSynthesis synthesis;
    synthesis.tone_persistence = args.mock_persistence;
    const emograph::EmotionDistribution drift =
        parse_distribution(args.mock_drift);
    synthesis.drift_weights = {drift.positive, drift.neutral, drift.negative};
    provider = std::make_unique<emograph::MockProvider>(
        args.script.empty()
            ? emograph::MockProvider(synthesis)
            : emograph::MockProvider::from_script(args.script, synthesis));
  } else if (args.provider == "http") {
    // Configuration is validated before any network call.
    provider = std::make_unique<emograph::HttpChatProvider>(
        emograph::HttpChatProvider::from_env(args.model));
  } else {
    throw ArgumentError("--provider must be 'mock' or 'http'");
  }

  emograph::SentimentClassifier classifier;
  emograph::LlmTrace trace = emograph::run_llm_diffusion(
      graph, args.seed_node, args.rounds, *provider, classifier, policy,
      args.rng_seed, args.max_in_flight);

  ordered_json params{{"command", "llm-diffuse"},
                      {"provider", args.provider},
                      {"seed_node", args.seed_node},
                      {"rounds", args.rounds},
                      {"rng_seed", args.rng_seed},
                      {"tone_policy", args.tone_policy},
                      {"mock_persistence", args.mock_persistence},
                      {"mock_drift", args.mock_drift}};

  if (!args.out_trace.empty()) {
    std::string serialized = emograph::serialize_llm_trace(trace);
    const auto last_newline = serialized.rfind('\n', serialized.size() - 2);
    ordered_json summary =
        ordered_json::parse(serialized.substr(last_newline + 1));
    summary["tool"] = tool_echo(params);
    serialized =
        serialized.substr(0, last_newline + 1) + summary.dump() + "\n";
    emograph::write_text_file(args.out_trace, serialized);
  }
  if (!args.out_graph.empty()) {
    emograph::write_text_file(
        args.out_graph,
        with_tool_echo(emograph::serialize_graph(trace.diffusion_graph),
                       params));
  }
  maybe_write_dot(trace.diffusion_graph, args.dot);

  if (!trace.records.empty()) {
    const auto shares = emograph::positivity_share_by_round(trace);
    for (const auto& [round, fractions] : shares) {
      std::size_t count = 0;
      for (const auto& record : trace.records)
        if (record.round == round) ++count;
      std::printf("round %d: %zu replies (%.1f%% positive / %.1f%% neutral / "
                  "%.1f%% negative)\n",
                  round, count, fractions[0] * 100.0, fractions[1] * 100.0,
                  fractions[2] * 100.0);
    }

    if (!args.out_report.empty()) {
      const emograph::TransitionMatrix matrix =
          emograph::sentiment_transition_matrix(trace);
      ordered_json report;
      report["replies"] = trace.records.size();
      report["rounds_executed"] = trace.rounds_executed;
      ordered_json shares_json = ordered_json::object();
      for (const auto& [round, fractions] : shares) {
        shares_json[std::to_string(round)] = {{"positive", fractions[0]},
                                              {"neutral", fractions[1]},
                                              {"negative", fractions[2]}};
      }
      report["shares_by_round"] = std::move(shares_json);
      ordered_json rows = ordered_json::array();
      for (int r = 0; r < 3; ++r) {
        rows.push_back({{"from", to_string(emograph::emotion_from_index(r))},
                        {"observed", matrix.observed[r]},
                        {"positive", matrix.rows[r][0]},
                        {"neutral", matrix.rows[r][1]},
                        {"negative", matrix.rows[r][2]}});
      }
      report["transition_matrix"] = std::move(rows);
      report["errors"] = trace.errors;
      report["tool"] = tool_echo(params);
      emograph::write_text_file(args.out_report, report.dump(2) + "\n");
    }
  } else {
    std::cout << "no replies generated\n";
  }
  for (const std::string& error : trace.errors)
    std::cerr << "provider error: " << error << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// ingest

struct IngestArgs {
  std::string input;
  std::string format = "csv";
  bool trust_external = false;
  std::string out;
  std::string report;
  std::string dot;
};

int run_ingest(const IngestArgs& args) {
  emograph::ParsedRecords parsed = emograph::parse_interaction_records(
      args.input, emograph::record_format_from_string(args.format));

  emograph::IngestOptions options;
  options.trust_external_labels = args.trust_external;
  emograph::SentimentClassifier classifier;
  std::vector<std::string> warnings;
  emograph::Graph graph = emograph::build_real_graph(
      parsed.records, classifier, options, &warnings);

  ordered_json params{{"command", "ingest"},
                      {"format", args.format},
                      {"trust_external", args.trust_external}};
  emograph::write_text_file(
      args.out, with_tool_echo(emograph::serialize_graph(graph), params));
  maybe_write_dot(graph, args.dot);

  ordered_json report;
  report["accepted"] = parsed.records.size();
  report["rejected"] = {{"missing_field", parsed.report.missing_field},
                        {"empty_text", parsed.report.empty_text},
                        {"duplicate", parsed.report.duplicate}};
  report["details"] = parsed.report.details;
  report["warnings"] = warnings;
  report["nodes"] = graph.node_count();
  report["edges"] = graph.edge_count();
  report["tool"] = tool_echo(params);
  if (!args.report.empty())
    emograph::write_text_file(args.report, report.dump(2) + "\n");

  std::cout << "accepted " << parsed.records.size() << " records ("
            << parsed.report.total() << " rejected) -> "
            << graph.node_count() << " nodes / " << graph.edge_count()
            << " edges\n";
  for (const std::string& warning : warnings)
    std::cerr << "warning: " << warning << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// metrics / compare

int run_metrics(const std::string& graph_path, const std::string& out) {
  emograph::Graph graph = emograph::read_graph_file(graph_path);
  ordered_json j = metrics_json(graph);
  j["tool"] = tool_echo({{"command", "metrics"}});
  const std::string document = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << document;
  } else {
    emograph::write_text_file(out, document);
  }
  return kOk;
}

struct CompareArgs {
  std::string graph_a;
  std::string graph_b;
  int top_k = 50;
  std::string out;
  std::string out_table;
  std::string top_out_a;
  std::string top_out_b;
};

int run_compare(const CompareArgs& args) {
  emograph::Graph a = emograph::read_graph_file(args.graph_a);
  emograph::Graph b = emograph::read_graph_file(args.graph_b);

  ordered_json params{{"command", "compare"}, {"top_k", args.top_k}};
  ordered_json j;
  j["graph_a"] = metrics_json(a);
  j["graph_b"] = metrics_json(b);

  const double clustering_a = emograph::clustering_coefficient(a);
  const double clustering_b = emograph::clustering_coefficient(b);
  j["contrast"] = {
      {"clustering_zero_vs_positive",
       (clustering_a == 0.0) != (clustering_b == 0.0)},
      {"node_ratio", b.node_count() == 0
                         ? nullptr
                         : ordered_json(static_cast<double>(a.node_count()) /
                                        static_cast<double>(b.node_count()))},
      {"edge_ratio", b.edge_count() == 0
                         ? nullptr
                         : ordered_json(static_cast<double>(a.edge_count()) /
                                        static_cast<double>(b.edge_count()))}};

  emograph::Graph top_a =
      emograph::top_k_by_degree(a, static_cast<std::size_t>(args.top_k));
  emograph::Graph top_b =
      emograph::top_k_by_degree(b, static_cast<std::size_t>(args.top_k));
  j["top_k"] = {{"k", args.top_k},
                {"graph_a", metrics_json(top_a)},
                {"graph_b", metrics_json(top_b)}};
  j["tool"] = tool_echo(params);

  if (!args.top_out_a.empty())
    emograph::write_text_file(
        args.top_out_a,
        with_tool_echo(emograph::serialize_graph(top_a), params));
  if (!args.top_out_b.empty())
    emograph::write_text_file(
        args.top_out_b,
        with_tool_echo(emograph::serialize_graph(top_b), params));

  std::ostringstream table;
  auto row = [&table](const char* name, auto value_a, auto value_b) {
    table << name << "\t" << value_a << "\t" << value_b << "\n";
  };
  table << "metric\tgraph_a\tgraph_b\n";
  row("nodes", a.node_count(), b.node_count());
  row("edges", a.edge_count(), b.edge_count());
  row("average_degree", emograph::degree_stats(a).average_degree,
      emograph::degree_stats(b).average_degree);
  row("clustering", clustering_a, clustering_b);
  row("reciprocity", a.directed() ? std::to_string(emograph::reciprocity(a))
                                  : "n/a",
      b.directed() ? std::to_string(emograph::reciprocity(b)) : "n/a");
  row("components", emograph::weakly_connected_components(a),
      emograph::weakly_connected_components(b));
  std::cout << table.str();

  if (!args.out.empty()) emograph::write_text_file(args.out, j.dump(2) + "\n");
  if (!args.out_table.empty())
    emograph::write_text_file(args.out_table, table.str());
  return kOk;
}

// ---------------------------------------------------------------------------
// train / cross-eval

struct TrainArgs {
  std::string graph;
  int hidden = 16;
  double lr = 0.05;
  int epochs = 200;
  std::uint64_t split_seed = 1;
  std::uint64_t init_seed = 1;
  double train_fraction = 0.7;
  std::string layer = "gcn";
  bool no_edge_weighting = false;
  std::string out_model;
  std::string out_report;
};

int run_train(const TrainArgs& args) {
  emograph::Graph graph = emograph::read_graph_file(args.graph);
  emograph::TrainConfig config;
  config.hidden = args.hidden;
  config.lr = args.lr;
  config.epochs = args.epochs;
  config.split_seed = args.split_seed;
  config.init_seed = args.init_seed;
  config.train_fraction = args.train_fraction;
  config.layer_kind = emograph::layer_kind_from_string(args.layer);
  config.edge_weighting = !args.no_edge_weighting;

  emograph::TrainResult result = emograph::train(graph, config);

  ordered_json params{{"command", "train"},
                      {"hidden", args.hidden},
                      {"lr", args.lr},
                      {"epochs", args.epochs},
                      {"split_seed", args.split_seed},
                      {"init_seed", args.init_seed},
                      {"train_fraction", args.train_fraction},
                      {"layer", args.layer},
                      {"edge_weighting", !args.no_edge_weighting}};

  if (!args.out_model.empty()) {
    emograph::write_text_file(
        args.out_model,
        with_tool_echo(emograph::serialize_model(result.model), params));
  }
  if (!args.out_report.empty()) {
    emograph::write_text_file(
        args.out_report,
        with_tool_echo(emograph::serialize_train_report(result.report),
                       params));
  }

  std::printf("train accuracy %.4f | test accuracy %.4f | macro-F1 %.4f\n",
              result.report.train_accuracy, result.report.test.accuracy,
              result.report.test.macro_f1);
  std::cout << emograph::render_confusion_matrix(result.report.test);
  return kOk;
}

int run_cross_eval(const std::string& model_path, const std::string& graph_path,
                   const std::string& out) {
  emograph::GcnModel model = emograph::read_model_file(model_path);
  emograph::Graph graph = emograph::read_graph_file(graph_path);
  emograph::EvalMetrics metrics = emograph::cross_domain_eval(model, graph);

  ordered_json j = eval_metrics_json(metrics);
  j["tool"] = tool_echo({{"command", "cross-eval"}});
  const std::string document = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << document;
  } else {
    emograph::write_text_file(out, document);
    std::printf("cross-domain accuracy %.4f | macro-F1 %.4f\n",
                metrics.accuracy, metrics.macro_f1);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"emograph: emotion diffusion simulation and analysis toolkit"};
  app.set_version_flag("--version", emograph::kVersion);
  app.require_subcommand(1);
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON config file; flags override its values");

  GenGraphArgs gen;
  CLI::App* gen_cmd =
      app.add_subcommand("gen-graph", "Generate an attributed synthetic graph");
  gen_cmd->add_option("--nodes", gen.nodes, "Node count (ER mode)");
  gen_cmd->add_option("--edge-prob", gen.edge_prob, "Edge probability (ER mode)")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--chains", gen.chains,
                      "Reply-chain count (chain mode when > 0)");
  gen_cmd->add_option("--chain-len", gen.chain_len, "Nodes per chain");
  gen_cmd->add_flag("--attach-root", gen.attach_root,
                    "Join all chains under a shared root node");
  gen_cmd->add_option("--seed", gen.seed, "Structure seed");
  gen_cmd->add_option("--attr-seed", gen.attr_seed,
                      "Attribute seed (0 derives from --seed)");
  gen_cmd->add_option("--dist", gen.dist,
                      "Emotion weights positive,neutral,negative");
  gen_cmd->add_option("--out", gen.out, "Output graph JSON")->required();
  gen_cmd->add_option("--dot", gen.dot, "Also write a DOT rendering");

  SimulateArgs sim;
  CLI::App* sim_cmd =
      app.add_subcommand("simulate", "Run one seeded propagation simulation");
  sim_cmd->add_option("--graph", sim.graph, "Input graph JSON")->required();
  sim_cmd->add_option("--strategy", sim.strategy, "random|theory|eic")
      ->check(CLI::IsMember({"random", "theory", "eic"}));
  sim_cmd->add_option("--seed-node", sim.seed_node, "Seed node id")->required();
  sim_cmd->add_option("--rounds", sim.rounds, "Maximum rounds")
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--rng-seed", sim.rng_seed, "Simulation rng seed");
  sim_cmd->add_option("--p-fixed", sim.p_fixed, "Random strategy probability");
  sim_cmd->add_option("--neutral-intensity", sim.neutral_intensity,
                      "Theory neutral intensity");
  sim_cmd->add_option("--base-p", sim.base_p, "eIC base probability");
  sim_cmd->add_option("--out", sim.out, "Output trace JSONL")->required();

  BatchArgs batch;
  CLI::App* batch_cmd = app.add_subcommand(
      "batch", "Batch-compare the three strategies over seeded runs");
  batch_cmd->add_option("--runs", batch.runs, "Runs per strategy")
      ->check(CLI::PositiveNumber);
  batch_cmd->add_option("--nodes", batch.nodes, "Nodes per generated graph");
  batch_cmd->add_option("--edge-prob", batch.edge_prob, "Edge probability")
      ->check(CLI::Range(0.0, 1.0));
  batch_cmd->add_option("--rounds", batch.rounds, "Maximum rounds per run");
  batch_cmd->add_option("--rng-seed", batch.rng_seed, "Master seed");
  batch_cmd->add_option("--dist", batch.dist,
                        "Emotion weights positive,neutral,negative");
  batch_cmd->add_option("--p-fixed", batch.p_fixed, "Random probability");
  batch_cmd->add_option("--neutral-intensity", batch.neutral_intensity,
                        "Theory neutral intensity");
  batch_cmd->add_option("--base-p", batch.base_p, "eIC base probability");
  batch_cmd->add_option("--out", batch.out, "Summary JSON output");
  batch_cmd->add_option("--table", batch.table, "Plain-text table output");
  batch_cmd->add_flag("--assert-ordering", batch.assert_ordering,
                      "Exit nonzero unless random > theory > eic");

  LlmDiffuseArgs llm;
  CLI::App* llm_cmd =
      app.add_subcommand("llm-diffuse", "Run LLM-driven emotion contagion");
  llm_cmd->add_option("--graph", llm.graph, "Input graph JSON")->required();
  llm_cmd->add_option("--provider", llm.provider, "mock|http")
      ->check(CLI::IsMember({"mock", "http"}));
  llm_cmd->add_option("--script", llm.script, "Mock script JSONL");
  llm_cmd->add_option("--seed-node", llm.seed_node, "Seed node id")->required();
  llm_cmd->add_option("--rounds", llm.rounds, "Diffusion rounds")
      ->check(CLI::PositiveNumber);
  llm_cmd->add_option("--rng-seed", llm.rng_seed, "Provider seed");
  llm_cmd->add_option("--tone-policy", llm.tone_policy,
                      "current|seed tone instruction policy")
      ->check(CLI::IsMember({"current", "seed"}));
  llm_cmd->add_option("--mock-persistence", llm.mock_persistence,
                      "Probability a synthesized reply follows the tone")
      ->check(CLI::Range(0.0, 1.0));
  llm_cmd->add_option("--mock-drift", llm.mock_drift,
                      "Drift weights positive,neutral,negative");
  llm_cmd->add_option("--model", llm.model, "Model name for the http provider");
  llm_cmd->add_option("--max-in-flight", llm.max_in_flight,
                      "Concurrent provider requests per round")
      ->check(CLI::PositiveNumber);
  llm_cmd->add_option("--out-trace", llm.out_trace, "Trace JSONL output");
  llm_cmd->add_option("--out-graph", llm.out_graph, "Diffusion graph output");
  llm_cmd->add_option("--out-report", llm.out_report,
                      "Shares and transition-matrix JSON output");
  llm_cmd->add_option("--dot", llm.dot, "DOT rendering of the diffusion graph");

  IngestArgs ingest;
  CLI::App* ingest_cmd = app.add_subcommand(
      "ingest", "Build the real interaction graph from a record file");
  ingest_cmd->add_option("--input", ingest.input, "Record file")->required();
  ingest_cmd->add_option("--format", ingest.format, "csv|jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  ingest_cmd->add_flag("--trust-external", ingest.trust_external,
                       "Prefer labels present in the file");
  ingest_cmd->add_option("--out", ingest.out, "Output graph JSON")->required();
  ingest_cmd->add_option("--report", ingest.report, "Rejection report JSON");
  ingest_cmd->add_option("--dot", ingest.dot, "DOT rendering");

  std::string metrics_graph;
  std::string metrics_out;
  CLI::App* metrics_cmd =
      app.add_subcommand("metrics", "Structural metrics of a graph file");
  metrics_cmd->add_option("--graph", metrics_graph, "Input graph JSON")
      ->required();
  metrics_cmd->add_option("--out", metrics_out, "Metrics JSON output");

  CompareArgs compare;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "Side-by-side structural comparison of two graphs");
  compare_cmd->add_option("--graph-a", compare.graph_a, "First graph")
      ->required();
  compare_cmd->add_option("--graph-b", compare.graph_b, "Second graph")
      ->required();
  compare_cmd->add_option("--top-k", compare.top_k,
                          "Active-user subgraph size")
      ->check(CLI::PositiveNumber);
  compare_cmd->add_option("--out", compare.out, "Comparison JSON output");
  compare_cmd->add_option("--out-table", compare.out_table,
                          "Plain-text table output");
  compare_cmd->add_option("--top-out-a", compare.top_out_a,
                          "Top-k subgraph of graph A");
  compare_cmd->add_option("--top-out-b", compare.top_out_b,
                          "Top-k subgraph of graph B");

  TrainArgs train_args;
  CLI::App* train_cmd =
      app.add_subcommand("train", "Train the emotion-state GCN on a graph");
  train_cmd->add_option("--graph", train_args.graph, "Input graph JSON")
      ->required();
  train_cmd->add_option("--hidden", train_args.hidden, "Hidden width")
      ->check(CLI::PositiveNumber);
  train_cmd->add_option("--lr", train_args.lr, "Learning rate");
  train_cmd->add_option("--epochs", train_args.epochs, "Training epochs")
      ->check(CLI::PositiveNumber);
  train_cmd->add_option("--split-seed", train_args.split_seed, "Split seed");
  train_cmd->add_option("--init-seed", train_args.init_seed, "Init seed");
  train_cmd->add_option("--train-fraction", train_args.train_fraction,
                        "Per-class train fraction");
  train_cmd->add_option("--layer", train_args.layer, "gcn|mean-aggregate")
      ->check(CLI::IsMember({"gcn", "mean-aggregate"}));
  train_cmd->add_flag("--no-edge-weighting", train_args.no_edge_weighting,
                      "Ignore edge weights and kinds in the adjacency");
  train_cmd->add_option("--out-model", train_args.out_model, "Model JSON");
  train_cmd->add_option("--out-report", train_args.out_report, "Report JSON");

  std::string cross_model;
  std::string cross_graph;
  std::string cross_out;
  CLI::App* cross_cmd = app.add_subcommand(
      "cross-eval", "Evaluate a fitted model on another graph");
  cross_cmd->add_option("--model", cross_model, "Model JSON")->required();
  cross_cmd->add_option("--graph", cross_graph, "Graph JSON")->required();
  cross_cmd->add_option("--out", cross_out, "Metrics JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return kOk;  // --help / --version
    std::cerr << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (gen_cmd->parsed()) return run_gen_graph(gen);
    if (sim_cmd->parsed()) return run_simulate(sim);
    if (batch_cmd->parsed()) return run_batch(batch);
    if (llm_cmd->parsed()) return run_llm_diffuse(llm);
    if (ingest_cmd->parsed()) return run_ingest(ingest);
    if (metrics_cmd->parsed()) return run_metrics(metrics_graph, metrics_out);
    if (compare_cmd->parsed()) return run_compare(compare);
    if (train_cmd->parsed()) return run_train(train_args);
    if (cross_cmd->parsed())
      return run_cross_eval(cross_model, cross_graph, cross_out);
  } catch (const ArgumentError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const ContractError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kContractError;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIoError;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return kUsageError;
}
