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

#include <doctest.h>

#include <cstdlib>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "emograph/errors.hpp"
#include "emograph/generators.hpp"
#include "emograph/graph_io.hpp"
#include "emograph/llm_diffusion.hpp"
#include "emograph/metrics.hpp"
#include "emograph/prompt.hpp"
#include "emograph/provider.hpp"
#include "emograph/sentiment.hpp"

using namespace emograph;

namespace {

const SentimentClassifier& classifier() {
  static const SentimentClassifier instance;
  return instance;
}

std::string fixture(const char* name) {
  return std::string(EMOGRAPH_FIXTURE_DIR) + "/" + name;
}

NodeState make_node(const char* id, EmotionLabel emotion, double cred,
                    double susc, int activation = 0) {
  NodeState state{.id = id,
                  .emotion = emotion,
                  .credibility = cred,
                  .susceptibility = susc};
  state.activation_round = activation;
  return state;
}

ReplyRecord make_record(int round, const char* source, const char* target,
                        EmotionLabel source_emotion, EmotionLabel label) {
  ReplyRecord record;
  record.round = round;
  record.source = source;
  record.target = target;
  record.source_emotion = source_emotion;
  record.score.label = label;
  return record;
}

// Fails for one specific target, succeeds elsewhere.
class PartialProvider : public GenerationProvider {
 public:
  explicit PartialProvider(NodeId failing) : failing_(std::move(failing)) {}
  std::string generate(const Prompt& prompt,
                       const GenerationOptions& options) override {
    if (prompt.receiver_id == failing_)
      throw ProviderError("injected failure");
    return fallback_.generate(prompt, options);
  }

 private:
  NodeId failing_;
  MockProvider fallback_;
};

}  // namespace

TEST_CASE("tone instruction table and prompt rendering") {
  CHECK(tone_instruction(EmotionLabel::Neutral) ==
        "Maintain a neutral tone in your reply.");

  NodeState sender = make_node("u", EmotionLabel::Positive, 0.82, 0.3);
  NodeState receiver = make_node("v", EmotionLabel::Neutral, 0.4, 0.37);
  Edge edge{.source = "u", .target = "v", .kind = EdgeKind::Reply};

  Prompt prompt = build_prompt(sender, receiver, edge, EmotionLabel::Neutral);
  const std::string text = prompt.render();
  CHECK(text.find("Maintain a neutral tone in your reply.") !=
        std::string::npos);
  CHECK(text.find("emotion=positive") != std::string::npos);
  CHECK(text.find("credibility=0.82") != std::string::npos);
  CHECK(text.find("id=v") != std::string::npos);
  CHECK(text.find("susceptibility=0.37") != std::string::npos);

  // Pure function: identical inputs, identical render and hash.
  Prompt again = build_prompt(sender, receiver, edge, EmotionLabel::Neutral);
  CHECK(again.render() == text);
  CHECK(again.hash() == prompt.hash());
}

TEST_CASE("prompts with different edge kinds differ only in the interaction "
          "line") {
  NodeState sender = make_node("u", EmotionLabel::Neutral, 0.5, 0.5);
  NodeState receiver = make_node("v", EmotionLabel::Neutral, 0.5, 0.5);
  Edge reply{.source = "u", .target = "v", .kind = EdgeKind::Reply};
  Edge mention{.source = "u", .target = "v", .kind = EdgeKind::Mention};

  std::istringstream a(
      build_prompt(sender, receiver, reply, EmotionLabel::Neutral).render());
  std::istringstream b(
      build_prompt(sender, receiver, mention, EmotionLabel::Neutral).render());
  std::string line_a;
  std::string line_b;
  int differing = 0;
  while (std::getline(a, line_a) && std::getline(b, line_b)) {
    if (line_a != line_b) {
      ++differing;
      CHECK(line_a.starts_with("Interaction:"));
    }
  }
  CHECK(differing == 1);
}

TEST_CASE("mock reply pools classify to their intended labels") {
  for (EmotionLabel label : kEmotionLabels) {
    for (const std::string& reply : MockProvider::reply_pool(label)) {
      CHECK(classifier().classify(reply).label == label);
    }
  }
}

TEST_CASE("mock provider: script lookup and synthesized fallback") {
  MockProvider provider;
  provider.add_entry(1, "a", "b", "scripted reply");

  NodeState sender = make_node("a", EmotionLabel::Neutral, 0.5, 0.5);
  NodeState receiver = make_node("b", EmotionLabel::Neutral, 0.5, 0.5);
  Edge edge{.source = "a", .target = "b"};
  Prompt prompt = build_prompt(sender, receiver, edge, EmotionLabel::Neutral);

  GenerationOptions options;
  CHECK(provider.generate(prompt, options) == "scripted reply");

  // Hash-keyed entries win over synthesis too.
  MockProvider hashed;
  hashed.add_hash_entry(prompt.hash(), "hash reply");
  CHECK(hashed.generate(prompt, options) == "hash reply");

  // Misses synthesize a pure function of (prompt, seed).
  MockProvider synth;
  const std::string first = synth.generate(prompt, options);
  CHECK(synth.generate(prompt, options) == first);
  GenerationOptions other_seed;
  other_seed.seed = 99;
  const std::string tone_following = synth.generate(prompt, other_seed);
  CHECK(classifier().classify(tone_following).label == EmotionLabel::Neutral);
}

TEST_CASE("the star fixture reproduces the first-round positivity bias") {
  Graph graph = read_graph_file(fixture("llm_star_graph.json"));
  MockProvider provider = MockProvider::from_script(
      fixture("llm_star_script.jsonl"));

  LlmTrace trace = run_llm_diffusion(graph, "31", 2, provider, classifier(),
                                     TonePolicy::CurrentLabel, 31);

  // 31 replies in round 1, then one reply per activated neighbor.
  std::size_t round1 = 0;
  std::size_t round2 = 0;
  for (const ReplyRecord& record : trace.records) {
    if (record.round == 1) ++round1;
    if (record.round == 2) ++round2;
  }
  CHECK(round1 == 31);
  CHECK(round2 == 31);

  auto shares = positivity_share_by_round(trace);
  CHECK(shares.at(1)[emotion_index(EmotionLabel::Positive)] ==
        doctest::Approx(26.0 / 31.0));
  CHECK(shares.at(1)[emotion_index(EmotionLabel::Neutral)] ==
        doctest::Approx(5.0 / 31.0));
  CHECK(shares.at(1)[emotion_index(EmotionLabel::Negative)] == 0.0);
  CHECK(shares.at(2)[emotion_index(EmotionLabel::Positive)] == 1.0);

  // Diffusion graph is a tree rooted at the seed: structural findings.
  const Graph& result = trace.diffusion_graph;
  CHECK(result.node_count() == 63);
  CHECK(result.edge_count() == 62);
  CHECK(reciprocity(result) == 0.0);
  CHECK(clustering_coefficient(result) == 0.0);
  CHECK(weakly_connected_components(result) == 1);

  // Determinism end to end.
  MockProvider provider2 = MockProvider::from_script(
      fixture("llm_star_script.jsonl"));
  LlmTrace again = run_llm_diffusion(graph, "31", 2, provider2, classifier(),
                                     TonePolicy::CurrentLabel, 31);
  CHECK(serialize_llm_trace(again) == serialize_llm_trace(trace));
}

TEST_CASE("diffusion basics: isolated seed, bad arguments") {
  Graph graph(/*directed=*/true);
  graph.add_node(make_node("lone", EmotionLabel::Neutral, 0.5, 0.5));
  MockProvider provider;
  LlmTrace trace = run_llm_diffusion(graph, "lone", 3, provider, classifier(),
                                     TonePolicy::CurrentLabel, 1);
  CHECK(trace.records.empty());
  CHECK(trace.diffusion_graph.node_count() == 1);
  CHECK_THROWS_AS(positivity_share_by_round(trace), ContractError);

  CHECK_THROWS_AS(run_llm_diffusion(graph, "lone", 0, provider, classifier(),
                                    TonePolicy::CurrentLabel, 1),
                  ArgumentError);
  CHECK_THROWS_AS(run_llm_diffusion(graph, "ghost", 1, provider, classifier(),
                                    TonePolicy::CurrentLabel, 1),
                  ArgumentError);
}

TEST_CASE("each node is activated by exactly one reply on fresh node sets") {
  Graph graph = generate_er_graph(20, 0.3, 8);
  init_node_attributes(graph, EmotionDistribution{}, 9);
  MockSynthesis synthesis;
  synthesis.tone_persistence = 0.6;
  synthesis.drift_weights = {2.0, 1.0, 1.0};
  MockProvider provider(synthesis);

  LlmTrace trace = run_llm_diffusion(graph, "0", 6, provider, classifier(),
                                     TonePolicy::CurrentLabel, 4);
  std::set<NodeId> activated;
  for (const ReplyRecord& record : trace.records) {
    CHECK(activated.insert(record.target).second);
    CHECK(trace.diffusion_graph.node(record.target).emotion ==
          record.score.label);
  }

  auto shares = positivity_share_by_round(trace);
  for (const auto& [round, fractions] : shares) {
    CHECK(fractions[0] + fractions[1] + fractions[2] ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("provider failures are recorded per edge and diffusion continues") {
  Graph graph = read_graph_file(fixture("llm_star_graph.json"));

  PartialProvider partial("n05");
  LlmTrace trace = run_llm_diffusion(graph, "31", 1, partial, classifier(),
                                     TonePolicy::CurrentLabel, 2);
  CHECK(trace.records.size() == 30);  // 31 neighbors minus the failing one
  REQUIRE(trace.errors.size() == 1);
  CHECK(trace.errors[0].find("n05") != std::string::npos);

  FailingProvider failing;
  LlmTrace dead = run_llm_diffusion(graph, "31", 3, failing, classifier(),
                                    TonePolicy::CurrentLabel, 2);
  CHECK(dead.records.empty());
  CHECK(dead.errors.size() == 32);  // 31 edge failures + early-stop note
  CHECK(dead.errors.back().find("stopping early") != std::string::npos);
}

TEST_CASE("concurrent request issue commits in deterministic order") {
  Graph graph = read_graph_file(fixture("llm_star_graph.json"));
  MockProvider a = MockProvider::from_script(fixture("llm_star_script.jsonl"));
  MockProvider b = MockProvider::from_script(fixture("llm_star_script.jsonl"));
  LlmTrace sequential = run_llm_diffusion(
      graph, "31", 2, a, classifier(), TonePolicy::CurrentLabel, 31, 1);
  LlmTrace parallel = run_llm_diffusion(
      graph, "31", 2, b, classifier(), TonePolicy::CurrentLabel, 31, 8);
  CHECK(serialize_llm_trace(sequential) == serialize_llm_trace(parallel));
}

TEST_CASE("transition matrix") {
  SUBCASE("tone-preserving trace gives the identity") {
    LlmTrace trace;
    trace.records.push_back(make_record(1, "a", "b", EmotionLabel::Positive,
                                        EmotionLabel::Positive));
    trace.records.push_back(make_record(1, "a", "c", EmotionLabel::Neutral,
                                        EmotionLabel::Neutral));
    trace.records.push_back(make_record(1, "a", "d", EmotionLabel::Negative,
                                        EmotionLabel::Negative));
    TransitionMatrix matrix = sentiment_transition_matrix(trace);
    for (int r = 0; r < 3; ++r) {
      CHECK(matrix.observed[r]);
      for (int c = 0; c < 3; ++c)
        CHECK(matrix.rows[r][c] == (r == c ? 1.0 : 0.0));
    }
  }

  SUBCASE("all-positive outputs make every observed row (1,0,0)") {
    LlmTrace trace;
    trace.records.push_back(make_record(1, "a", "b", EmotionLabel::Neutral,
                                        EmotionLabel::Positive));
    trace.records.push_back(make_record(1, "a", "c", EmotionLabel::Negative,
                                        EmotionLabel::Positive));
    trace.records.push_back(make_record(2, "b", "d", EmotionLabel::Positive,
                                        EmotionLabel::Positive));
    TransitionMatrix matrix = sentiment_transition_matrix(trace);
    for (int r = 0; r < 3; ++r) {
      if (matrix.observed[r]) CHECK(matrix.rows[r][0] == 1.0);
    }
  }

  SUBCASE("rows always sum to 1") {
    Graph graph = generate_er_graph(15, 0.4, 3);
    init_node_attributes(graph, EmotionDistribution{}, 4);
    MockSynthesis synthesis;
    synthesis.tone_persistence = 0.5;
    synthesis.drift_weights = {1.0, 1.0, 1.0};
    MockProvider provider(synthesis);
    LlmTrace trace = run_llm_diffusion(graph, "1", 5, provider, classifier(),
                                       TonePolicy::CurrentLabel, 6);
    TransitionMatrix matrix = sentiment_transition_matrix(trace);
    for (int r = 0; r < 3; ++r) {
      CHECK(matrix.rows[r][0] + matrix.rows[r][1] + matrix.rows[r][2] ==
            doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("compare_diffusion") {
  // Chain seed -> B -> C -> D as three rounds of one reply each.
  LlmTrace chain;
  chain.records.push_back(make_record(1, "A", "B", EmotionLabel::Neutral,
                                      EmotionLabel::Neutral));
  chain.records.push_back(make_record(2, "B", "C", EmotionLabel::Neutral,
                                      EmotionLabel::Neutral));
  chain.records.push_back(make_record(3, "C", "D", EmotionLabel::Neutral,
                                      EmotionLabel::Neutral));

  SUBCASE("a trace against itself has zero deltas") {
    DiffusionComparison same = compare_diffusion(chain, chain);
    CHECK(same.depth_delta == 0);
    CHECK(same.breadth_delta == 0);
    CHECK(same.drift_delta == 0.0);
    CHECK(same.a.depth == 3);
    CHECK(same.a.breadth == 3);
  }

  SUBCASE("neutral-to-positive drift measures 2 in L1") {
    LlmTrace drifted;
    drifted.records.push_back(make_record(1, "A", "B", EmotionLabel::Neutral,
                                          EmotionLabel::Neutral));
    drifted.records.push_back(make_record(2, "B", "C", EmotionLabel::Neutral,
                                          EmotionLabel::Positive));
    drifted.records.push_back(make_record(3, "C", "D", EmotionLabel::Positive,
                                          EmotionLabel::Positive));
    DiffusionComparison comparison = compare_diffusion(drifted, chain);
    CHECK(comparison.a.drift == doctest::Approx(2.0));
    CHECK(comparison.b.drift == 0.0);
    CHECK(comparison.drift_delta == doctest::Approx(2.0));
  }

  SUBCASE("empty traces are rejected") {
    LlmTrace empty;
    CHECK_THROWS_AS(compare_diffusion(empty, chain), ContractError);
  }
}

TEST_CASE("http provider: request shape, auth header and error paths") {
  struct RecordingTransport : HttpTransport {
    HttpResponse response{200, R"({"choices":[{"message":{"content":"hi"}}]})"};
    std::string last_url;
    std::vector<std::pair<std::string, std::string>> last_headers;
    std::string last_body;
    HttpResponse post(
        const std::string& url,
        const std::vector<std::pair<std::string, std::string>>& headers,
        const std::string& body) override {
      last_url = url;
      last_headers = headers;
      last_body = body;
      return response;
    }
  };

  auto transport = std::make_shared<RecordingTransport>();
  HttpProviderConfig config;
  config.url = "http://localhost:9999/v1/chat/completions";
  config.api_key = "secret-key";
  config.model = "deepseek-chat";
  HttpChatProvider provider(config, transport);

  NodeState sender = make_node("u", EmotionLabel::Neutral, 0.5, 0.5);
  NodeState receiver = make_node("v", EmotionLabel::Neutral, 0.5, 0.5);
  Edge edge{.source = "u", .target = "v"};
  Prompt prompt = build_prompt(sender, receiver, edge, EmotionLabel::Neutral);

  GenerationOptions options;
  options.temperature = 0.0;
  options.max_tokens = 128;
  CHECK(provider.generate(prompt, options) == "hi");

  CHECK(transport->last_url == config.url);
  bool has_auth = false;
  for (const auto& [name, value] : transport->last_headers) {
    if (name == "Authorization") {
      has_auth = true;
      CHECK(value == "Bearer secret-key");
    }
  }
  CHECK(has_auth);

  auto body = nlohmann::json::parse(transport->last_body);
  CHECK(body["model"] == "deepseek-chat");
  CHECK(body["temperature"] == 0.0);
  CHECK(body["max_tokens"] == 128);
  REQUIRE(body["messages"].size() == 2);
  CHECK(body["messages"][0]["role"] == "system");
  CHECK(body["messages"][1]["role"] == "user");
  CHECK(std::string(body["messages"][1]["content"])
            .find("Maintain a neutral tone") != std::string::npos);

  transport->response = {429, "rate limited"};
  CHECK_THROWS_AS(provider.generate(prompt, options), ProviderError);
  transport->response = {200, "not json"};
  CHECK_THROWS_AS(provider.generate(prompt, options), ProviderError);
}

TEST_CASE("http provider configuration errors") {
  CHECK_THROWS_AS(HttpChatProvider{HttpProviderConfig{}}, ConfigError);
  HttpProviderConfig bad;
  bad.url = "ftp://example.com";
  CHECK_THROWS_AS(HttpChatProvider{bad}, ConfigError);

  unsetenv(kLlmUrlEnv);
  CHECK_THROWS_AS(HttpChatProvider::from_env(), ConfigError);
  setenv(kLlmUrlEnv, "http://localhost:8080/v1/chat/completions", 1);
  setenv(kLlmApiKeyEnv, "k", 1);
  HttpChatProvider provider = HttpChatProvider::from_env("m");
  CHECK(provider.config().model == "m");
  CHECK(provider.config().api_key == "k");
  unsetenv(kLlmUrlEnv);
  unsetenv(kLlmApiKeyEnv);
}

TEST_CASE("mock script files validate their lines") {
  CHECK_THROWS_AS(MockProvider::from_script_text("not json\n"), ParseError);
  CHECK_THROWS_AS(MockProvider::from_script_text(R"({"round":1})" "\n"),
                  ParseError);
  MockProvider ok = MockProvider::from_script_text(
      "# comment\n"
      R"({"round":1,"source":"a","target":"b","reply":"x"})" "\n");
  (void)ok;
}
