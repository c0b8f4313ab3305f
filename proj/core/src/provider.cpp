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

#include "emograph/provider.hpp"

#include <cstdlib>
#include <sstream>

#ifdef EMOGRAPH_WITH_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>
#include <json.hpp>

#include "emograph/errors.hpp"
#include "emograph/graph_io.hpp"
#include "emograph/rng.hpp"

namespace emograph {

using ordered_json = nlohmann::ordered_json;

MockProvider MockProvider::from_script(const std::filesystem::path& path,
                                       MockSynthesis synthesis) {
  return from_script_text(read_text_file(path), synthesis);
}

MockProvider MockProvider::from_script_text(std::string_view jsonl,
                                            MockSynthesis synthesis) {
  MockProvider provider(synthesis);
  std::istringstream in{std::string(jsonl)};
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    ordered_json j;
    try {
      j = ordered_json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("mock script line " + std::to_string(line_number) +
                       " is not valid JSON: " + e.what());
    }
    try {
      const std::string reply = j.at("reply").get<std::string>();
      if (j.contains("prompt_hash")) {
        provider.add_hash_entry(j["prompt_hash"].get<std::string>(), reply);
      } else {
        provider.add_entry(j.at("round").get<int>(),
                           j.at("source").get<std::string>(),
                           j.at("target").get<std::string>(), reply);
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("mock script line " + std::to_string(line_number) +
                       " is missing fields: " + e.what());
    }
  }
  return provider;
}

void MockProvider::add_entry(int round, NodeId source, NodeId target,
                             std::string reply) {
  by_interaction_[{round, std::move(source), std::move(target)}] =
      std::move(reply);
}

void MockProvider::add_hash_entry(std::string prompt_hash, std::string reply) {
  by_hash_[std::move(prompt_hash)] = std::move(reply);
}

const std::vector<std::string>& MockProvider::reply_pool(EmotionLabel label) {
  static const std::vector<std::string> positive = {
      "This is wonderful news, thanks for sharing it.",
      "Great point, I really appreciate the insight.",
      "What a hopeful development, this made me smile.",
      "Love this, such good news for everyone involved.",
      "Brilliant work, the results look very promising.",
  };
  static const std::vector<std::string> neutral = {
      "Noted, I will read the full article later.",
      "Here is the source thread for anyone curious.",
      "It depends on the context of the report.",
      "The update was posted this morning, according to them.",
      "I saw a similar discussion in another thread.",
  };
  static const std::vector<std::string> negative = {
      "This is terrible news, I hate everything about it.",
      "What an awful mess, the whole thing is a disaster.",
      "Horrible reporting, this made me really angry.",
      "Sad and worrying, this will only cause more pain.",
      "I strongly dislike this, such a stupid decision.",
  };
  switch (label) {
    case EmotionLabel::Positive: return positive;
    case EmotionLabel::Neutral: return neutral;
    case EmotionLabel::Negative: return negative;
  }
  return neutral;
}

std::string MockProvider::generate(const Prompt& prompt,
                                   const GenerationOptions& options) {
  auto interaction = by_interaction_.find(
      {prompt.thread_position, prompt.sender_id, prompt.receiver_id});
  if (interaction != by_interaction_.end()) return interaction->second;

  auto hashed = by_hash_.find(prompt.hash());
  if (hashed != by_hash_.end()) return hashed->second;

  // Synthesized fallback: pure function of (prompt, seed).
  Rng rng(derive_seed(options.seed, fnv1a64(prompt.render())));
  EmotionLabel label = prompt.tone;
  if (!rng.bernoulli(synthesis_.tone_persistence)) {
    label = emotion_from_index(
        static_cast<int>(rng.categorical(synthesis_.drift_weights)));
  }
  const auto& pool = reply_pool(label);
  return pool[rng.uniform_index(pool.size())];
}

std::string FailingProvider::generate(const Prompt&,
                                      const GenerationOptions&) {
  throw ProviderError("provider unavailable");
}

namespace {

class HttplibTransport : public HttpTransport {
 public:
  HttpResponse post(
      const std::string& url,
      const std::vector<std::pair<std::string, std::string>>& headers,
      const std::string& body) override {
    const std::size_t scheme_end = url.find("://");
    if (scheme_end == std::string::npos)
      throw ProviderError("endpoint URL has no scheme: " + url);
    const std::size_t path_start = url.find('/', scheme_end + 3);
    const std::string base =
        path_start == std::string::npos ? url : url.substr(0, path_start);
    const std::string path =
        path_start == std::string::npos ? "/" : url.substr(path_start);

    httplib::Client client(base);
    client.set_connection_timeout(30, 0);
    client.set_read_timeout(120, 0);
    httplib::Headers request_headers;
    for (const auto& [name, value] : headers)
      request_headers.emplace(name, value);

    auto result = client.Post(path, request_headers, body, "application/json");
    if (!result)
      throw ProviderError("transport failure: " +
                          httplib::to_string(result.error()));
    return {result->status, result->body};
  }
};

}  // namespace

std::shared_ptr<HttpTransport> make_httplib_transport() {
  return std::make_shared<HttplibTransport>();
}

HttpChatProvider::HttpChatProvider(HttpProviderConfig config,
                                   std::shared_ptr<HttpTransport> transport)
    : config_(std::move(config)), transport_(std::move(transport)) {
  if (config_.url.empty())
    throw ConfigError("chat endpoint URL is empty");
  if (!config_.url.starts_with("http://") &&
      !config_.url.starts_with("https://"))
    throw ConfigError("chat endpoint URL must be http(s): " + config_.url);
  if (transport_ == nullptr) transport_ = make_httplib_transport();
}

HttpChatProvider HttpChatProvider::from_env(std::string model) {
  const char* url = std::getenv(kLlmUrlEnv);
  if (url == nullptr || *url == '\0')
    throw ConfigError(std::string(kLlmUrlEnv) +
                      " is not set; required for the http provider");
  const char* key = std::getenv(kLlmApiKeyEnv);
  HttpProviderConfig config;
  config.url = url;
  config.api_key = key == nullptr ? "" : key;
  config.model = std::move(model);
  return HttpChatProvider(std::move(config));
}

std::string HttpChatProvider::generate(const Prompt& prompt,
                                       const GenerationOptions& options) {
  ordered_json request;
  request["model"] = config_.model;
  request["messages"] = ordered_json::array(
      {{{"role", "system"}, {"content", prompt.system_preamble}},
       {{"role", "user"},
        {"content", prompt.render().substr(prompt.system_preamble.size() + 1)}}});
  request["temperature"] = options.temperature;
  request["max_tokens"] = options.max_tokens;
  request["seed"] = options.seed;

  std::vector<std::pair<std::string, std::string>> headers;
  if (!config_.api_key.empty())
    headers.emplace_back("Authorization", "Bearer " + config_.api_key);

  const HttpResponse response =
      transport_->post(config_.url, headers, request.dump());
  if (response.status != 200)
    throw ProviderError("chat endpoint returned status " +
                        std::to_string(response.status) + ": " +
                        response.body.substr(0, 200));

  try {
    const auto doc = ordered_json::parse(response.body);
    return doc.at("choices").at(0).at("message").at("content")
        .get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ProviderError(std::string("malformed chat response: ") + e.what());
  }
}

}  // namespace emograph
