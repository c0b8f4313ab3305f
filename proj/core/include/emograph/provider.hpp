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

#ifndef EMOGRAPH_PROVIDER_HPP_
#define EMOGRAPH_PROVIDER_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "emograph/prompt.hpp"

namespace emograph {

struct GenerationOptions {
  int max_tokens = 256;
  double temperature = 0.0;  // pinned low for reproducibility
  std::uint64_t seed = 0;    // passed to providers that support seed pinning
};

// Capability contract for reply generation. Implementations must be safe to
// call from multiple threads at once.
class GenerationProvider {
 public:
  virtual ~GenerationProvider() = default;
  virtual std::string generate(const Prompt& prompt,
                               const GenerationOptions& options) = 0;
};

// Environment variables consumed by the HTTP provider.
inline constexpr const char* kLlmUrlEnv = "EMOGRAPH_LLM_URL";
inline constexpr const char* kLlmApiKeyEnv = "EMOGRAPH_LLM_API_KEY";

// Synthesis knobs for scripted-mock misses: with probability
// tone_persistence the reply follows the instructed tone; otherwise a label
// is drawn from drift_weights (class-index order). Replies come from fixed
// per-label sentence pools, so the whole path is a pure function of
// (prompt, seed).
struct MockSynthesis {
  double tone_persistence = 1.0;
  std::array<double, 3> drift_weights = {1.0, 0.0, 0.0};
};

// Deterministic provider for tests and offline runs. Script entries keyed by
// (round, source, target) or by prompt hash take precedence; anything else
// is synthesized.
class MockProvider : public GenerationProvider {
 public:
  MockProvider() = default;
  explicit MockProvider(MockSynthesis synthesis) : synthesis_(synthesis) {}

  // JSONL script: {"round":R,"source":S,"target":T,"reply":"..."} or
  // {"prompt_hash":"...","reply":"..."}.
  static MockProvider from_script(const std::filesystem::path& path,
                                  MockSynthesis synthesis = {});
  static MockProvider from_script_text(std::string_view jsonl,
                                       MockSynthesis synthesis = {});

  void add_entry(int round, NodeId source, NodeId target, std::string reply);
  void add_hash_entry(std::string prompt_hash, std::string reply);

  std::string generate(const Prompt& prompt,
                       const GenerationOptions& options) override;

  // The fixed sentence pool backing synthesized replies.
  static const std::vector<std::string>& reply_pool(EmotionLabel label);

 private:
  std::map<std::tuple<int, NodeId, NodeId>, std::string> by_interaction_;
  std::map<std::string, std::string> by_hash_;
  MockSynthesis synthesis_;
};

// Provider that always fails; used to exercise error paths.
class FailingProvider : public GenerationProvider {
 public:
  std::string generate(const Prompt&, const GenerationOptions&) override;
};

struct HttpResponse {
  int status = 0;
  std::string body;
};

// Transport seam so the chat client can be tested without sockets.
class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  // Throws ProviderError on transport failure.
  virtual HttpResponse post(
      const std::string& url,
      const std::vector<std::pair<std::string, std::string>>& headers,
      const std::string& body) = 0;
};

// cpp-httplib-backed transport.
std::shared_ptr<HttpTransport> make_httplib_transport();

struct HttpProviderConfig {
  std::string url;      // full chat-completion endpoint URL
  std::string api_key;  // optional bearer token
  std::string model = "default";
};

// JSON-over-HTTP chat-completion client. Request shape:
// {model, messages:[{role, content}], temperature, max_tokens, seed};
// the reply is the first choice's message content. Transport and status
// failures surface as ProviderError.
class HttpChatProvider : public GenerationProvider {
 public:
  HttpChatProvider(HttpProviderConfig config,
                   std::shared_ptr<HttpTransport> transport = nullptr);

  // Reads EMOGRAPH_LLM_URL / EMOGRAPH_LLM_API_KEY; throws ConfigError when
  // the URL is missing. Performs no network traffic.
  static HttpChatProvider from_env(std::string model = "default");

  std::string generate(const Prompt& prompt,
                       const GenerationOptions& options) override;

  const HttpProviderConfig& config() const { return config_; }

 private:
  HttpProviderConfig config_;
  std::shared_ptr<HttpTransport> transport_;
};

}  // namespace emograph

#endif  // EMOGRAPH_PROVIDER_HPP_
