//
// Copyright 2026 The VForge Authors
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
//

// Clients for out-of-process models, JSON over HTTP:
//
//   POST /generate {prompt, max_sentences, temperature, top_k} -> {text}
//   POST /score    {context: [..], candidates: [..]}          -> {probs: [..]}
//   POST /predict  {text}                                     -> {label, score?}
//
// Every request body also carries a client-generated "request_id", repeated
// in the X-Request-Id header and kept across retries. Connection failures,
// 5xx statuses and timeouts are retried with exponential backoff, at most
// ClientOptions::max_attempts attempts in total. A reply that echoes a
// different request_id is rejected as malformed.

#ifndef VFORGE_EXTERNAL_ADAPTERS_H_
#define VFORGE_EXTERNAL_ADAPTERS_H_

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <semaphore>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vforge/dataset.h"
#include "vforge/generator.h"
#include "vforge/lm_scorer.h"

namespace vforge {

struct ClientOptions {
  std::chrono::milliseconds timeout{60'000};
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{200};
  std::size_t max_in_flight = 8;
  std::string token;  // sent as "Authorization: Bearer <token>" when set
};

// Endpoint URLs and token from VFORGE_GENERATOR_URL, VFORGE_SCORER_URL,
// VFORGE_DETECTOR_URL and VFORGE_TOKEN.
struct AdapterConfig {
  std::optional<std::string> generator_url;
  std::optional<std::string> scorer_url;
  std::optional<std::string> detector_url;
  std::string token;

  static AdapterConfig FromEnvironment();
};

// JSON POST client for one base URL ("http://host:port[/prefix]"). Shareable
// across threads; at most max_in_flight requests run at once.
class JsonHttpClient {
 public:
  // Throws kBadConfig for URLs it cannot use.
  JsonHttpClient(std::string_view base_url, ClientOptions options = {});
  JsonHttpClient(const JsonHttpClient&) = delete;
  JsonHttpClient& operator=(const JsonHttpClient&) = delete;

  // Throws kTransport (detail = HTTP status, 0 without a response), kTimeout
  // and kMalformedResponse (non-JSON or non-object body).
  Json Post(std::string_view path, Json body);

  const ClientOptions& options() const { return options_; }
  const std::string& base_url() const { return base_url_; }

 private:
  std::string NextRequestId();

  std::string base_url_;
  std::string origin_;  // scheme://host:port
  std::string path_prefix_;
  ClientOptions options_;
  std::counting_semaphore<> in_flight_;
  std::string id_prefix_;
  std::atomic<std::uint64_t> next_id_{0};
};

std::string Generate(JsonHttpClient& client, const GeneratorRequest& request);

// One probability in (0, 1] per candidate, in order. Throws kBadProbability
// for values outside that range and kMalformedResponse for a length mismatch.
std::vector<double> ScoreTokens(JsonHttpClient& client,
                                std::span<const std::string> context,
                                std::span<const std::string> candidates);

struct DetectorResponse {
  Label label = Label::kReal;
  std::optional<double> score;  // probability of fake
};

// Throws kMalformedResponse for labels other than real/fake or scores
// outside [0, 1].
DetectorResponse Detect(JsonHttpClient& client, std::string_view text);

// Detect() over many texts with `concurrency` workers; results follow input
// order. The first failure is rethrown after all workers stop.
std::vector<DetectorResponse> DetectBatch(JsonHttpClient& client,
                                          std::span<const std::string> texts,
                                          std::size_t concurrency);

class HttpGenerator final : public Generator {
 public:
  explicit HttpGenerator(JsonHttpClient& client) : client_(client) {}
  std::string Generate(const GeneratorRequest& request) override;

 private:
  JsonHttpClient& client_;
};

// Scorer backed by POST /score; sends the full context.
class RemoteScorer final : public Scorer {
 public:
  explicit RemoteScorer(JsonHttpClient& client) : client_(client) {}
  double NextTokenProb(std::span<const std::string> context,
                       std::string_view candidate) const override;
  std::vector<double> ScoreCandidates(
      std::span<const std::string> context,
      std::span<const std::string> candidates) const override;

 private:
  JsonHttpClient& client_;
};

}  // namespace vforge

#endif  // VFORGE_EXTERNAL_ADAPTERS_H_
