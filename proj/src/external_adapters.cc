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

#include "vforge/external_adapters.h"

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "httplib.h"
#include "vforge/error.h"

namespace vforge {
namespace {

std::optional<std::string> Env(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

bool Retryable(const Error& e) {
  if (e.code() == ErrorCode::kTimeout) return true;
  return e.code() == ErrorCode::kTransport &&
         (e.detail() == 0 || e.detail() >= 500);
}

// Releases an in-flight slot on scope exit.
class SlotGuard {
 public:
  explicit SlotGuard(std::counting_semaphore<>& sem) : sem_(sem) {
    sem_.acquire();
  }
  ~SlotGuard() { sem_.release(); }
  SlotGuard(const SlotGuard&) = delete;
  SlotGuard& operator=(const SlotGuard&) = delete;

 private:
  std::counting_semaphore<>& sem_;
};

std::ptrdiff_t SemaphoreCount(std::size_t n) {
  return static_cast<std::ptrdiff_t>(n == 0 ? 1 : n);
}

}  // namespace

AdapterConfig AdapterConfig::FromEnvironment() {
  AdapterConfig c;
  c.generator_url = Env("VFORGE_GENERATOR_URL");
  c.scorer_url = Env("VFORGE_SCORER_URL");
  c.detector_url = Env("VFORGE_DETECTOR_URL");
  c.token = Env("VFORGE_TOKEN").value_or("");
  return c;
}

JsonHttpClient::JsonHttpClient(std::string_view base_url, ClientOptions options)
    : base_url_(base_url),
      options_(std::move(options)),
      in_flight_(SemaphoreCount(options_.max_in_flight)) {
  constexpr std::string_view kScheme = "http://";
  if (base_url.substr(0, kScheme.size()) != kScheme) {
    throw Error(ErrorCode::kBadConfig,
                "only http:// endpoints are supported: " + base_url_);
  }
  const std::size_t host_begin = kScheme.size();
  const std::size_t slash = base_url.find('/', host_begin);
  if (slash == host_begin) {
    throw Error(ErrorCode::kBadConfig, "endpoint has no host: " + base_url_);
  }
  origin_ = std::string(base_url.substr(0, slash));
  if (slash != std::string_view::npos) {
    path_prefix_ = std::string(base_url.substr(slash));
    while (!path_prefix_.empty() && path_prefix_.back() == '/') {
      path_prefix_.pop_back();
    }
  }
  if (options_.max_attempts < 1) options_.max_attempts = 1;

  std::random_device rd;
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%08x%08x", rd(), rd());
  id_prefix_ = buf;
}

std::string JsonHttpClient::NextRequestId() {
  return id_prefix_ + "-" + std::to_string(next_id_.fetch_add(1));
}

Json JsonHttpClient::Post(std::string_view path, Json body) {
  const std::string request_id = NextRequestId();
  body["request_id"] = request_id;
  const std::string payload = body.dump();
  const std::string full_path = path_prefix_ + std::string(path);

  httplib::Headers headers = {{"X-Request-Id", request_id}};
  if (!options_.token.empty()) {
    headers.emplace("Authorization", "Bearer " + options_.token);
  }
  const auto timeout = options_.timeout;

  auto attempt = [&]() -> Json {
    SlotGuard slot(in_flight_);
    httplib::Client client(origin_);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    const auto start = std::chrono::steady_clock::now();
    httplib::Result res =
        client.Post(full_path, headers, payload, "application/json");
    if (!res) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      const httplib::Error err = res.error();
      if (err == httplib::Error::ConnectionTimeout ||
          (err == httplib::Error::Read && elapsed >= timeout * 9 / 10)) {
        throw Error(ErrorCode::kTimeout,
                    "no response from " + origin_ + full_path + " within " +
                        std::to_string(timeout.count()) + " ms");
      }
      throw Error(ErrorCode::kTransport,
                  origin_ + full_path + ": " + httplib::to_string(err), 0);
    }
    if (res->status < 200 || res->status >= 300) {
      throw Error(ErrorCode::kTransport,
                  origin_ + full_path + " returned HTTP " +
                      std::to_string(res->status),
                  res->status);
    }
    Json parsed;
    try {
      parsed = Json::parse(res->body);
    } catch (const nlohmann::json::parse_error&) {
      throw Error(ErrorCode::kMalformedResponse,
                  origin_ + full_path + " returned invalid JSON");
    }
    if (!parsed.is_object()) {
      throw Error(ErrorCode::kMalformedResponse,
                  origin_ + full_path + " returned a non-object");
    }
    if (auto echo = parsed.find("request_id");
        echo != parsed.end() && *echo != request_id) {
      throw Error(ErrorCode::kMalformedResponse,
                  origin_ + full_path + " answered a different request");
    }
    return parsed;
  };

  auto backoff = options_.initial_backoff;
  for (int i = 1;; ++i) {
    try {
      return attempt();
    } catch (const Error& e) {
      if (i >= options_.max_attempts || !Retryable(e)) throw;
    }
    std::this_thread::sleep_for(backoff);
    backoff *= 2;
  }
}

std::string Generate(JsonHttpClient& client, const GeneratorRequest& request) {
  request.Validate();
  Json body = Json::object();
  body["prompt"] = request.prompt;
  body["max_sentences"] = request.max_sentences;
  body["temperature"] = request.temperature;
  body["top_k"] = request.top_k;
  const Json reply = client.Post("/generate", std::move(body));
  auto text = reply.find("text");
  if (text == reply.end() || !text->is_string()) {
    throw Error(ErrorCode::kMalformedResponse, "/generate reply lacks \"text\"");
  }
  return text->get<std::string>();
}

std::vector<double> ScoreTokens(JsonHttpClient& client,
                                std::span<const std::string> context,
                                std::span<const std::string> candidates) {
  if (candidates.empty()) {
    throw Error(ErrorCode::kBadConfig, "no candidates to score");
  }
  Json body = Json::object();
  body["context"] = Json(std::vector<std::string>(context.begin(), context.end()));
  body["candidates"] =
      Json(std::vector<std::string>(candidates.begin(), candidates.end()));
  const Json reply = client.Post("/score", std::move(body));
  auto probs = reply.find("probs");
  if (probs == reply.end() || !probs->is_array()) {
    throw Error(ErrorCode::kMalformedResponse, "/score reply lacks \"probs\"");
  }
  if (probs->size() != candidates.size()) {
    throw Error(ErrorCode::kMalformedResponse,
                "/score returned " + std::to_string(probs->size()) +
                    " probabilities for " + std::to_string(candidates.size()) +
                    " candidates");
  }
  std::vector<double> out;
  out.reserve(probs->size());
  for (const Json& p : *probs) {
    if (!p.is_number()) {
      throw Error(ErrorCode::kMalformedResponse, "non-numeric probability");
    }
    const double v = p.get<double>();
    if (!(v > 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::kBadProbability,
                  "probability " + std::to_string(v) + " outside (0, 1]");
    }
    out.push_back(v);
  }
  return out;
}

DetectorResponse Detect(JsonHttpClient& client, std::string_view text) {
  Json body = Json::object();
  body["text"] = std::string(text);
  const Json reply = client.Post("/predict", std::move(body));
  auto label = reply.find("label");
  if (label == reply.end() || !label->is_string()) {
    throw Error(ErrorCode::kMalformedResponse, "/predict reply lacks \"label\"");
  }
  const auto parsed = ParseLabel(label->get<std::string>());
  if (!parsed) {
    throw Error(ErrorCode::kMalformedResponse,
                "unknown label \"" + label->get<std::string>() + "\"");
  }
  DetectorResponse out{*parsed, std::nullopt};
  if (auto score = reply.find("score"); score != reply.end() && !score->is_null()) {
    if (!score->is_number()) {
      throw Error(ErrorCode::kMalformedResponse, "non-numeric score");
    }
    const double v = score->get<double>();
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::kMalformedResponse,
                  "score " + std::to_string(v) + " outside [0, 1]");
    }
    out.score = v;
  }
  return out;
}

std::vector<DetectorResponse> DetectBatch(JsonHttpClient& client,
                                          std::span<const std::string> texts,
                                          std::size_t concurrency) {
  std::vector<DetectorResponse> results(texts.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mu;

  auto worker = [&] {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= texts.size()) return;
      try {
        results[i] = Detect(client, texts[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
      }
    }
  };
  const std::size_t workers =
      std::max<std::size_t>(1, std::min(concurrency, texts.size()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

std::string HttpGenerator::Generate(const GeneratorRequest& request) {
  return vforge::Generate(client_, request);
}

double RemoteScorer::NextTokenProb(std::span<const std::string> context,
                                   std::string_view candidate) const {
  const std::string c(candidate);
  return ScoreTokens(client_, context, std::span(&c, 1))[0];
}

std::vector<double> RemoteScorer::ScoreCandidates(
    std::span<const std::string> context,
    std::span<const std::string> candidates) const {
  return ScoreTokens(client_, context, candidates);
}

}  // namespace vforge
