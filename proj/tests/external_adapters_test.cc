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

#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "gtest/gtest.h"
#include "support/test_support.h"
#include "vforge/error.h"
#include "vforge/negation_attack.h"

namespace vforge {
namespace {

using namespace std::chrono_literals;
using test::MockServer;

ClientOptions Fast() {
  ClientOptions o;
  o.timeout = 2000ms;
  o.initial_backoff = 5ms;
  return o;
}

template <typename Fn>
void ExpectCode(ErrorCode code, Fn fn, std::int64_t detail = -1) {
  try {
    fn();
    ADD_FAILURE() << "expected " << ErrorCodeName(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
    if (detail >= 0) {
      EXPECT_EQ(e.detail(), detail);
    }
  }
}

void Reply(httplib::Response& res, const Json& j, int status = 200) {
  res.status = status;
  res.set_content(j.dump(), "application/json");
}

TEST(JsonHttpClientTest, RejectsUnusableUrls) {
  ExpectCode(ErrorCode::kBadConfig, [] { JsonHttpClient("https://example.com"); });
  ExpectCode(ErrorCode::kBadConfig, [] { JsonHttpClient("not a url"); });
  ExpectCode(ErrorCode::kBadConfig, [] { JsonHttpClient(""); });
}

TEST(GenerateTest, EchoesCannedTextAndSendsFields) {
  Json seen;
  std::string header_id;
  std::string auth;
  MockServer server([&](httplib::Server& s) {
    s.Post("/generate", [&](const httplib::Request& req, httplib::Response& res) {
      seen = Json::parse(req.body);
      header_id = req.get_header_value("X-Request-Id");
      auth = req.get_header_value("Authorization");
      Reply(res, {{"text", " It rained. Then it stopped."}});
    });
  });
  ClientOptions o = Fast();
  o.token = "secret";
  JsonHttpClient client(server.url(), o);
  const std::string text = Generate(client, GeneratorRequest{"Prompt.", 3, 0.8, 40});
  EXPECT_EQ(text, " It rained. Then it stopped.");
  EXPECT_EQ(seen["prompt"], "Prompt.");
  EXPECT_EQ(seen["max_sentences"], 3);
  EXPECT_DOUBLE_EQ(seen["temperature"].get<double>(), 0.8);
  EXPECT_EQ(seen["top_k"], 40);
  ASSERT_TRUE(seen.contains("request_id"));
  EXPECT_EQ(seen["request_id"].get<std::string>(), header_id);
  EXPECT_EQ(auth, "Bearer secret");
}

TEST(GenerateTest, BasePathPrefixIsKept) {
  MockServer server([&](httplib::Server& s) {
    s.Post("/v1/generate", [&](const httplib::Request&, httplib::Response& res) {
      Reply(res, {{"text", "ok"}});
    });
  });
  JsonHttpClient client(server.url() + "/v1", Fast());
  EXPECT_EQ(Generate(client, GeneratorRequest{"p"}), "ok");
}

TEST(GenerateTest, ServerErrorRetriedThreeTimes) {
  std::atomic<int> calls{0};
  MockServer server([&](httplib::Server& s) {
    s.Post("/generate", [&](const httplib::Request&, httplib::Response& res) {
      ++calls;
      Reply(res, {{"error", "boom"}}, 500);
    });
  });
  JsonHttpClient client(server.url(), Fast());
  ExpectCode(ErrorCode::kTransport, [&] { Generate(client, GeneratorRequest{"p"}); }, 500);
  EXPECT_EQ(calls.load(), 3);
}

TEST(GenerateTest, ClientErrorNotRetried) {
  std::atomic<int> calls{0};
  MockServer server([&](httplib::Server& s) {
    s.Post("/generate", [&](const httplib::Request&, httplib::Response& res) {
      ++calls;
      Reply(res, {{"error", "bad"}}, 400);
    });
  });
  JsonHttpClient client(server.url(), Fast());
  ExpectCode(ErrorCode::kTransport, [&] { Generate(client, GeneratorRequest{"p"}); }, 400);
  EXPECT_EQ(calls.load(), 1);
}

TEST(GenerateTest, RetryKeepsRequestIdAndRecovers) {
  std::mutex mu;
  std::vector<std::string> ids;
  MockServer server([&](httplib::Server& s) {
    s.Post("/generate", [&](const httplib::Request& req, httplib::Response& res) {
      std::lock_guard lock(mu);
      ids.push_back(Json::parse(req.body)["request_id"].get<std::string>());
      if (ids.size() < 3) {
        Reply(res, {{"error", "busy"}}, 503);
      } else {
        Reply(res, {{"text", "third time"}, {"request_id", ids.back()}});
      }
    });
  });
  JsonHttpClient client(server.url(), Fast());
  EXPECT_EQ(Generate(client, GeneratorRequest{"p"}), "third time");
  ASSERT_EQ(ids.size(), 3u);
  EXPECT_EQ(ids[0], ids[1]);
  EXPECT_EQ(ids[1], ids[2]);
  // A fresh call gets a fresh id.
  Generate(client, GeneratorRequest{"p"});
  EXPECT_NE(ids[3], ids[0]);
}

TEST(GenerateTest, MalformedReplies) {
  MockServer server([&](httplib::Server& s) {
    s.Post("/generate", [&](const httplib::Request& req, httplib::Response& res) {
      const std::string prompt = Json::parse(req.body)["prompt"];
      if (prompt == "missing") {
        Reply(res, {{"txt", "x"}});
      } else if (prompt == "garbage") {
        res.set_content("<html>", "text/html");
      } else if (prompt == "array") {
        res.set_content("[1]", "application/json");
      } else if (prompt == "number") {
        Reply(res, {{"text", 5}});
      } else {
        Reply(res, {{"text", "x"}, {"request_id", "someone-else"}});
      }
    });
  });
  JsonHttpClient client(server.url(), Fast());
  for (const char* p : {"missing", "garbage", "array", "number", "wrong-id"}) {
    SCOPED_TRACE(p);
    ExpectCode(ErrorCode::kMalformedResponse,
               [&] { Generate(client, GeneratorRequest{p}); });
  }
}

TEST(GenerateTest, SlowServerTimesOutAfterThreeAttempts) {
  std::atomic<int> calls{0};
  MockServer server([&](httplib::Server& s) {
    s.Post("/generate", [&](const httplib::Request&, httplib::Response& res) {
      ++calls;
      std::this_thread::sleep_for(700ms);
      Reply(res, {{"text", "late"}});
    });
  });
  ClientOptions o = Fast();
  o.timeout = 200ms;
  JsonHttpClient client(server.url(), o);
  ExpectCode(ErrorCode::kTimeout, [&] { Generate(client, GeneratorRequest{"p"}); });
  EXPECT_EQ(calls.load(), 3);
}

TEST(GenerateTest, RefusedConnectionIsTransportZero) {
  std::string url;
  {
    MockServer gone([](httplib::Server&) {});
    url = gone.url();
  }
  JsonHttpClient client(url, Fast());
  ExpectCode(ErrorCode::kTransport, [&] { Generate(client, GeneratorRequest{"p"}); }, 0);
}

TEST(ScoreTokensTest, UniformVocabulary) {
  MockServer server([&](httplib::Server& s) {
    s.Post("/score", [&](const httplib::Request& req, httplib::Response& res) {
      const Json body = Json::parse(req.body);
      Json probs = Json::array();
      for (std::size_t i = 0; i < body["candidates"].size(); ++i) probs.push_back(0.1);
      Reply(res, {{"probs", probs}});
    });
  });
  JsonHttpClient client(server.url(), Fast());
  const std::vector<std::string> ctx = {"the", "vote"};
  const std::vector<std::string> cands = {"not", "no", "was"};
  for (double p : ScoreTokens(client, ctx, cands)) EXPECT_DOUBLE_EQ(p, 0.1);
  ExpectCode(ErrorCode::kBadConfig, [&] { ScoreTokens(client, ctx, {}); });
}

TEST(ScoreTokensTest, HundredCandidatesKeepOrder) {
  MockServer server([&](httplib::Server& s) {
    s.Post("/score", [&](const httplib::Request& req, httplib::Response& res) {
      const Json body = Json::parse(req.body);
      Json probs = Json::array();
      for (const auto& c : body["candidates"]) {
        probs.push_back((std::stoi(c.get<std::string>().substr(1)) + 1) / 1000.0);
      }
      Reply(res, {{"probs", probs}});
    });
  });
  JsonHttpClient client(server.url(), Fast());
  std::vector<std::string> cands;
  for (int i = 0; i < 100; ++i) cands.push_back("c" + std::to_string(i));
  const auto probs = ScoreTokens(client, {}, cands);
  ASSERT_EQ(probs.size(), 100u);
  for (int i = 0; i < 100; ++i) EXPECT_DOUBLE_EQ(probs[i], (i + 1) / 1000.0);
}

TEST(ScoreTokensTest, BadProbabilitiesAndLengths) {
  MockServer server([&](httplib::Server& s) {
    s.Post("/score", [&](const httplib::Request& req, httplib::Response& res) {
      const std::string mode = Json::parse(req.body)["context"][0];
      if (mode == "big") {
        Reply(res, {{"probs", {1.5}}});
      } else if (mode == "zero") {
        Reply(res, {{"probs", {0.0}}});
      } else if (mode == "short") {
        Reply(res, {{"probs", Json::array()}});
      } else {
        Reply(res, {{"probs", {"x"}}});
      }
    });
  });
  JsonHttpClient client(server.url(), Fast());
  const std::vector<std::string> one = {"not"};
  auto call = [&](const char* mode) {
    const std::vector<std::string> ctx = {mode};
    return ScoreTokens(client, ctx, one);
  };
  ExpectCode(ErrorCode::kBadProbability, [&] { call("big"); });
  ExpectCode(ErrorCode::kBadProbability, [&] { call("zero"); });
  ExpectCode(ErrorCode::kMalformedResponse, [&] { call("short"); });
  ExpectCode(ErrorCode::kMalformedResponse, [&] { call("string"); });
}

TEST(RemoteScorerTest, SubstitutesForLocalScorerInModification) {
  const std::map<std::string, double> table = {
      {"not", 0.3}, {"no", 0.05}, {"rain", 0.2}, {"fell", 0.4}, {"the", 0.1}};
  std::atomic<int> calls{0};
  MockServer server([&](httplib::Server& s) {
    s.Post("/score", [&](const httplib::Request& req, httplib::Response& res) {
      ++calls;
      const Json body = Json::parse(req.body);
      Json probs = Json::array();
      for (const auto& c : body["candidates"]) {
        auto it = table.find(c.get<std::string>());
        probs.push_back(it == table.end() ? 0.01 : it->second);
      }
      Reply(res, {{"probs", probs}});
    });
  });
  JsonHttpClient client(server.url(), Fast());
  const RemoteScorer remote(client);
  const test::TableScorer local(table, 0.01);
  const Document doc = Tokenize(
      "The rain fell all night. It was not cold, but no one went out. The "
      "river rose and the rain fell again.");
  const ModificationConfig config{4, 100, 11};
  const ModifiedArticle a = ModifyArticle(doc, config, remote);
  const ModifiedArticle b = ModifyArticle(doc, config, local);
  EXPECT_EQ(a.modified.text(), b.modified.text());
  EXPECT_EQ(a.edits, b.edits);
  EXPECT_GT(calls.load(), 0);
}

TEST(DetectTest, AlwaysFakeAndValidation) {
  MockServer server([&](httplib::Server& s) {
    s.Post("/predict", [&](const httplib::Request& req, httplib::Response& res) {
      const std::string text = Json::parse(req.body)["text"];
      if (text == "unknown") {
        Reply(res, {{"label", "unknown"}});
      } else if (text == "noscore") {
        Reply(res, {{"label", "real"}});
      } else if (text == "badscore") {
        Reply(res, {{"label", "fake"}, {"score", 1.2}});
      } else {
        Reply(res, {{"label", "fake"}, {"score", 0.99}});
      }
    });
  });
  JsonHttpClient client(server.url(), Fast());
  const DetectorResponse r = Detect(client, "Some article.");
  EXPECT_EQ(r.label, Label::kFake);
  ASSERT_TRUE(r.score.has_value());
  EXPECT_DOUBLE_EQ(*r.score, 0.99);
  const DetectorResponse n = Detect(client, "noscore");
  EXPECT_EQ(n.label, Label::kReal);
  EXPECT_FALSE(n.score.has_value());
  ExpectCode(ErrorCode::kMalformedResponse, [&] { Detect(client, "unknown"); });
  ExpectCode(ErrorCode::kMalformedResponse, [&] { Detect(client, "badscore"); });
}

TEST(DetectBatchTest, ThousandTextsEightWayOrderRestored) {
  std::atomic<int> active{0};
  std::atomic<int> peak{0};
  MockServer server([&](httplib::Server& s) {
    s.Post("/predict", [&](const httplib::Request& req, httplib::Response& res) {
      const int now = ++active;
      int prev = peak.load();
      while (now > prev && !peak.compare_exchange_weak(prev, now)) {
      }
      const Json body = Json::parse(req.body);
      const int i = std::stoi(body["text"].get<std::string>());
      std::this_thread::sleep_for(std::chrono::microseconds(100 * (i % 7)));
      --active;
      Reply(res, {{"label", i % 3 == 0 ? "fake" : "real"},
                  {"score", i / 1000.0},
                  {"request_id", body["request_id"]}});
    });
  });
  JsonHttpClient client(server.url(), Fast());
  std::vector<std::string> texts;
  for (int i = 0; i < 1000; ++i) texts.push_back(std::to_string(i));
  const auto out = DetectBatch(client, texts, 8);
  ASSERT_EQ(out.size(), 1000u);
  for (int i = 0; i < 1000; ++i) {
    ASSERT_EQ(out[i].label, i % 3 == 0 ? Label::kFake : Label::kReal);
    ASSERT_DOUBLE_EQ(*out[i].score, i / 1000.0);
  }
  EXPECT_LE(peak.load(), 8);
  EXPECT_GE(peak.load(), 2);
}

TEST(DetectBatchTest, FirstFailureRethrown) {
  MockServer server([&](httplib::Server& s) {
    s.Post("/predict", [&](const httplib::Request& req, httplib::Response& res) {
      const std::string text = Json::parse(req.body)["text"];
      Reply(res, {{"label", text == "13" ? "maybe" : "real"}});
    });
  });
  JsonHttpClient client(server.url(), Fast());
  std::vector<std::string> texts;
  for (int i = 0; i < 40; ++i) texts.push_back(std::to_string(i));
  ExpectCode(ErrorCode::kMalformedResponse, [&] { DetectBatch(client, texts, 4); });
}

TEST(InFlightCapTest, ClientNeverExceedsLimit) {
  std::atomic<int> active{0};
  std::atomic<int> peak{0};
  MockServer server([&](httplib::Server& s) {
    s.Post("/predict", [&](const httplib::Request&, httplib::Response& res) {
      const int now = ++active;
      int prev = peak.load();
      while (now > prev && !peak.compare_exchange_weak(prev, now)) {
      }
      std::this_thread::sleep_for(5ms);
      --active;
      Reply(res, {{"label", "real"}});
    });
  });
  ClientOptions o = Fast();
  o.max_in_flight = 3;
  JsonHttpClient client(server.url(), o);
  std::vector<std::string> texts(60, "x");
  DetectBatch(client, texts, 8);
  EXPECT_LE(peak.load(), 3);
}

TEST(AdapterConfigTest, ReadsEnvironment) {
  test::ScopedEnv g("VFORGE_GENERATOR_URL", "http://127.0.0.1:1");
  test::ScopedEnv d("VFORGE_DETECTOR_URL", "http://127.0.0.1:2");
  test::ScopedEnv t("VFORGE_TOKEN", "tok");
  unsetenv("VFORGE_SCORER_URL");
  const AdapterConfig c = AdapterConfig::FromEnvironment();
  EXPECT_EQ(c.generator_url, "http://127.0.0.1:1");
  EXPECT_EQ(c.detector_url, "http://127.0.0.1:2");
  EXPECT_FALSE(c.scorer_url.has_value());
  EXPECT_EQ(c.token, "tok");
}

}  // namespace
}  // namespace vforge
