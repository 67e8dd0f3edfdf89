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

#include "vforge/eval_harness.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "vforge/error.h"
#include "vforge/sampling.h"

namespace vforge {
namespace {

constexpr Label R = Label::kReal;
constexpr Label F = Label::kFake;

template <typename Fn>
void ExpectCode(ErrorCode code, Fn fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << ErrorCodeName(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

// Mann-Whitney pair statistic: P(score_fake > score_real) + 0.5 P(tie).
double PairAuc(const std::vector<double>& s, const std::vector<Label>& g) {
  double good = 0.0;
  double pairs = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (g[i] != F) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (g[j] != R) continue;
      pairs += 1.0;
      good += s[i] > s[j] ? 1.0 : (s[i] == s[j] ? 0.5 : 0.0);
    }
  }
  return good / pairs;
}

TEST(ConfusionTest, Examples) {
  const std::vector<Label> a = {F, R};
  EXPECT_EQ(Confusion(a, a), (ConfusionMatrix{1, 0, 0, 1}));
  const std::vector<Label> all_real(4, R);
  const std::vector<Label> all_fake(4, F);
  EXPECT_EQ(Confusion(all_real, all_fake).fn, 4u);
  // Hand tally: pairs (pred, gold).
  const std::vector<Label> p = {F, F, R, R, F, R, F, R};
  const std::vector<Label> g = {F, R, F, R, F, R, R, F};
  EXPECT_EQ(Confusion(p, g), (ConfusionMatrix{2, 2, 2, 2}));
  ExpectCode(ErrorCode::kLengthMismatch, [&] { Confusion(a, p); });
  ExpectCode(ErrorCode::kEmpty, [] { Confusion({}, {}); });
}

TEST(MetricsTest, HandComputedFixture) {
  const EvalReport r = Metrics(ConfusionMatrix{3, 1, 1, 5});
  EXPECT_DOUBLE_EQ(r.fake_precision, 0.75);
  EXPECT_DOUBLE_EQ(r.fake_recall, 0.75);
  EXPECT_DOUBLE_EQ(r.fake_f1, 0.75);
  EXPECT_DOUBLE_EQ(r.real_precision, 5.0 / 6.0);
  EXPECT_DOUBLE_EQ(r.real_recall, 5.0 / 6.0);
  EXPECT_NEAR(r.real_f1, 5.0 / 6.0, 1e-12);
  EXPECT_NEAR(r.macro_f1, (0.75 + 5.0 / 6.0) / 2.0, 1e-12);
  EXPECT_NEAR(r.macro_f1, 0.7917, 1e-4);
  EXPECT_DOUBLE_EQ(r.accuracy, 0.8);
}

TEST(MetricsTest, PerfectAndDegenerate) {
  const EvalReport p = Metrics(ConfusionMatrix{4, 0, 0, 6});
  for (double v : {p.fake_precision, p.fake_recall, p.fake_f1, p.real_precision,
                   p.real_recall, p.real_f1, p.macro_f1, p.accuracy}) {
    EXPECT_DOUBLE_EQ(v, 1.0);
  }
  const EvalReport z = Metrics(ConfusionMatrix{0, 0, 3, 7});
  EXPECT_DOUBLE_EQ(z.fake_precision, 0.0);
  EXPECT_DOUBLE_EQ(z.fake_recall, 0.0);
  EXPECT_DOUBLE_EQ(z.fake_f1, 0.0);
  EXPECT_DOUBLE_EQ(z.accuracy, 0.7);
  ExpectCode(ErrorCode::kEmpty, [] { Metrics(ConfusionMatrix{}); });
}

TEST(MetricsTest, FuzzedMatricesMatchFormulas) {
  Rng rng(21);
  for (int round = 0; round < 500; ++round) {
    ConfusionMatrix m{UniformIndex(rng, 30), UniformIndex(rng, 30),
                      UniformIndex(rng, 30), UniformIndex(rng, 30) + 1};
    const EvalReport r = Metrics(m);
    auto div = [](double a, double b) { return b == 0 ? 0.0 : a / b; };
    auto f1 = [&](double p, double q) { return div(2 * p * q, p + q); };
    const double fp = div(m.tp, m.tp + m.fp);
    const double fr = div(m.tp, m.tp + m.fn);
    const double rp = div(m.tn, m.tn + m.fn);
    const double rr = div(m.tn, m.tn + m.fp);
    ASSERT_NEAR(r.fake_precision, fp, 1e-12);
    ASSERT_NEAR(r.fake_recall, fr, 1e-12);
    ASSERT_NEAR(r.real_precision, rp, 1e-12);
    ASSERT_NEAR(r.real_recall, rr, 1e-12);
    ASSERT_NEAR(r.macro_f1, (f1(fp, fr) + f1(rp, rr)) / 2, 1e-12);
    ASSERT_NEAR(r.accuracy, div(m.tp + m.tn, m.total()), 1e-12);
  }
}

TEST(RocTest, Examples) {
  const std::vector<double> s = {0.9, 0.8, 0.3, 0.1};
  const std::vector<Label> g = {F, R, F, R};
  EXPECT_DOUBLE_EQ(Roc(s, g).auc, 0.75);
  const std::vector<double> sep = {0.9, 0.8, 0.2, 0.1};
  const std::vector<Label> gs = {F, F, R, R};
  EXPECT_DOUBLE_EQ(Roc(sep, gs).auc, 1.0);
  const std::vector<double> same(4, 0.4);
  EXPECT_DOUBLE_EQ(Roc(same, g).auc, 0.5);
  const std::vector<Label> one(4, F);
  ExpectCode(ErrorCode::kSingleClass, [&] { Roc(s, one); });
}

TEST(RocTest, PointsAreThresholdOperatingPoints) {
  const std::vector<double> s = {0.9, 0.8, 0.8, 0.3, 0.1};
  const std::vector<Label> g = {F, R, F, F, R};
  const RocCurve c = Roc(s, g);
  // Thresholds 0.9, 0.8, 0.3, 0.1 in descending order.
  ASSERT_EQ(c.points.size(), 5u);
  EXPECT_DOUBLE_EQ(c.points[0].fpr, 0.0);
  EXPECT_DOUBLE_EQ(c.points[0].tpr, 0.0);
  EXPECT_DOUBLE_EQ(c.points[1].tpr, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(c.points[2].fpr, 0.5);
  EXPECT_DOUBLE_EQ(c.points[2].tpr, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(c.points[3].tpr, 1.0);
  EXPECT_DOUBLE_EQ(c.points.back().fpr, 1.0);
  EXPECT_DOUBLE_EQ(c.points.back().tpr, 1.0);
}

TEST(RocTest, AucMatchesPairStatisticOnFuzzedSets) {
  Rng rng(22);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 2 + UniformIndex(rng, 199);
    std::vector<double> s(n);
    std::vector<Label> g(n);
    for (std::size_t i = 0; i < n; ++i) {
      // Coarse grid so ties are common.
      s[i] = static_cast<double>(UniformIndex(rng, 20)) / 19.0;
      g[i] = UniformIndex(rng, 2) ? F : R;
    }
    g[0] = F;
    g[1] = R;
    const RocCurve c = Roc(s, g);
    ASSERT_NEAR(c.auc, PairAuc(s, g), 1e-12);
    for (std::size_t i = 1; i < c.points.size(); ++i) {
      ASSERT_GE(c.points[i].fpr, c.points[i - 1].fpr);
      ASSERT_GE(c.points[i].tpr, c.points[i - 1].tpr);
    }
    ASSERT_EQ(c.points.size(), std::set<double>(s.begin(), s.end()).size() + 1);
  }
}

TEST(EvaluateTest, HardLabelsGiveSingleOperatingPoint) {
  const std::vector<Label> p = {F, F, R, R};
  const std::vector<Label> g = {F, R, R, F};
  const EvalReport r = Evaluate(p, g);
  ASSERT_EQ(r.roc.size(), 3u);
  EXPECT_DOUBLE_EQ(r.roc[1].fpr, 0.5);
  EXPECT_DOUBLE_EQ(r.roc[1].tpr, 0.5);
  ASSERT_TRUE(r.auc.has_value());
  EXPECT_DOUBLE_EQ(*r.auc, (1.0 + 0.5 - 0.5) / 2.0);
  const std::vector<double> s = {0.9, 0.6, 0.2, 0.4};
  const EvalReport with = Evaluate(p, g, std::span<const double>(s));
  ASSERT_TRUE(with.auc.has_value());
  EXPECT_DOUBLE_EQ(*with.auc, 0.75);
}

TEST(LengthBaselineTest, SeparableLengthsScorePerfectly) {
  std::vector<LengthExample> train;
  std::vector<LengthExample> eval;
  Rng rng(23);
  for (int i = 0; i < 40; ++i) {
    auto& dst = i < 28 ? train : eval;
    dst.push_back({20 + UniformIndex(rng, 10), F});
    dst.push_back({1 + UniformIndex(rng, 10), R});
  }
  const EvalReport r = LengthBaseline(train, eval);
  EXPECT_DOUBLE_EQ(r.accuracy, 1.0);
  const LengthThreshold t = FitLengthThreshold(train);
  EXPECT_TRUE(t.fake_if_longer);
  EXPECT_DOUBLE_EQ(t.train_accuracy, 1.0);
}

TEST(LengthBaselineTest, IdenticalDistributionsFallToMajorityRate) {
  std::vector<LengthExample> train;
  for (int i = 0; i < 7; ++i) train.push_back({5, R});
  for (int i = 0; i < 3; ++i) train.push_back({5, F});
  const LengthThreshold t = FitLengthThreshold(train);
  EXPECT_DOUBLE_EQ(t.train_accuracy, 0.7);
}

// Exhaustive search over every threshold in [min - 1, max] and both
// directions.
double BestThresholdAccuracy(const std::vector<LengthExample>& xs) {
  std::int64_t lo = 1 << 30;
  std::int64_t hi = -1;
  for (const auto& x : xs) {
    lo = std::min<std::int64_t>(lo, static_cast<std::int64_t>(x.words));
    hi = std::max<std::int64_t>(hi, static_cast<std::int64_t>(x.words));
  }
  double best = 0.0;
  for (std::int64_t t = lo - 1; t <= hi; ++t) {
    for (bool longer : {true, false}) {
      std::size_t ok = 0;
      for (const auto& x : xs) {
        const bool above = static_cast<std::int64_t>(x.words) > t;
        ok += ((above == longer) ? F : R) == x.gold;
      }
      best = std::max(best, static_cast<double>(ok) / static_cast<double>(xs.size()));
    }
  }
  return best;
}

TEST(LengthBaselineTest, TwelveExampleFixtureMatchesExhaustiveSearch) {
  const std::vector<LengthExample> xs = {
      {3, R}, {4, F}, {5, R}, {6, R}, {7, F}, {8, F},
      {9, R}, {10, F}, {11, F}, {12, F}, {2, R}, {13, R}};
  const LengthThreshold t = FitLengthThreshold(xs);
  EXPECT_DOUBLE_EQ(t.train_accuracy, BestThresholdAccuracy(xs));
  std::size_t ok = 0;
  for (const auto& x : xs) ok += t.Predict(x.words) == x.gold;
  EXPECT_DOUBLE_EQ(static_cast<double>(ok) / 12.0, t.train_accuracy);
}

TEST(LengthBaselineTest, FuzzedFitsAreOptimalAndBeatMajority) {
  Rng rng(24);
  for (int round = 0; round < 200; ++round) {
    std::vector<LengthExample> xs;
    const std::size_t n = 2 + UniformIndex(rng, 40);
    for (std::size_t i = 0; i < n; ++i) {
      xs.push_back({UniformIndex(rng, 30), UniformIndex(rng, 2) ? F : R});
    }
    xs[0].gold = F;
    xs[1].gold = R;
    const LengthThreshold t = FitLengthThreshold(xs);
    ASSERT_NEAR(t.train_accuracy, BestThresholdAccuracy(xs), 1e-12);
    std::vector<Label> golds;
    for (const auto& x : xs) golds.push_back(x.gold);
    ASSERT_GE(t.train_accuracy + 1e-12, MajorityBaseline(golds, golds).accuracy);
  }
}

TEST(LengthBaselineTest, SingleClassTrainFails) {
  const std::vector<LengthExample> xs = {{3, R}, {4, R}};
  ExpectCode(ErrorCode::kSingleClass, [&] { FitLengthThreshold(xs); });
}

TEST(MajorityBaselineTest, Examples) {
  const std::vector<Label> train = {R, R, R, F, F};
  EXPECT_EQ(MajorityLabel(train), R);
  const std::vector<Label> balanced = {R, F};
  EXPECT_EQ(MajorityLabel(balanced), R);
  std::vector<Label> eval(100, F);
  std::fill(eval.begin(), eval.begin() + 51, R);
  const EvalReport r = MajorityBaseline(train, eval);
  EXPECT_DOUBLE_EQ(r.accuracy, 0.51);
  EXPECT_EQ(r.matrix.tn, 51u);
  EXPECT_EQ(r.matrix.fn, 49u);
  ExpectCode(ErrorCode::kEmpty, [] { MajorityLabel({}); });
}

TEST(SliceTest, AnswerWordCountBoundary) {
  std::vector<LabeledExample> xs;
  for (std::size_t n : {5u, 10u, 11u}) {
    LabeledExample e;
    e.id = std::to_string(n);
    e.meta = Json{{"answer_word_count", n}};
    xs.push_back(e);
  }
  LabeledExample by_text;
  by_text.id = "t";
  by_text.meta = Json{{"answer", "Two words."}};
  xs.push_back(by_text);
  LabeledExample none;
  none.id = "none";
  xs.push_back(none);
  const auto kept = Slice(xs, AnswerWordCountAtMost(10));
  ASSERT_EQ(kept.size(), 3u);
  EXPECT_EQ(kept[0].id, "5");
  EXPECT_EQ(kept[1].id, "10");
  EXPECT_EQ(kept[2].id, "t");
  EXPECT_TRUE(Slice(xs, [](const LabeledExample&) { return false; }).empty());
}

TEST(SliceTest, FuzzedMatchesLinearScan) {
  Rng rng(25);
  std::vector<LabeledExample> xs;
  for (int i = 0; i < 300; ++i) {
    LabeledExample e;
    e.id = std::to_string(i);
    e.meta = Json{{"answer_word_count", UniformIndex(rng, 25)}};
    xs.push_back(e);
  }
  const auto kept = Slice(xs, AnswerWordCountAtMost(10));
  std::vector<std::string> want;
  for (const auto& e : xs) {
    if (e.meta["answer_word_count"].get<std::size_t>() <= 10) want.push_back(e.id);
  }
  std::vector<std::string> got;
  for (const auto& e : kept) got.push_back(e.id);
  EXPECT_EQ(got, want);
}

TEST(KappaTest, HandComputedFixtures) {
  const std::vector<Label> a = {R, R, F, F};
  EXPECT_DOUBLE_EQ(CohenKappa<Label>(a, a), 1.0);
  const std::vector<Label> b = {R, F, R, F};
  EXPECT_DOUBLE_EQ(CohenKappa<Label>(a, b), 0.0);
  const std::vector<Label> c = {R, R, R, F};
  const std::vector<Label> d = {R, R, F, F};
  EXPECT_DOUBLE_EQ(CohenKappa<Label>(c, d), 0.5);
  ExpectCode(ErrorCode::kLengthMismatch, [&] { CohenKappa<Label>(a, std::span<const Label>(c).subspan(0, 2)); });
}

TEST(KappaTest, FuzzedRangeAndSelfAgreement) {
  Rng rng(26);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 2 + UniformIndex(rng, 50);
    std::vector<int> a(n);
    std::vector<int> b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = static_cast<int>(UniformIndex(rng, 3));
      b[i] = static_cast<int>(UniformIndex(rng, 3));
    }
    const double k = CohenKappa<int>(a, b);
    ASSERT_GE(k, -1.0 - 1e-12);
    ASSERT_LE(k, 1.0 + 1e-12);
    ASSERT_DOUBLE_EQ(CohenKappa<int>(a, a), 1.0);
  }
}

TEST(TokenOverlapTest, Examples) {
  EXPECT_DOUBLE_EQ(TokenOverlapF1("the cat", "The cat"), 1.0);
  EXPECT_DOUBLE_EQ(TokenOverlapF1("dog", "cat"), 0.0);
  EXPECT_DOUBLE_EQ(TokenOverlapF1("", "cat"), 0.0);
  EXPECT_NEAR(TokenOverlapF1("2 blocks from the Capitol",
                             "2 blocks from the U.S. Capitol"),
              5.0 / 6.0, 1e-12);
  // Multiset: one shared "a" out of two.
  EXPECT_NEAR(TokenOverlapF1("a a", "a b"), 0.5, 1e-12);
}

TEST(TokenOverlapTest, SymmetricUnderSwap) {
  Rng rng(27);
  const std::vector<std::string> words = {"a", "b", "c", "the", "U.S.", "no"};
  for (int round = 0; round < 300; ++round) {
    std::string p;
    std::string g;
    for (std::size_t i = UniformIndex(rng, 8); i > 0; --i) p += words[UniformIndex(rng, words.size())] + " ";
    for (std::size_t i = UniformIndex(rng, 8); i > 0; --i) g += words[UniformIndex(rng, words.size())] + " ";
    ASSERT_NEAR(TokenOverlapF1(p, g), TokenOverlapF1(g, p), 1e-12);
  }
}

TEST(FractionCurveTest, Examples) {
  const std::vector<Label> all_real(5, R);
  const std::vector<double> f = {0.0, 0.1, 0.5, 0.55, 1.0};
  for (const FractionBin& b : FractionCurve(all_real, f, 4)) {
    if (b.n > 0) {
      EXPECT_DOUBLE_EQ(*b.real_rate, 1.0);
    } else {
      EXPECT_FALSE(b.real_rate.has_value());
    }
  }
  const std::vector<Label> alt = {R, F, R, F};
  const std::vector<double> one_each = {0.1, 0.3, 0.6, 0.9};
  const auto bins = FractionCurve(alt, one_each, 4);
  ASSERT_EQ(bins.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(bins[i].n, 1u);
    EXPECT_DOUBLE_EQ(*bins[i].real_rate, i % 2 == 0 ? 1.0 : 0.0);
  }
  const std::vector<double> bad = {0.1, 0.3, 0.6, 1.2};
  ExpectCode(ErrorCode::kOutOfRange, [&] { FractionCurve(alt, bad, 4); });
  EXPECT_EQ(FractionCurve(alt, bad, 4, 2.0)[2].n, 1u);
  ExpectCode(ErrorCode::kBadConfig, [&] { FractionCurve(alt, one_each, 0); });
}

TEST(FractionCurveTest, FuzzedCountsSumToTotal) {
  Rng rng(28);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = UniformIndex(rng, 100);
    std::vector<Label> p(n);
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = UniformIndex(rng, 2) ? F : R;
      f[i] = UniformUnit(rng);
    }
    const auto bins = FractionCurve(p, f, 1 + UniformIndex(rng, 12));
    std::size_t total = 0;
    for (const auto& b : bins) {
      total += b.n;
      std::size_t in_bin = 0;
      for (double v : f) in_bin += (v >= b.lower && v < b.upper) ? 1 : 0;
      ASSERT_EQ(in_bin, b.n);
    }
    ASSERT_EQ(total, n);
  }
}

TEST(ReportTest, JsonTableAndCsv) {
  EvalReport r = Metrics(ConfusionMatrix{3, 1, 1, 5});
  const Json j = ReportToJson(r);
  EXPECT_DOUBLE_EQ(j["accuracy"].get<double>(), 0.8);
  EXPECT_EQ(j["matrix"]["tp"].get<int>(), 3);
  const std::vector<std::pair<std::string, EvalReport>> rows = {{"length", r}};
  const std::string table = FormatReportTable(rows);
  EXPECT_NE(table.find("precision"), std::string::npos);
  EXPECT_NE(table.find("0.7500"), std::string::npos);
  EXPECT_NE(table.find("0.8000"), std::string::npos);
  const std::vector<RocPoint> pts = {{0, 0}, {0.5, 1}, {1, 1}};
  EXPECT_EQ(RocCsv(pts), "fpr,tpr\n0,0\n0.5,1\n1,1\n");
}

}  // namespace
}  // namespace vforge
