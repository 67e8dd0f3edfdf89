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

#include "vforge/dataset.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "support/test_support.h"
#include "vforge/error.h"

namespace vforge {
namespace {

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

LabeledExample Plain(const std::string& id, Label label,
                     const std::string& text = "Some text.") {
  LabeledExample e;
  e.id = id;
  e.text = text;
  e.label = label;
  e.scenario = Scenario::kFullGeneration;
  return e;
}

std::vector<LabeledExample> Balanced(std::size_t real, std::size_t fake) {
  std::vector<LabeledExample> out;
  for (std::size_t i = 0; i < real; ++i) out.push_back(Plain("r" + std::to_string(i), Label::kReal));
  for (std::size_t i = 0; i < fake; ++i) out.push_back(Plain("f" + std::to_string(i), Label::kFake));
  return out;
}

// Real original plus its modified fake.
std::vector<LabeledExample> ModificationPair(const std::string& text) {
  const ModifiedArticle mod = ModifyArticle(
      Tokenize(text), ModificationConfig{2, 100, 5}, test::ConstantScorer(0.5));
  LabeledExample real = Plain("a1", Label::kReal, text);
  real.scenario = Scenario::kModification;
  LabeledExample fake = Plain("a1#mod", Label::kFake, mod.modified.text());
  fake.scenario = Scenario::kModification;
  fake.meta = Json{{"m", 2}, {"original_id", "a1"}, {"edits", EditsToJson(mod.edits)}};
  return {real, fake};
}

std::set<std::string> Ids(const std::vector<LabeledExample>& xs) {
  std::set<std::string> out;
  for (const auto& e : xs) out.insert(e.id);
  return out;
}

TEST(DatasetTest, AssembleCountsLabels) {
  const Dataset d = Dataset::Assemble(Balanced(2, 2));
  EXPECT_EQ(d.count(Label::kReal), 2u);
  EXPECT_EQ(d.count(Label::kFake), 2u);
  ASSERT_NE(d.Find("f1"), nullptr);
  EXPECT_EQ(d.Find("f1")->label, Label::kFake);
  EXPECT_EQ(d.Find("zz"), nullptr);
}

TEST(DatasetTest, DuplicateId) {
  auto xs = Balanced(2, 0);
  xs.push_back(Plain("r0", Label::kFake));
  ExpectCode(ErrorCode::kDuplicateId, [&] { Dataset::Assemble(xs); });
}

TEST(DatasetTest, ModificationPairValidates) {
  EXPECT_NO_THROW(Dataset::Assemble(ModificationPair("The vote was not close.")));
}

TEST(DatasetTest, CorruptedModificationIsInvariantViolation) {
  auto pair = ModificationPair("The vote was not close.");
  pair[1].text += " Extra.";
  try {
    Dataset::Assemble(pair);
    ADD_FAILURE() << "expected InvariantViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvariantViolation);
    EXPECT_NE(std::string(e.what()).find("a1#mod"), std::string::npos);
  }
}

TEST(DatasetTest, NegationCountMismatchIsInvariantViolation) {
  // Edits that revert correctly but drop a negation overall.
  const std::string original = "It is not over.";
  LabeledExample real = Plain("a1", Label::kReal, original);
  real.scenario = Scenario::kModification;
  LabeledExample fake = Plain("a1#mod", Label::kFake, "It is over.");
  fake.scenario = Scenario::kModification;
  EditRecord del;
  del.kind = EditKind::kDeletion;
  del.token_position = 2;
  del.word = "not";
  del.offset = 6;
  del.removed = "not ";
  fake.meta = Json{{"m", 2}, {"original_id", "a1"},
                   {"edits", EditsToJson(std::vector<EditRecord>{del})}};
  ExpectCode(ErrorCode::kInvariantViolation, [&] { Dataset::Assemble({real, fake}); });
}

TEST(DatasetTest, MissingOriginalIsInvariantViolation) {
  auto pair = ModificationPair("The vote was not close.");
  ExpectCode(ErrorCode::kInvariantViolation, [&] { Dataset::Assemble({pair[1]}); });
}

TEST(DatasetTest, RoundTripThreeExamples) {
  test::TempDir dir;
  std::vector<LabeledExample> xs = Balanced(2, 0);
  LabeledExample qa = Plain("q1", Label::kFake, "Article. Answer here.");
  qa.scenario = Scenario::kQaExtension;
  qa.meta = Json{{"question", "Where?"}, {"answer", "Answer here."},
                 {"answer_word_count", 2}};
  xs.push_back(qa);
  const Dataset d = Dataset::Assemble(xs);
  WriteJsonl(d, dir / "d.jsonl");
  EXPECT_EQ(ReadJsonl(dir / "d.jsonl"), d);
}

TEST(DatasetTest, FuzzedUtf8RoundTripsByteIdentically) {
  test::TempDir dir;
  Rng rng(12);
  for (int round = 0; round < 30; ++round) {
    std::vector<LabeledExample> xs;
    const std::size_t n = 1 + UniformIndex(rng, 20);
    for (std::size_t i = 0; i < n; ++i) {
      LabeledExample e = Plain("id-\xc3\xa9-" + std::to_string(i),
                               UniformIndex(rng, 2) ? Label::kFake : Label::kReal,
                               test::FuzzText(rng, 200) + "\"quoted\"\n\tline");
      e.scenario = Scenario::kVanillaExtension;
      e.meta = Json{{"g_actual", UniformUnit(rng)}, {"note", test::FuzzText(rng, 20)}};
      xs.push_back(e);
    }
    const Dataset d = Dataset::Assemble(xs);
    WriteJsonl(d, dir / "f.jsonl");
    const Dataset back = ReadJsonl(dir / "f.jsonl");
    ASSERT_EQ(back, d);
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_EQ(back.examples()[i].text, xs[i].text);
    }
    // Rewriting the parsed data gives the same bytes.
    WriteJsonl(back, dir / "g.jsonl");
    ASSERT_EQ(ReadFile(dir / "f.jsonl"), ReadFile(dir / "g.jsonl"));
  }
}

TEST(DatasetTest, SchemaErrorsCarryLineNumber) {
  test::TempDir dir;
  const std::string good =
      R"({"id":"a","text":"t","label":"real","scenario":"full_generation","meta":{}})";
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"missing label",
       R"({"id":"b","text":"t","scenario":"full_generation","meta":{}})"},
      {"bad label",
       R"({"id":"b","text":"t","label":"maybe","scenario":"full_generation","meta":{}})"},
      {"bad scenario",
       R"({"id":"b","text":"t","label":"real","scenario":"x","meta":{}})"},
      {"extra field",
       R"({"id":"b","text":"t","label":"real","scenario":"full_generation","meta":{},"x":1})"},
      {"meta not object",
       R"({"id":"b","text":"t","label":"real","scenario":"full_generation","meta":[]})"},
      {"qa without answer",
       R"({"id":"b","text":"t","label":"real","scenario":"qa_extension","meta":{"question":"q"}})"},
      {"vanilla fake without g",
       R"({"id":"b","text":"t","label":"fake","scenario":"vanilla_extension","meta":{}})"},
      {"not json", "{oops"},
      {"array", "[1,2]"},
  };
  for (const auto& [name, bad] : cases) {
    SCOPED_TRACE(name);
    test::WriteText(dir / "s.jsonl", good + "\n" + bad + "\n");
    ExpectCode(ErrorCode::kSchema, [&] { ReadJsonl(dir / "s.jsonl"); }, 2);
  }
}

TEST(DatasetTest, MissingFileIsIoError) {
  test::TempDir dir;
  ExpectCode(ErrorCode::kIo, [&] { ReadJsonl(dir / "absent.jsonl"); });
}

TEST(SplitTest, HundredExamplesGivesThirtyEval) {
  const Dataset d = Dataset::Assemble(Balanced(50, 50));
  const DatasetSplit s = Split(d, 0.3, 1);
  EXPECT_EQ(s.eval.size(), 30u);
  EXPECT_EQ(s.train.size(), 70u);
}

TEST(SplitTest, TenExamplesHaveBothLabelsInEval) {
  const Dataset d = Dataset::Assemble(Balanced(5, 5));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DatasetSplit s = Split(d, 0.3, seed);
    ASSERT_EQ(s.eval.size(), 3u);
    const auto reals = std::count_if(s.eval.begin(), s.eval.end(),
                                     [](const auto& e) { return e.label == Label::kReal; });
    ASSERT_GE(reals, 1);
    ASSERT_LE(reals, 2);
  }
}

TEST(SplitTest, FuzzedStratificationAndPartition) {
  Rng rng(13);
  for (int round = 0; round < 200; ++round) {
    const std::size_t real = UniformIndex(rng, 60);
    const std::size_t fake = UniformIndex(rng, 60) + (real == 0 ? 1 : 0);
    const double f = 0.05 + 0.9 * UniformUnit(rng);
    const Dataset d = Dataset::Assemble(Balanced(real, fake));
    const DatasetSplit s = Split(d, f, round);
    const double total = static_cast<double>(real + fake);
    ASSERT_EQ(s.eval.size(), static_cast<std::size_t>(std::llround(f * total)));
    ASSERT_EQ(s.eval.size() + s.train.size(), d.size());
    std::set<std::string> all = Ids(s.eval);
    for (const auto& id : Ids(s.train)) ASSERT_TRUE(all.insert(id).second);
    ASSERT_EQ(all, Ids(d.examples()));
    for (Label label : {Label::kReal, Label::kFake}) {
      const double n = static_cast<double>(d.count(label));
      const auto in_eval = std::count_if(s.eval.begin(), s.eval.end(),
                                         [&](const auto& e) { return e.label == label; });
      ASSERT_LE(std::abs(static_cast<double>(in_eval) - f * n), 1.0 + 1e-9);
    }
  }
}

TEST(SplitTest, SameSeedSamePartitionRegardlessOfOrder) {
  auto xs = Balanced(40, 33);
  const DatasetSplit a = Split(Dataset::Assemble(xs), 0.3, 77);
  const DatasetSplit b = Split(Dataset::Assemble(xs), 0.3, 77);
  EXPECT_EQ(Ids(a.eval), Ids(b.eval));
  std::reverse(xs.begin(), xs.end());
  const DatasetSplit c = Split(Dataset::Assemble(xs), 0.3, 77);
  EXPECT_EQ(Ids(a.eval), Ids(c.eval));
  const DatasetSplit d = Split(Dataset::Assemble(xs), 0.3, 78);
  EXPECT_NE(Ids(a.eval), Ids(d.eval));
}

TEST(SplitTest, Errors) {
  ExpectCode(ErrorCode::kEmptyDataset, [] { Split(Dataset{}, 0.3, 0); });
  const Dataset d = Dataset::Assemble(Balanced(2, 2));
  ExpectCode(ErrorCode::kBadConfig, [&] { Split(d, 0.0, 0); });
  ExpectCode(ErrorCode::kBadConfig, [&] { Split(d, 1.0, 0); });
}

TEST(LoadTest, ArticlesSortedAndQuestionsParsed) {
  test::TempDir dir;
  std::filesystem::create_directory(dir / "arts");
  test::WriteText(dir / "arts" / "b.txt", "Second.");
  test::WriteText(dir / "arts" / "a.txt", "First.");
  test::WriteText(dir / "arts" / "skip.md", "No.");
  const auto arts = LoadArticles(dir / "arts");
  ASSERT_EQ(arts.size(), 2u);
  EXPECT_EQ(arts[0].id, "a");
  EXPECT_EQ(arts[1].text, "Second.");

  test::WriteText(dir / "q.tsv", "id\tquestion\tgold_answer\na\tWhere?\tHere\nb\tWho?\t\n");
  const auto qs = LoadQuestions(dir / "q.tsv");
  ASSERT_EQ(qs.size(), 2u);
  EXPECT_EQ(qs[0].question, "Where?");
  EXPECT_EQ(qs[0].gold_answer, "Here");
  EXPECT_EQ(qs[1].gold_answer, "");

  test::WriteText(dir / "bad.tsv", "a\tWhere?\tHere\nonly-one-field\n");
  ExpectCode(ErrorCode::kSchema, [&] { LoadQuestions(dir / "bad.tsv"); }, 2);
}

TEST(LoadTest, BundledArticlesAllHaveThreeNegations) {
  const auto arts = LoadArticles(test::SourceDir() / "data" / "articles");
  ASSERT_EQ(arts.size(), 100u);
  for (const Article& a : arts) {
    EXPECT_GE(NegationOccurrences(Tokenize(a.text)).size(), 3u) << a.id;
  }
}

}  // namespace
}  // namespace vforge
