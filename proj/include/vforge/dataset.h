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

// Labeled real/fake datasets and their JSON Lines form. Each line holds one
// object with exactly the fields id, text, label, scenario and meta.
//
// Required meta keys:
//   qa_extension       question, answer (both labels)
//   modification       m, original_id, edits (fake examples)
//   vanilla_extension  g_actual (fake examples)
// A modification fake must revert byte-exactly to the text of the real
// example named by original_id, with the same negation count.

#ifndef VFORGE_DATASET_H_
#define VFORGE_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "vforge/negation_attack.h"

namespace vforge {

using Json = nlohmann::ordered_json;

enum class Label { kReal, kFake };

std::string_view LabelName(Label label);
std::optional<Label> ParseLabel(std::string_view name);

enum class Scenario {
  kQaExtension,
  kModification,
  kVanillaExtension,
  kFullGeneration,
};

std::string_view ScenarioName(Scenario scenario);
std::optional<Scenario> ParseScenario(std::string_view name);

struct LabeledExample {
  std::string id;
  std::string text;
  Label label = Label::kReal;
  Scenario scenario = Scenario::kFullGeneration;
  Json meta = Json::object();

  friend bool operator==(const LabeledExample&,
                         const LabeledExample&) = default;
};

Json ToJson(const LabeledExample& example);
// Throws kSchema with `line` as detail.
LabeledExample ExampleFromJson(const Json& json, std::size_t line);

Json EditsToJson(std::span<const EditRecord> edits);
std::vector<EditRecord> EditsFromJson(const Json& json);

// Validated, immutable collection of examples with unique ids.
class Dataset {
 public:
  Dataset() = default;

  // Throws kDuplicateId or kInvariantViolation (message names the example).
  static Dataset Assemble(std::vector<LabeledExample> examples);

  const std::vector<LabeledExample>& examples() const { return examples_; }
  std::size_t size() const { return examples_.size(); }
  std::size_t count(Label label) const;
  const LabeledExample* Find(std::string_view id) const;

  friend bool operator==(const Dataset& a, const Dataset& b) {
    return a.examples_ == b.examples_;
  }

 private:
  std::vector<LabeledExample> examples_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

struct DatasetSplit {
  std::vector<LabeledExample> train;
  std::vector<LabeledExample> eval;
  std::uint64_t seed = 0;
  double eval_fraction = 0.3;
};

inline constexpr double kDefaultEvalFraction = 0.3;

// Seeded, label-stratified split. |eval| = round(eval_fraction * size) and
// each label's eval share is within one example of eval_fraction. The
// partition depends only on the set of ids, the seed and the fraction; both
// halves keep dataset order. Throws kEmptyDataset and kBadConfig.
DatasetSplit Split(const Dataset& dataset,
                   double eval_fraction = kDefaultEvalFraction,
                   std::uint64_t seed = 0);

// Atomic write: a sibling temporary file is renamed over `path`.
void WriteJsonl(std::span<const LabeledExample> examples,
                const std::filesystem::path& path);
void WriteJsonl(const Dataset& dataset, const std::filesystem::path& path);
// Throws kIo, kSchema (detail = 1-based line) and the Assemble errors.
Dataset ReadJsonl(const std::filesystem::path& path);

// Writes `lines` as UTF-8 JSON Lines, atomically.
void WriteJsonLines(std::span<const Json> lines,
                    const std::filesystem::path& path);

struct Article {
  std::string id;  // file stem
  std::string text;
};

// Every *.txt file of `dir`, sorted by file name.
std::vector<Article> LoadArticles(const std::filesystem::path& dir);

struct QuestionRow {
  std::string article_id;
  std::string question;
  std::string gold_answer;
};

// Tab-separated id, question, gold_answer; an optional header line starting
// with "id<TAB>" is skipped. Throws kSchema with the line number.
std::vector<QuestionRow> LoadQuestions(const std::filesystem::path& path);

std::string ReadFile(const std::filesystem::path& path);
void WriteFileAtomic(const std::filesystem::path& path, std::string_view data);

}  // namespace vforge

#endif  // VFORGE_DATASET_H_
