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

#include <unistd.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "vforge/error.h"
#include "vforge/sampling.h"
#include "vforge/text_core.h"

namespace vforge {
namespace {

namespace fs = std::filesystem;

constexpr std::array<std::string_view, 5> kExampleFields = {
    "id", "text", "label", "scenario", "meta"};

[[noreturn]] void SchemaFail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kSchema, "line " + std::to_string(line) + ": " + what,
              static_cast<std::int64_t>(line));
}

std::vector<std::string_view> RequiredMetaKeys(const LabeledExample& e) {
  switch (e.scenario) {
    case Scenario::kQaExtension:
      return {"question", "answer"};
    case Scenario::kModification:
      if (e.label == Label::kFake) return {"m", "original_id", "edits"};
      return {};
    case Scenario::kVanillaExtension:
      if (e.label == Label::kFake) return {"g_actual"};
      return {};
    case Scenario::kFullGeneration:
      return {};
  }
  return {};
}

std::optional<std::string> MissingMetaKey(const LabeledExample& e) {
  for (std::string_view key : RequiredMetaKeys(e)) {
    if (!e.meta.is_object() || !e.meta.contains(key)) return std::string(key);
  }
  return std::nullopt;
}

std::string Dump(const Json& json) {
  try {
    return json.dump(-1, ' ', false, Json::error_handler_t::strict);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kIo, std::string("cannot encode JSON: ") + e.what());
  }
}

}  // namespace

std::string_view LabelName(Label label) {
  return label == Label::kReal ? "real" : "fake";
}

std::optional<Label> ParseLabel(std::string_view name) {
  if (name == "real") return Label::kReal;
  if (name == "fake") return Label::kFake;
  return std::nullopt;
}

std::string_view ScenarioName(Scenario scenario) {
  switch (scenario) {
    case Scenario::kQaExtension: return "qa_extension";
    case Scenario::kModification: return "modification";
    case Scenario::kVanillaExtension: return "vanilla_extension";
    case Scenario::kFullGeneration: return "full_generation";
  }
  return "full_generation";
}

std::optional<Scenario> ParseScenario(std::string_view name) {
  for (Scenario s : {Scenario::kQaExtension, Scenario::kModification,
                     Scenario::kVanillaExtension, Scenario::kFullGeneration}) {
    if (ScenarioName(s) == name) return s;
  }
  return std::nullopt;
}

Json ToJson(const LabeledExample& example) {
  Json j = Json::object();
  j["id"] = example.id;
  j["text"] = example.text;
  j["label"] = LabelName(example.label);
  j["scenario"] = ScenarioName(example.scenario);
  j["meta"] = example.meta;
  return j;
}

LabeledExample ExampleFromJson(const Json& json, std::size_t line) {
  if (!json.is_object()) SchemaFail(line, "expected a JSON object");
  for (const auto& [key, value] : json.items()) {
    if (std::find(kExampleFields.begin(), kExampleFields.end(), key) ==
        kExampleFields.end()) {
      SchemaFail(line, "unexpected field \"" + key + "\"");
    }
  }
  auto string_field = [&](std::string_view key) -> std::string {
    auto it = json.find(key);
    if (it == json.end()) SchemaFail(line, "missing \"" + std::string(key) + "\"");
    if (!it->is_string()) {
      SchemaFail(line, "\"" + std::string(key) + "\" must be a string");
    }
    return it->get<std::string>();
  };

  LabeledExample e;
  e.id = string_field("id");
  e.text = string_field("text");
  const std::string label = string_field("label");
  const auto parsed_label = ParseLabel(label);
  if (!parsed_label) SchemaFail(line, "unknown label \"" + label + "\"");
  e.label = *parsed_label;
  const std::string scenario = string_field("scenario");
  const auto parsed_scenario = ParseScenario(scenario);
  if (!parsed_scenario) SchemaFail(line, "unknown scenario \"" + scenario + "\"");
  e.scenario = *parsed_scenario;
  auto meta = json.find("meta");
  if (meta == json.end()) SchemaFail(line, "missing \"meta\"");
  if (!meta->is_object()) SchemaFail(line, "\"meta\" must be an object");
  e.meta = *meta;
  if (auto missing = MissingMetaKey(e)) {
    SchemaFail(line, "meta lacks \"" + *missing + "\" required for " +
                         std::string(ScenarioName(e.scenario)));
  }
  return e;
}

Json EditsToJson(std::span<const EditRecord> edits) {
  Json out = Json::array();
  for (const EditRecord& e : edits) {
    Json j = Json::object();
    j["kind"] = EditKindName(e.kind);
    j["token_position"] = e.token_position;
    j["word"] = e.word;
    if (e.kind == EditKind::kInsertion) j["score"] = e.score;
    j["offset"] = e.offset;
    j["removed"] = e.removed;
    j["inserted"] = e.inserted;
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<EditRecord> EditsFromJson(const Json& json) {
  if (!json.is_array()) {
    throw Error(ErrorCode::kInvariantViolation, "edits must be an array");
  }
  std::vector<EditRecord> out;
  try {
    for (const Json& j : json) {
      EditRecord e;
      const std::string kind = j.at("kind").get<std::string>();
      if (kind == "deletion") {
        e.kind = EditKind::kDeletion;
      } else if (kind == "insertion") {
        e.kind = EditKind::kInsertion;
        e.score = j.at("score").get<double>();
      } else {
        throw Error(ErrorCode::kInvariantViolation, "unknown edit kind " + kind);
      }
      e.token_position = j.at("token_position").get<std::size_t>();
      e.word = j.at("word").get<std::string>();
      e.offset = j.at("offset").get<std::size_t>();
      e.removed = j.at("removed").get<std::string>();
      e.inserted = j.at("inserted").get<std::string>();
      out.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::kInvariantViolation,
                std::string("malformed edit record: ") + ex.what());
  }
  return out;
}

Dataset Dataset::Assemble(std::vector<LabeledExample> examples) {
  Dataset ds;
  ds.examples_ = std::move(examples);
  for (std::size_t i = 0; i < ds.examples_.size(); ++i) {
    if (!ds.by_id_.emplace(ds.examples_[i].id, i).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "duplicate id \"" + ds.examples_[i].id + "\"");
    }
  }
  for (const LabeledExample& e : ds.examples_) {
    auto violation = [&](const std::string& what) {
      return Error(ErrorCode::kInvariantViolation,
                   "example \"" + e.id + "\": " + what);
    };
    if (auto missing = MissingMetaKey(e)) {
      throw violation("meta lacks \"" + *missing + "\"");
    }
    if (e.scenario != Scenario::kModification || e.label != Label::kFake) {
      continue;
    }
    const Json& original_id = e.meta.at("original_id");
    if (!original_id.is_string()) throw violation("original_id must be a string");
    const LabeledExample* original = ds.Find(original_id.get<std::string>());
    if (original == nullptr) {
      throw violation("paired original \"" + original_id.get<std::string>() +
                      "\" is not in the dataset");
    }
    std::string reverted;
    try {
      reverted = RevertEdits(e.text, EditsFromJson(e.meta.at("edits")));
    } catch (const Error& err) {
      throw violation(err.what());
    }
    if (reverted != original->text) {
      throw violation("edits do not reconstruct the original text");
    }
    if (NegationOccurrences(Tokenize(e.text)).size() !=
        NegationOccurrences(Tokenize(original->text)).size()) {
      throw violation("negation count differs from the original");
    }
  }
  return ds;
}

std::size_t Dataset::count(Label label) const {
  return static_cast<std::size_t>(
      std::count_if(examples_.begin(), examples_.end(),
                    [&](const LabeledExample& e) { return e.label == label; }));
}

const LabeledExample* Dataset::Find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &examples_[it->second];
}

DatasetSplit Split(const Dataset& dataset, double eval_fraction,
                   std::uint64_t seed) {
  if (dataset.size() == 0) {
    throw Error(ErrorCode::kEmptyDataset, "cannot split an empty dataset");
  }
  if (!(eval_fraction > 0.0 && eval_fraction < 1.0)) {
    throw Error(ErrorCode::kBadConfig, "eval_fraction must be in (0, 1)");
  }

  constexpr std::array<Label, 2> kLabels = {Label::kReal, Label::kFake};
  std::array<std::vector<std::string>, 2> ids;
  for (const LabeledExample& e : dataset.examples()) {
    ids[e.label == Label::kReal ? 0 : 1].push_back(e.id);
  }

  // Floor of each class's share, then hand out the remainder by largest
  // fractional part (real first on ties).
  const auto target = static_cast<std::size_t>(
      std::llround(eval_fraction * static_cast<double>(dataset.size())));
  std::array<std::size_t, 2> quota{};
  std::array<double, 2> remainder{};
  std::size_t assigned = 0;
  for (std::size_t c = 0; c < kLabels.size(); ++c) {
    const double share = eval_fraction * static_cast<double>(ids[c].size());
    quota[c] = static_cast<std::size_t>(std::floor(share));
    remainder[c] = share - std::floor(share);
    assigned += quota[c];
  }
  while (assigned < target) {
    const std::size_t c = remainder[1] > remainder[0] ? 1 : 0;
    ++quota[c];
    remainder[c] = -1.0;
    ++assigned;
  }

  Rng rng(seed);
  std::set<std::string> eval_ids;
  for (std::size_t c = 0; c < kLabels.size(); ++c) {
    std::sort(ids[c].begin(), ids[c].end());
    Shuffle(ids[c], rng);
    eval_ids.insert(ids[c].begin(),
                    ids[c].begin() + static_cast<std::ptrdiff_t>(quota[c]));
  }

  DatasetSplit split;
  split.seed = seed;
  split.eval_fraction = eval_fraction;
  for (const LabeledExample& e : dataset.examples()) {
    (eval_ids.count(e.id) ? split.eval : split.train).push_back(e);
  }
  return split;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  return buf.str();
}

void WriteFileAtomic(const fs::path& path, std::string_view data) {
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot replace " + path.string());
  }
}

void WriteJsonLines(std::span<const Json> lines, const fs::path& path) {
  std::string data;
  for (const Json& j : lines) {
    data += Dump(j);
    data.push_back('\n');
  }
  WriteFileAtomic(path, data);
}

void WriteJsonl(std::span<const LabeledExample> examples, const fs::path& path) {
  std::vector<Json> lines;
  lines.reserve(examples.size());
  for (const LabeledExample& e : examples) lines.push_back(ToJson(e));
  WriteJsonLines(lines, path);
}

void WriteJsonl(const Dataset& dataset, const fs::path& path) {
  WriteJsonl(dataset.examples(), path);
}

Dataset ReadJsonl(const fs::path& path) {
  std::istringstream in(ReadFile(path));
  std::vector<LabeledExample> examples;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json json;
    try {
      json = Json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      SchemaFail(number, std::string("invalid JSON: ") + e.what());
    }
    examples.push_back(ExampleFromJson(json, number));
  }
  return Dataset::Assemble(std::move(examples));
}

std::vector<Article> LoadArticles(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error(ErrorCode::kIo, dir.string() + " is not a directory");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<Article> out;
  out.reserve(files.size());
  for (const fs::path& f : files) {
    out.push_back({f.stem().string(), ReadFile(f)});
  }
  return out;
}

std::vector<QuestionRow> LoadQuestions(const fs::path& path) {
  std::istringstream in(ReadFile(path));
  std::vector<QuestionRow> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (number == 1 && line.rfind("id\t", 0) == 0) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 3) {
      SchemaFail(number, "expected 3 tab-separated fields, found " +
                             std::to_string(fields.size()));
    }
    if (fields[0].empty() || fields[1].empty()) {
      SchemaFail(number, "id and question must be non-empty");
    }
    out.push_back({fields[0], fields[1], fields[2]});
  }
  return out;
}

}  // namespace vforge
