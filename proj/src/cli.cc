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

#include "vforge/cli.h"

#include <pthread.h>

#include <algorithm>
#include <atomic>
#include <csignal>
#include <exception>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <utility>

#include "CLI11.hpp"
#include "vforge/annotation_service.h"
#include "vforge/dataset.h"
#include "vforge/eval_harness.h"
#include "vforge/extension_attack.h"
#include "vforge/external_adapters.h"
#include "vforge/lm_scorer.h"
#include "vforge/negation_attack.h"
#include "vforge/sampling.h"
#include "vforge/text_core.h"

namespace vforge {
namespace {

namespace fs = std::filesystem;

std::size_t DefaultJobs() {
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs fn(0..n-1) on up to `jobs` threads; rethrows the first failure.
template <typename Fn>
void ParallelFor(std::size_t n, std::size_t jobs, Fn fn) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex mu;
  auto worker = [&] {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        failed.store(true);
      }
    }
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(n, 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
}

[[noreturn]] void Usage(const std::string& message) {
  throw Error(ErrorCode::kBadConfig, message);
}

std::vector<Document> LoadCorpus(const fs::path& path) {
  std::vector<Document> docs;
  if (fs::is_directory(path)) {
    for (const Article& a : LoadArticles(path)) docs.push_back(Tokenize(a.text));
  } else {
    docs.push_back(Tokenize(ReadFile(path)));
  }
  return docs;
}

NgramModel LoadModel(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return NgramModel::Load(in);
}

ClientOptions ClientOptionsFor(const AdapterConfig& config) {
  ClientOptions options;
  options.token = config.token;
  return options;
}

std::string RequireUrl(const std::optional<std::string>& url,
                       const char* variable) {
  if (!url) Usage(std::string(variable) + " is not set");
  return *url;
}

bool Skippable(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInsufficientNegations:
    case ErrorCode::kNoEligiblePositions:
    case ErrorCode::kInsufficientCandidates:
    case ErrorCode::kTooFewSentences:
    case ErrorCode::kArticleTooShort:
    case ErrorCode::kRealTooShort:
    case ErrorCode::kEmptyGeneration:
    case ErrorCode::kEmptyDocument:
      return true;
    default:
      return false;
  }
}

// Per-item output collected off-thread and printed in input order.
struct ItemLog {
  std::string out;
  std::string err;
};

void Flush(const std::vector<ItemLog>& logs, std::ostream& out,
           std::ostream& err) {
  for (const ItemLog& l : logs) {
    out << l.out;
    err << l.err;
  }
}

// ---- train-lm ---------------------------------------------------------------

struct TrainArgs {
  std::string corpus;
  std::string out;
  int order = NgramModel::kDefaultOrder;
  std::vector<double> lambdas;
};

int RunTrain(const TrainArgs& a, std::ostream& out) {
  const std::vector<Document> docs = LoadCorpus(a.corpus);
  const NgramModel model = NgramModel::Train(
      docs, a.order, a.lambdas.empty() ? NgramModel::DefaultLambdas() : a.lambdas);
  std::ostringstream dump;
  model.Save(dump);
  WriteFileAtomic(a.out, dump.str());
  out << "trained order-" << model.order() << " model on "
      << model.total_tokens() << " tokens, vocabulary "
      << model.vocabulary().size() << "\n";
  return kExitOk;
}

// ---- modify -----------------------------------------------------------------

struct ModifyArgs {
  std::string in_dir;
  std::string out;
  int m = 2;
  std::size_t k = 100;
  std::uint64_t seed = 0;
  std::string scorer = "ngram";
  std::string lm;
  std::string corpus;
  std::size_t jobs = DefaultJobs();
};

int RunModify(const ModifyArgs& a, std::ostream& out, std::ostream& err) {
  ModificationConfig base{a.m, a.k, a.seed};
  base.Validate();
  if (a.scorer != "ngram" && !a.lm.empty()) Usage("--lm needs --scorer ngram");

  const std::vector<Article> articles = LoadArticles(a.in_dir);
  if (articles.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "no .txt articles in " + a.in_dir);
  }

  std::unique_ptr<NgramModel> ngram;
  std::unique_ptr<JsonHttpClient> client;
  std::unique_ptr<Scorer> remote;
  const Scorer* scorer = nullptr;
  if (a.scorer == "remote") {
    const AdapterConfig config = AdapterConfig::FromEnvironment();
    client = std::make_unique<JsonHttpClient>(
        RequireUrl(config.scorer_url, "VFORGE_SCORER_URL"),
        ClientOptionsFor(config));
    remote = std::make_unique<RemoteScorer>(*client);
    scorer = remote.get();
  } else {
    if (!a.lm.empty()) {
      ngram = std::make_unique<NgramModel>(LoadModel(a.lm));
    } else {
      std::vector<Document> docs;
      if (!a.corpus.empty()) {
        docs = LoadCorpus(a.corpus);
      } else {
        err << "note: no --lm or --corpus; training on the input articles\n";
        for (const Article& art : articles) docs.push_back(Tokenize(art.text));
      }
      ngram = std::make_unique<NgramModel>(NgramModel::Train(docs));
    }
    scorer = ngram.get();
  }

  std::vector<std::optional<std::pair<LabeledExample, LabeledExample>>> pairs(
      articles.size());
  std::vector<ItemLog> logs(articles.size());
  ParallelFor(articles.size(), a.jobs, [&](std::size_t i) {
    const Article& art = articles[i];
    ModificationConfig config = base;
    config.seed = DeriveSeed(a.seed, art.id);
    try {
      const ModifiedArticle r = ModifyArticle(Tokenize(art.text), config, *scorer);
      LabeledExample real{art.id, art.text, Label::kReal, Scenario::kModification,
                          Json::object()};
      LabeledExample fake{art.id + "#mod", r.modified.text(), Label::kFake,
                          Scenario::kModification, Json::object()};
      fake.meta["m"] = a.m;
      fake.meta["k"] = a.k;
      fake.meta["seed"] = config.seed;
      fake.meta["original_id"] = art.id;
      fake.meta["edits"] = EditsToJson(r.edits);
      pairs[i].emplace(std::move(real), std::move(fake));

      std::ostringstream line;
      line << art.id << ":";
      for (const EditRecord& e : r.edits) {
        line << (e.kind == EditKind::kDeletion ? " -" : " +") << e.word << "@"
             << e.token_position;
      }
      line << "\n";
      logs[i].out = line.str();
    } catch (const Error& e) {
      if (!Skippable(e.code())) throw;
      logs[i].err = "warning: skipping " + art.id + ": " + e.what() + "\n";
    }
  });
  Flush(logs, out, err);

  std::vector<LabeledExample> examples;
  for (auto& p : pairs) {
    if (!p) continue;
    examples.push_back(std::move(p->first));
    examples.push_back(std::move(p->second));
  }
  if (examples.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "no article could be modified");
  }
  const Dataset dataset = Dataset::Assemble(std::move(examples));
  WriteJsonl(dataset, a.out);
  out << "wrote " << dataset.count(Label::kFake) << " modified and "
      << dataset.count(Label::kReal) << " original articles to " << a.out
      << "\n";
  return kExitOk;
}

// ---- extend -----------------------------------------------------------------

struct ExtendArgs {
  std::string in_dir;
  std::string out;
  std::string mode = "vanilla";
  std::string questions;
  double g = 0.01;
  std::size_t prefix_words = 500;
  double temperature = 1.0;
  std::size_t top_k = 40;
  std::size_t jobs = DefaultJobs();
};

int RunExtendQa(const ExtendArgs& a, const std::vector<Article>& articles,
                Generator& generator, std::ostream& out, std::ostream& err) {
  const std::vector<QuestionRow> rows = LoadQuestions(a.questions);
  std::unordered_map<std::string, const Article*> by_id;
  for (const Article& art : articles) by_id.emplace(art.id, &art);
  const SamplingParams sampling{a.temperature, a.top_k};

  std::vector<std::optional<AnnotationTask>> tasks(rows.size());
  std::vector<ItemLog> logs(rows.size());
  ParallelFor(rows.size(), a.jobs, [&](std::size_t i) {
    const QuestionRow& row = rows[i];
    auto it = by_id.find(row.article_id);
    if (it == by_id.end()) {
      logs[i].err = "warning: question " + std::to_string(i + 1) +
                    " names unknown article " + row.article_id + "\n";
      return;
    }
    try {
      const QaExtension x =
          ExtendWithQa(Tokenize(it->second->text), row.question, generator, sampling);
      AnnotationTask task;
      task.task_id = row.article_id + "#q" + std::to_string(i + 1);
      task.kind = TaskKind::kVeracity;
      task.article = x.article.text();
      task.question = x.question;
      task.answer = x.answer;
      task.meta["original_id"] = row.article_id;
      task.meta["removed_sentence_index"] = x.removed_sentence_index;
      task.meta["gold_answer"] = row.gold_answer;
      tasks[i] = std::move(task);
    } catch (const Error& e) {
      if (!Skippable(e.code())) throw;
      logs[i].err = "warning: skipping question " + std::to_string(i + 1) +
                    ": " + e.what() + "\n";
    }
  });
  Flush(logs, out, err);

  std::vector<AnnotationTask> kept;
  for (auto& t : tasks) {
    if (t) kept.push_back(std::move(*t));
  }
  if (kept.empty()) throw Error(ErrorCode::kEmptyDataset, "no question produced a task");
  WriteTasks(kept, a.out);
  out << "wrote " << kept.size() << " veracity tasks to " << a.out << "\n";
  return kExitOk;
}

int RunExtendVanilla(const ExtendArgs& a, const std::vector<Article>& articles,
                     Generator& generator, std::ostream& out,
                     std::ostream& err) {
  ExtensionConfig config;
  config.prefix_words = a.prefix_words;
  config.g_target = a.g;
  config.sampling = SamplingParams{a.temperature, a.top_k};
  config.Validate();

  std::vector<std::optional<std::pair<LabeledExample, LabeledExample>>> pairs(
      articles.size());
  std::vector<ItemLog> logs(articles.size());
  ParallelFor(articles.size(), a.jobs, [&](std::size_t i) {
    const Article& art = articles[i];
    try {
      const Document original = Tokenize(art.text);
      const VanillaExtension x = VanillaExtend(original, config, generator);
      const Document real_doc = LengthMatchTruncate(original, x.article);
      const std::string fake_id = art.id + "#ext";
      LabeledExample fake{fake_id, x.article.text(), Label::kFake,
                          Scenario::kVanillaExtension, Json::object()};
      fake.meta["g_target"] = a.g;
      fake.meta["g_actual"] = x.g_actual;
      fake.meta["human_words"] = x.human_words;
      fake.meta["machine_words"] = x.machine_words;
      fake.meta["original_id"] = art.id;
      LabeledExample real{art.id, real_doc.text(), Label::kReal,
                          Scenario::kVanillaExtension, Json::object()};
      real.meta["length_matched_to"] = fake_id;
      pairs[i].emplace(std::move(fake), std::move(real));
      std::ostringstream line;
      line << art.id << ": g=" << x.g_actual << " (" << x.machine_words
           << " machine words)\n";
      logs[i].out = line.str();
    } catch (const Error& e) {
      if (!Skippable(e.code())) throw;
      logs[i].err = "warning: skipping " + art.id + ": " + e.what() + "\n";
    }
  });
  Flush(logs, out, err);

  std::vector<LabeledExample> examples;
  for (auto& p : pairs) {
    if (!p) continue;
    examples.push_back(std::move(p->first));
    examples.push_back(std::move(p->second));
  }
  if (examples.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "no article could be extended");
  }
  const Dataset dataset = Dataset::Assemble(std::move(examples));
  WriteJsonl(dataset, a.out);
  out << "wrote " << dataset.size() << " examples to " << a.out << "\n";
  return kExitOk;
}

int RunExtend(const ExtendArgs& a, std::ostream& out, std::ostream& err) {
  if (a.mode == "qa" && a.questions.empty()) Usage("--mode qa needs --questions");
  const AdapterConfig config = AdapterConfig::FromEnvironment();
  JsonHttpClient client(RequireUrl(config.generator_url, "VFORGE_GENERATOR_URL"),
                        ClientOptionsFor(config));
  HttpGenerator generator(client);
  const std::vector<Article> articles = LoadArticles(a.in_dir);
  if (articles.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "no .txt articles in " + a.in_dir);
  }
  if (a.mode == "qa") return RunExtendQa(a, articles, generator, out, err);
  return RunExtendVanilla(a, articles, generator, out, err);
}

// ---- eval -------------------------------------------------------------------

struct EvalArgs {
  std::string dataset;
  std::string detector = "length-baseline";
  std::uint64_t split_seed = 0;
  double eval_fraction = kDefaultEvalFraction;
  std::string report;
  std::string roc;
  std::size_t jobs = 8;
};

std::vector<LengthExample> LengthExamples(std::span<const LabeledExample> xs) {
  std::vector<LengthExample> out;
  out.reserve(xs.size());
  for (const LabeledExample& x : xs) {
    out.push_back({Tokenize(x.text).word_count(), x.label});
  }
  return out;
}

std::vector<Label> Golds(std::span<const LabeledExample> xs) {
  std::vector<Label> out;
  out.reserve(xs.size());
  for (const LabeledExample& x : xs) out.push_back(x.label);
  return out;
}

int RunEval(const EvalArgs& a, std::ostream& out) {
  const Dataset dataset = ReadJsonl(a.dataset);
  const DatasetSplit split = Split(dataset, a.eval_fraction, a.split_seed);
  const std::vector<Label> eval_golds = Golds(split.eval);

  Json doc = Json::object();
  doc["detector"] = a.detector;
  doc["dataset"] = a.dataset;
  doc["eval_fraction"] = a.eval_fraction;
  doc["split_seed"] = a.split_seed;
  doc["n_train"] = split.train.size();
  doc["n_eval"] = split.eval.size();

  EvalReport report;
  if (a.detector == "length-baseline") {
    const auto train = LengthExamples(split.train);
    const LengthThreshold fit = FitLengthThreshold(train);
    doc["threshold"] = {{"words", fit.threshold},
                        {"fake_if_longer", fit.fake_if_longer},
                        {"train_accuracy", fit.train_accuracy}};
    report = LengthBaseline(train, LengthExamples(split.eval));
  } else if (a.detector == "majority") {
    const std::vector<Label> train_golds = Golds(split.train);
    doc["majority_label"] = std::string(LabelName(MajorityLabel(train_golds)));
    report = MajorityBaseline(train_golds, eval_golds);
  } else {
    const AdapterConfig config = AdapterConfig::FromEnvironment();
    JsonHttpClient client(RequireUrl(config.detector_url, "VFORGE_DETECTOR_URL"),
                          ClientOptionsFor(config));
    std::vector<std::string> texts;
    for (const LabeledExample& x : split.eval) texts.push_back(x.text);
    const std::vector<DetectorResponse> responses =
        DetectBatch(client, texts, a.jobs);
    std::vector<Label> preds;
    std::vector<double> scores;
    for (const DetectorResponse& r : responses) {
      preds.push_back(r.label);
      if (r.score) scores.push_back(*r.score);
    }
    if (scores.size() == preds.size()) {
      report = Evaluate(preds, eval_golds, std::span<const double>(scores));
    } else {
      report = Evaluate(preds, eval_golds);
    }
    if (!scores.empty() && scores.size() == preds.size()) {
      fs::path roc = a.roc;
      if (roc.empty() && !a.report.empty()) {
        roc = fs::path(a.report).replace_extension(".roc.csv");
      }
      if (!roc.empty() && !report.roc.empty()) {
        WriteFileAtomic(roc, RocCsv(report.roc));
      }
    }
  }
  doc["metrics"] = ReportToJson(report);

  const std::vector<std::pair<std::string, EvalReport>> rows = {
      {a.detector, report}};
  out << FormatReportTable(rows);
  if (!a.report.empty()) WriteFileAtomic(a.report, doc.dump(2) + "\n");
  return kExitOk;
}

// ---- serve ------------------------------------------------------------------

struct ServeArgs {
  std::string tasks;
  std::string journal = "annotations.journal.jsonl";
  std::string host = "127.0.0.1";
  std::optional<int> port;
  std::vector<std::string> annotators;
  std::string ui_dir;
};

int RunServe(const ServeArgs& a, std::ostream& out) {
  AnnotationService service(LoadTasks(a.tasks), a.journal,
                            ServiceOptions{a.annotators, std::chrono::seconds(600)});
  AnnotationServer server(service, a.ui_dir);
  int bound = 0;
  try {
    bound = server.Bind(a.host, a.port ? *a.port : DefaultAnnotationPort());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kIo) throw;
    throw Error(ErrorCode::kTransport, e.what());
  }
  out << "serving " << service.Stats().tasks << " tasks on http://" << a.host
      << ":" << bound << "\n"
      << std::flush;

  // SIGINT/SIGTERM stop the server. Threads started below inherit the mask,
  // so only the waiter ever sees them.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  sigset_t previous;
  pthread_sigmask(SIG_BLOCK, &signals, &previous);
  std::atomic<bool> done{false};
  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    if (!done.load()) server.Stop();
  });
  server.Listen();
  done.store(true);
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  pthread_sigmask(SIG_SETMASK, &previous, nullptr);
  return kExitOk;
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadConfig:
      return kExitUsage;
    case ErrorCode::kTransport:
    case ErrorCode::kTimeout:
    case ErrorCode::kMalformedResponse:
    case ErrorCode::kBadProbability:
    case ErrorCode::kGeneratorUnavailable:
    case ErrorCode::kGeneratorEmpty:
      return kExitExternal;
    default:
      return kExitData;
  }
}

int RunMain(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Build and evaluate machine-manipulated news datasets.",
               "vforge"};
  app.require_subcommand(1);

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train-lm", "Train an n-gram scorer");
  train_cmd->add_option("--corpus", train.corpus, "Text file or directory of .txt")
      ->required();
  train_cmd->add_option("--out", train.out, "Model output path")->required();
  train_cmd->add_option("--order", train.order, "n-gram order")
      ->check(CLI::Range(1, 8));
  train_cmd->add_option("--lambdas", train.lambdas,
                        "Interpolation weights, lowest order first")
      ->delimiter(',');

  ModifyArgs modify;
  auto* modify_cmd =
      app.add_subcommand("modify", "Flip negations in every article");
  modify_cmd->add_option("in_dir", modify.in_dir, "Directory of .txt articles")
      ->required();
  modify_cmd->add_option("out", modify.out, "Output JSONL")->required();
  modify_cmd->add_option("--m", modify.m, "Total edits (even)");
  modify_cmd->add_option("--k", modify.k, "Sampled insertion positions");
  modify_cmd->add_option("--seed", modify.seed, "Random seed");
  modify_cmd->add_option("--scorer", modify.scorer, "ngram or remote")
      ->check(CLI::IsMember({"ngram", "remote"}));
  modify_cmd->add_option("--lm", modify.lm, "Saved n-gram model");
  modify_cmd->add_option("--corpus", modify.corpus,
                         "Train the n-gram model on this corpus");
  modify_cmd->add_option("--jobs", modify.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  ExtendArgs extend;
  auto* extend_cmd =
      app.add_subcommand("extend", "Extend articles with generated text");
  extend_cmd->add_option("in_dir", extend.in_dir, "Directory of .txt articles")
      ->required();
  extend_cmd->add_option("out", extend.out,
                         "Output JSONL (tasks in qa mode, examples otherwise)")
      ->required();
  extend_cmd->add_option("--mode", extend.mode, "qa or vanilla")
      ->check(CLI::IsMember({"qa", "vanilla"}));
  extend_cmd->add_option("--questions", extend.questions,
                         "TSV of id, question, gold answer");
  extend_cmd->add_option("--g", extend.g, "Target machine fraction");
  extend_cmd->add_option("--prefix-words", extend.prefix_words,
                         "Human prefix length in words");
  extend_cmd->add_option("--temperature", extend.temperature);
  extend_cmd->add_option("--top-k", extend.top_k);
  extend_cmd->add_option("--jobs", extend.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a detector");
  eval_cmd->add_option("dataset", eval.dataset, "Dataset JSONL")->required();
  eval_cmd->add_option("--detector", eval.detector,
                       "remote, length-baseline or majority")
      ->check(CLI::IsMember({"remote", "length-baseline", "majority"}));
  eval_cmd->add_option("--split-seed", eval.split_seed);
  eval_cmd->add_option("--eval-fraction", eval.eval_fraction);
  eval_cmd->add_option("--report", eval.report, "Report JSON path");
  eval_cmd->add_option("--roc", eval.roc, "ROC CSV path");
  eval_cmd->add_option("--jobs", eval.jobs, "Concurrent detector requests")
      ->check(CLI::PositiveNumber);

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "Run the annotation service");
  serve_cmd->add_option("--tasks", serve.tasks, "Tasks JSONL")->required();
  serve_cmd->add_option("--journal", serve.journal, "Verdict journal");
  serve_cmd->add_option("--host", serve.host);
  serve_cmd->add_option("--port", serve.port, "Defaults to VFORGE_PORT or 8471")
      ->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--annotators", serve.annotators,
                        "Allowed annotator ids (default: any)")
      ->delimiter(',');
  serve_cmd->add_option("--ui-dir", serve.ui_dir, "Static UI bundle");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (train_cmd->parsed()) return RunTrain(train, out);
    if (modify_cmd->parsed()) return RunModify(modify, out, err);
    if (extend_cmd->parsed()) return RunExtend(extend, out, err);
    if (eval_cmd->parsed()) return RunEval(eval, out);
    if (serve_cmd->parsed()) return RunServe(serve, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace vforge
