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

#include "vforge/annotation_service.h"

#include <unistd.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <ctime>
#include <mutex>
#include <sstream>
#include <utility>

#include "httplib.h"
#include "vforge/error.h"
#include "vforge/eval_harness.h"

namespace vforge {
namespace {

namespace fs = std::filesystem;

constexpr std::array<std::string_view, 3> kVeracityVerdicts = {
    "true", "false", "nonsensical"};
constexpr std::array<std::string_view, 3> kProvenanceVerdicts = {
    "real", "modified", "fake"};

[[noreturn]] void SchemaError(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kSchema,
              "line " + std::to_string(line) + ": " + what,
              static_cast<std::int64_t>(line));
}

std::optional<std::string> OptionalString(const Json& json,
                                          std::string_view key,
                                          std::size_t line) {
  auto it = json.find(key);
  if (it == json.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) SchemaError(line, std::string(key) + " must be a string");
  return it->get<std::string>();
}

bool InDomain(TaskKind kind, std::string_view verdict) {
  const auto domain = VerdictDomain(kind);
  return std::find(domain.begin(), domain.end(), verdict) != domain.end();
}

// real/fake view of a verdict; empty for nonsensical.
std::optional<Label> VerdictLabel(std::string_view verdict) {
  if (verdict == "true" || verdict == "real") return Label::kReal;
  if (verdict == "false" || verdict == "fake" || verdict == "modified") {
    return Label::kFake;
  }
  return std::nullopt;
}

std::string AgreementCategory(std::string_view verdict) {
  if (verdict == "modified") return "fake";
  return std::string(verdict);
}

std::string UtcTimestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t secs = std::chrono::system_clock::to_time_t(now);
  const auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                          now.time_since_epoch())
                          .count() %
                      1000;
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[40];
  const std::size_t n = std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%S", &tm);
  std::snprintf(buf + n, sizeof(buf) - n, ".%03dZ", static_cast<int>(millis));
  return buf;
}

Json RecordToJson(const AnnotationRecord& r) {
  Json j = Json::object();
  j["task_id"] = r.task_id;
  j["annotator_id"] = r.annotator_id;
  j["verdict"] = r.verdict;
  j["timestamp"] = r.timestamp;
  return j;
}

int StatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownAnnotator: return 403;
    case ErrorCode::kUnknownTask: return 404;
    case ErrorCode::kDuplicateSubmission:
    case ErrorCode::kNoOverlap: return 409;
    case ErrorCode::kBadVerdict:
    case ErrorCode::kSchema:
    case ErrorCode::kBadConfig: return 400;
    default: return 500;
  }
}

void Reply(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void ReplyError(httplib::Response& res, ErrorCode code, const std::string& msg) {
  Json body = Json::object();
  body["error"] = std::string(ErrorCodeName(code));
  body["message"] = msg;
  Reply(res, StatusFor(code), body);
}

TaskKind KindParam(const httplib::Request& req) {
  if (!req.has_param("kind")) return TaskKind::kVeracity;
  const std::string name = req.get_param_value("kind");
  const auto kind = ParseTaskKind(name);
  if (!kind) throw Error(ErrorCode::kBadConfig, "unknown task kind \"" + name + "\"");
  return *kind;
}

}  // namespace

std::string_view TaskKindName(TaskKind kind) {
  switch (kind) {
    case TaskKind::kVeracity: return "veracity";
    case TaskKind::kProvenance: return "provenance";
    case TaskKind::kModificationCheck: return "modification_check";
  }
  return "veracity";
}

std::optional<TaskKind> ParseTaskKind(std::string_view name) {
  if (name == "veracity") return TaskKind::kVeracity;
  if (name == "provenance") return TaskKind::kProvenance;
  if (name == "modification_check") return TaskKind::kModificationCheck;
  return std::nullopt;
}

std::span<const std::string_view> VerdictDomain(TaskKind kind) {
  if (kind == TaskKind::kVeracity) return kVeracityVerdicts;
  return kProvenanceVerdicts;
}

Json TaskToJson(const AnnotationTask& task) {
  Json j = Json::object();
  j["task_id"] = task.task_id;
  j["kind"] = std::string(TaskKindName(task.kind));
  j["article"] = task.article;
  if (task.question) j["question"] = *task.question;
  if (task.answer) j["answer"] = *task.answer;
  if (task.highlight_spans) {
    Json spans = Json::array();
    for (const Span& s : *task.highlight_spans) {
      spans.push_back(Json::array({s.begin, s.end}));
    }
    j["highlight_spans"] = std::move(spans);
  }
  j["quota"] = task.quota;
  j["meta"] = task.meta;
  return j;
}

AnnotationTask TaskFromJson(const Json& json, std::size_t line) {
  if (!json.is_object()) SchemaError(line, "task must be a JSON object");
  static constexpr std::array<std::string_view, 8> kFields = {
      "task_id", "kind",  "article", "question",
      "answer",  "highlight_spans", "quota", "meta"};
  for (const auto& [key, value] : json.items()) {
    if (std::find(kFields.begin(), kFields.end(), key) == kFields.end()) {
      SchemaError(line, "unknown field \"" + key + "\"");
    }
  }
  AnnotationTask task;
  const auto id = OptionalString(json, "task_id", line);
  if (!id || id->empty()) SchemaError(line, "task_id is required");
  task.task_id = *id;
  const auto kind_name = OptionalString(json, "kind", line);
  if (!kind_name) SchemaError(line, "kind is required");
  const auto kind = ParseTaskKind(*kind_name);
  if (!kind) SchemaError(line, "unknown kind \"" + *kind_name + "\"");
  task.kind = *kind;
  const auto article = OptionalString(json, "article", line);
  if (!article) SchemaError(line, "article is required");
  task.article = *article;
  task.question = OptionalString(json, "question", line);
  task.answer = OptionalString(json, "answer", line);

  if (auto it = json.find("highlight_spans"); it != json.end() && !it->is_null()) {
    if (!it->is_array()) SchemaError(line, "highlight_spans must be an array");
    std::vector<Span> spans;
    for (const Json& s : *it) {
      if (!s.is_array() || s.size() != 2 || !s[0].is_number_unsigned() ||
          !s[1].is_number_unsigned()) {
        SchemaError(line, "highlight span must be [begin, end]");
      }
      const Span span{s[0].get<std::size_t>(), s[1].get<std::size_t>()};
      if (span.begin > span.end || span.end > task.article.size()) {
        SchemaError(line, "highlight span outside the article");
      }
      spans.push_back(span);
    }
    task.highlight_spans = std::move(spans);
  }
  if (auto it = json.find("quota"); it != json.end() && !it->is_null()) {
    if (!it->is_number_unsigned() || it->get<std::size_t>() == 0) {
      SchemaError(line, "quota must be a positive integer");
    }
    task.quota = it->get<std::size_t>();
  }
  if (auto it = json.find("meta"); it != json.end() && !it->is_null()) {
    if (!it->is_object()) SchemaError(line, "meta must be an object");
    task.meta = *it;
  }

  if (task.kind == TaskKind::kVeracity && (!task.question || !task.answer)) {
    SchemaError(line, "veracity tasks need question and answer");
  }
  if (task.kind == TaskKind::kModificationCheck && !task.highlight_spans) {
    SchemaError(line, "modification_check tasks need highlight_spans");
  }
  return task;
}

std::vector<AnnotationTask> LoadTasks(const fs::path& path) {
  std::istringstream in(ReadFile(path));
  std::vector<AnnotationTask> tasks;
  std::set<std::string, std::less<>> seen;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json json;
    try {
      json = Json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      SchemaError(number, std::string("invalid JSON: ") + e.what());
    }
    AnnotationTask task = TaskFromJson(json, number);
    if (!seen.insert(task.task_id).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "line " + std::to_string(number) + ": task id \"" +
                      task.task_id + "\" repeats",
                  static_cast<std::int64_t>(number));
    }
    tasks.push_back(std::move(task));
  }
  return tasks;
}

void WriteTasks(std::span<const AnnotationTask> tasks, const fs::path& path) {
  std::vector<Json> lines;
  lines.reserve(tasks.size());
  for (const AnnotationTask& t : tasks) lines.push_back(TaskToJson(t));
  WriteJsonLines(lines, path);
}

std::vector<Span> NegationSpans(const Document& doc) {
  std::vector<Span> spans;
  for (std::size_t i : NegationOccurrences(doc)) {
    spans.push_back(doc.tokens()[i].span);
  }
  return spans;
}

AnnotationService::AnnotationService(std::vector<AnnotationTask> tasks,
                                     fs::path journal, ServiceOptions options)
    : tasks_(std::move(tasks)),
      journal_path_(std::move(journal)),
      options_(std::move(options)),
      allowed_(options_.annotators.begin(), options_.annotators.end()) {
  for (std::size_t i = 0; i < tasks_.size(); ++i) {
    if (!task_index_.emplace(tasks_[i].task_id, i).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "task id \"" + tasks_[i].task_id + "\" repeats");
    }
  }
  records_by_task_.resize(tasks_.size());
  Replay();
  journal_ = std::fopen(journal_path_.c_str(), "ab");
  if (journal_ == nullptr) {
    throw Error(ErrorCode::kIo, "cannot open journal " + journal_path_.string());
  }
}

AnnotationService::~AnnotationService() {
  if (journal_ != nullptr) std::fclose(journal_);
}

void AnnotationService::Replay() {
  std::error_code ec;
  if (!fs::exists(journal_path_, ec)) return;
  std::string data = ReadFile(journal_path_);
  // An unterminated last line was never acknowledged; cut it off so later
  // appends start on a fresh line.
  const std::size_t keep = data.rfind('\n') == std::string::npos
                               ? 0
                               : data.rfind('\n') + 1;
  if (keep != data.size()) {
    data.resize(keep);
    fs::resize_file(journal_path_, keep);
  }
  std::istringstream in(data);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      SchemaError(number, "corrupt journal entry");
    }
    AnnotationRecord r;
    try {
      r.task_id = j.at("task_id").get<std::string>();
      r.annotator_id = j.at("annotator_id").get<std::string>();
      r.verdict = j.at("verdict").get<std::string>();
      r.timestamp = j.at("timestamp").get<std::string>();
    } catch (const nlohmann::json::exception&) {
      SchemaError(number, "journal entry lacks a field");
    }
    auto it = task_index_.find(r.task_id);
    if (it == task_index_.end()) {
      SchemaError(number, "journal names unknown task \"" + r.task_id + "\"");
    }
    if (!InDomain(tasks_[it->second].kind, r.verdict)) {
      SchemaError(number, "journal verdict \"" + r.verdict + "\" out of domain");
    }
    auto seen = answered_.find(r.annotator_id);
    if (seen != answered_.end() && seen->second.count(it->second) != 0) {
      SchemaError(number, "journal repeats a submission");
    }
    Apply(std::move(r));
  }
}

void AnnotationService::Apply(AnnotationRecord record) {
  const std::size_t task = task_index_.at(record.task_id);
  answered_[record.annotator_id].insert(task);
  records_by_task_[task].push_back(records_.size());
  records_.push_back(std::move(record));
}

void AnnotationService::CheckAnnotator(std::string_view annotator_id) const {
  if (annotator_id.empty()) {
    throw Error(ErrorCode::kUnknownAnnotator, "annotator id is empty");
  }
  if (!allowed_.empty() && allowed_.find(annotator_id) == allowed_.end()) {
    throw Error(ErrorCode::kUnknownAnnotator,
                "annotator \"" + std::string(annotator_id) + "\" is not registered");
  }
}

std::optional<AnnotationTask> AnnotationService::NextTask(
    std::string_view annotator_id) {
  CheckAnnotator(annotator_id);
  std::unique_lock lock(mu_);
  const auto now = std::chrono::steady_clock::now();
  std::erase_if(leases_, [&](const auto& kv) { return kv.second.expires <= now; });

  const auto answered_it = answered_.find(annotator_id);
  auto answered = [&](std::size_t t) {
    return answered_it != answered_.end() && answered_it->second.count(t) != 0;
  };

  if (auto own = leases_.find(annotator_id); own != leases_.end()) {
    if (!answered(own->second.task)) {
      own->second.expires = now + options_.lease;
      return tasks_[own->second.task];
    }
    leases_.erase(own);
  }

  std::vector<std::size_t> leased(tasks_.size(), 0);
  for (const auto& [who, lease] : leases_) ++leased[lease.task];

  for (std::size_t t = 0; t < tasks_.size(); ++t) {
    if (answered(t)) continue;
    if (records_by_task_[t].size() + leased[t] >= tasks_[t].quota) continue;
    leases_[std::string(annotator_id)] = Lease{t, now + options_.lease};
    return tasks_[t];
  }
  return std::nullopt;
}

AnnotationRecord AnnotationService::Submit(std::string_view task_id,
                                           std::string_view annotator_id,
                                           std::string_view verdict) {
  CheckAnnotator(annotator_id);
  std::unique_lock lock(mu_);
  auto it = task_index_.find(std::string(task_id));
  if (it == task_index_.end()) {
    throw Error(ErrorCode::kUnknownTask,
                "no task \"" + std::string(task_id) + "\"");
  }
  const AnnotationTask& task = tasks_[it->second];
  if (!InDomain(task.kind, verdict)) {
    throw Error(ErrorCode::kBadVerdict,
                "verdict \"" + std::string(verdict) + "\" is not valid for " +
                    std::string(TaskKindName(task.kind)) + " tasks");
  }
  if (auto a = answered_.find(annotator_id);
      a != answered_.end() && a->second.count(it->second) != 0) {
    throw Error(ErrorCode::kDuplicateSubmission,
                std::string(annotator_id) + " already answered " + task.task_id);
  }

  AnnotationRecord record{task.task_id, std::string(annotator_id),
                          std::string(verdict), UtcTimestamp()};
  const std::string line = RecordToJson(record).dump() + "\n";
  if (std::fwrite(line.data(), 1, line.size(), journal_) != line.size() ||
      std::fflush(journal_) != 0 || ::fsync(::fileno(journal_)) != 0) {
    throw Error(ErrorCode::kIo, "cannot append to " + journal_path_.string());
  }
  Apply(record);
  if (auto lease = leases_.find(annotator_id);
      lease != leases_.end() && lease->second.task == it->second) {
    leases_.erase(lease);
  }
  return record;
}

AgreementReport AnnotationService::Agreement(TaskKind kind) const {
  std::shared_lock lock(mu_);
  AgreementReport report;
  report.kind = kind;
  std::vector<std::string> a;
  std::vector<std::string> b;
  for (std::size_t t = 0; t < tasks_.size(); ++t) {
    if (tasks_[t].kind != kind || records_by_task_[t].size() < 2) continue;
    const std::string& va = records_[records_by_task_[t][0]].verdict;
    const std::string& vb = records_[records_by_task_[t][1]].verdict;
    if (!VerdictLabel(va) || !VerdictLabel(vb)) continue;
    a.push_back(AgreementCategory(va));
    b.push_back(AgreementCategory(vb));
    ++report.table[a.back()][b.back()];
  }
  if (a.empty()) {
    throw Error(ErrorCode::kNoOverlap,
                "no doubly annotated " + std::string(TaskKindName(kind)) +
                    " tasks");
  }
  report.n = a.size();
  report.kappa = CohenKappa<std::string>(a, b);
  return report;
}

ExportResult AnnotationService::Export(TaskKind kind) const {
  std::shared_lock lock(mu_);
  ExportResult out;
  for (std::size_t t = 0; t < tasks_.size(); ++t) {
    const AnnotationTask& task = tasks_[t];
    if (task.kind != kind || records_by_task_[t].empty()) continue;
    ++out.labeled_tasks;
    bool nonsensical = false;
    std::set<Label> labels;
    Json verdicts = Json::array();
    for (std::size_t r : records_by_task_[t]) {
      const std::string& v = records_[r].verdict;
      verdicts.push_back(v);
      if (auto label = VerdictLabel(v)) {
        labels.insert(*label);
      } else {
        nonsensical = true;
      }
    }
    if (nonsensical) {
      ++out.nonsensical_tasks;
      continue;
    }
    if (labels.size() > 1) {
      out.conflicts.push_back(task.task_id);
      continue;
    }

    LabeledExample e;
    e.id = task.task_id;
    e.label = *labels.begin();
    e.meta = task.meta;
    e.meta["verdicts"] = std::move(verdicts);
    if (kind == TaskKind::kVeracity) {
      e.scenario = Scenario::kQaExtension;
      e.text = task.article;
      if (!e.text.empty() && !std::isspace(static_cast<unsigned char>(e.text.back()))) {
        e.text += ' ';
      }
      e.text += *task.answer;
      e.meta["question"] = *task.question;
      e.meta["answer"] = *task.answer;
      e.meta["answer_word_count"] = Tokenize(*task.answer).word_count();
    } else {
      e.text = task.article;
      e.scenario = kind == TaskKind::kModificationCheck
                       ? Scenario::kModification
                       : Scenario::kFullGeneration;
      if (auto s = task.meta.find("scenario"); s != task.meta.end() && s->is_string()) {
        if (auto parsed = ParseScenario(s->get<std::string>())) e.scenario = *parsed;
      }
    }
    out.examples.push_back(std::move(e));
  }
  if (out.labeled_tasks > 0) {
    out.nonsense_rate = static_cast<double>(out.nonsensical_tasks) /
                        static_cast<double>(out.labeled_tasks);
  }
  return out;
}

ServiceStats AnnotationService::Stats() const {
  std::shared_lock lock(mu_);
  ServiceStats s;
  s.tasks = tasks_.size();
  s.records = records_.size();
  for (const AnnotationRecord& r : records_) ++s.records_by_annotator[r.annotator_id];
  std::set<std::string> annotators(allowed_.begin(), allowed_.end());
  for (const auto& [who, n] : s.records_by_annotator) annotators.insert(who);
  s.annotators = annotators.size();
  for (std::size_t t = 0; t < tasks_.size(); ++t) {
    if (records_by_task_[t].size() >= tasks_[t].quota) {
      ++s.completed;
    } else {
      ++s.queue_depth;
    }
  }
  return s;
}

std::vector<AnnotationRecord> AnnotationService::Records() const {
  std::shared_lock lock(mu_);
  return records_;
}

const AnnotationTask* AnnotationService::FindTask(std::string_view task_id) const {
  auto it = task_index_.find(std::string(task_id));
  return it == task_index_.end() ? nullptr : &tasks_[it->second];
}

AnnotationServer::AnnotationServer(AnnotationService& service,
                                   const fs::path& ui_dir)
    : service_(service), server_(std::make_unique<httplib::Server>()) {
  httplib::Server& srv = *server_;

  // Runs `body`, mapping toolkit errors onto JSON error replies.
  auto guarded = [](auto body) {
    return [body](const httplib::Request& req, httplib::Response& res) {
      try {
        body(req, res);
      } catch (const Error& e) {
        ReplyError(res, e.code(), e.what());
      } catch (const nlohmann::json::exception& e) {
        ReplyError(res, ErrorCode::kSchema, e.what());
      }
    };
  };

  srv.Get("/api/tasks/next", guarded([this](const httplib::Request& req,
                                            httplib::Response& res) {
            const std::string id = req.get_param_value("annotator");
            const auto task = service_.NextTask(id);
            Json body = Json::object();
            if (task) {
              Json t = TaskToJson(*task);
              Json domain = Json::array();
              for (std::string_view v : VerdictDomain(task->kind)) {
                domain.push_back(std::string(v));
              }
              t["verdicts"] = std::move(domain);
              body["task"] = std::move(t);
            } else {
              body["task"] = nullptr;
            }
            Reply(res, 200, body);
          }));

  srv.Post("/api/labels", guarded([this](const httplib::Request& req,
                                         httplib::Response& res) {
             Json in;
             try {
               in = Json::parse(req.body);
             } catch (const nlohmann::json::parse_error&) {
               throw Error(ErrorCode::kSchema, "request body is not JSON");
             }
             if (!in.is_object()) {
               throw Error(ErrorCode::kSchema, "request body must be an object");
             }
             const AnnotationRecord r = service_.Submit(
                 in.at("task_id").get<std::string>(),
                 in.at("annotator_id").get<std::string>(),
                 in.at("verdict").get<std::string>());
             Json body = Json::object();
             body["record"] = RecordToJson(r);
             Reply(res, 200, body);
           }));

  srv.Get("/api/agreement", guarded([this](const httplib::Request& req,
                                           httplib::Response& res) {
            const AgreementReport r = service_.Agreement(KindParam(req));
            Json body = Json::object();
            body["kind"] = std::string(TaskKindName(r.kind));
            body["kappa"] = r.kappa;
            body["n"] = r.n;
            Json table = Json::object();
            for (const auto& [va, row] : r.table) {
              for (const auto& [vb, count] : row) table[va][vb] = count;
            }
            body["table"] = std::move(table);
            Reply(res, 200, body);
          }));

  srv.Get("/api/export", guarded([this](const httplib::Request& req,
                                        httplib::Response& res) {
            const TaskKind kind = KindParam(req);
            const ExportResult r = service_.Export(kind);
            Json body = Json::object();
            body["kind"] = std::string(TaskKindName(kind));
            Json examples = Json::array();
            std::size_t real = 0;
            for (const LabeledExample& e : r.examples) {
              if (e.label == Label::kReal) ++real;
              examples.push_back(ToJson(e));
            }
            body["examples"] = std::move(examples);
            body["counts"] = {{"real", real}, {"fake", r.examples.size() - real}};
            body["conflicts"] = r.conflicts;
            body["labeled_tasks"] = r.labeled_tasks;
            body["nonsensical_tasks"] = r.nonsensical_tasks;
            body["nonsense_rate"] =
                r.nonsense_rate ? Json(*r.nonsense_rate) : Json(nullptr);
            Reply(res, 200, body);
          }));

  srv.Get("/api/stats", guarded([this](const httplib::Request&,
                                       httplib::Response& res) {
            const ServiceStats s = service_.Stats();
            Json body = Json::object();
            body["tasks"] = s.tasks;
            body["records"] = s.records;
            body["annotators"] = s.annotators;
            body["queue_depth"] = s.queue_depth;
            body["completed"] = s.completed;
            body["records_by_annotator"] = s.records_by_annotator;
            Reply(res, 200, body);
          }));

  if (!ui_dir.empty() && !srv.set_mount_point("/", ui_dir.string())) {
    throw Error(ErrorCode::kIo, "cannot serve UI directory " + ui_dir.string());
  }
}

AnnotationServer::~AnnotationServer() { Stop(); }

int AnnotationServer::Bind(const std::string& host, int port) {
  // No SO_REUSEPORT: a second server on a busy port must fail to bind.
  server_->set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  if (port == 0) {
    const int bound = server_->bind_to_any_port(host);
    if (bound < 0) throw Error(ErrorCode::kIo, "cannot bind " + host);
    return bound;
  }
  if (!server_->bind_to_port(host, port)) {
    throw Error(ErrorCode::kIo,
                "cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

void AnnotationServer::Listen() { server_->listen_after_bind(); }

void AnnotationServer::WaitUntilReady() { server_->wait_until_ready(); }

void AnnotationServer::Stop() {
  if (server_ && server_->is_running()) server_->stop();
}

int DefaultAnnotationPort() {
  const char* v = std::getenv("VFORGE_PORT");
  if (v == nullptr || *v == '\0') return 8471;
  char* end = nullptr;
  const long port = std::strtol(v, &end, 10);
  if (*end != '\0' || port < 1 || port > 65535) {
    throw Error(ErrorCode::kBadConfig, std::string("bad VFORGE_PORT: ") + v);
  }
  return static_cast<int>(port);
}

}  // namespace vforge
