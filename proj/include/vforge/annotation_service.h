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

// Human labeling queue. Tasks are loaded once from JSON Lines; verdicts go
// to an append-only JSONL journal which is replayed on startup.
//
// Task line:
//   {"task_id": "...", "kind": "veracity" | "provenance" | "modification_check",
//    "article": "...", "question": "...", "answer": "...",
//    "highlight_spans": [[begin, end], ...], "quota": 1, "meta": {...}}
// question and answer are required for veracity tasks, highlight_spans for
// modification_check tasks. Queue order is file order.

#ifndef VFORGE_ANNOTATION_SERVICE_H_
#define VFORGE_ANNOTATION_SERVICE_H_

#include <chrono>
#include <cstddef>
#include <cstdio>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vforge/dataset.h"
#include "vforge/text_core.h"

namespace httplib {
class Server;
}  // namespace httplib

namespace vforge {

enum class TaskKind { kVeracity, kProvenance, kModificationCheck };

std::string_view TaskKindName(TaskKind kind);
std::optional<TaskKind> ParseTaskKind(std::string_view name);

// Verdicts accepted for a kind: true/false/nonsensical for veracity,
// real/modified/fake otherwise.
std::span<const std::string_view> VerdictDomain(TaskKind kind);

struct AnnotationTask {
  std::string task_id;
  TaskKind kind = TaskKind::kVeracity;
  std::string article;
  std::optional<std::string> question;
  std::optional<std::string> answer;
  std::optional<std::vector<Span>> highlight_spans;
  std::size_t quota = 1;
  Json meta = Json::object();
};

Json TaskToJson(const AnnotationTask& task);
// Throws kSchema with `line` as detail.
AnnotationTask TaskFromJson(const Json& json, std::size_t line);

// Throws kIo, kSchema (detail = line) and kDuplicateId.
std::vector<AnnotationTask> LoadTasks(const std::filesystem::path& path);
void WriteTasks(std::span<const AnnotationTask> tasks,
                const std::filesystem::path& path);

// Byte spans of the negation words of `doc`, for highlighting.
std::vector<Span> NegationSpans(const Document& doc);

struct AnnotationRecord {
  std::string task_id;
  std::string annotator_id;
  std::string verdict;
  std::string timestamp;  // UTC, ISO 8601

  friend bool operator==(const AnnotationRecord&,
                         const AnnotationRecord&) = default;
};

struct AgreementReport {
  TaskKind kind = TaskKind::kVeracity;
  double kappa = 0.0;
  std::size_t n = 0;
  // table[first annotator's verdict][second annotator's verdict] = count.
  std::map<std::string, std::map<std::string, std::size_t>> table;
};

struct ExportResult {
  std::vector<LabeledExample> examples;
  std::vector<std::string> conflicts;  // task ids with contradictory verdicts
  std::size_t labeled_tasks = 0;       // tasks with at least one verdict
  std::size_t nonsensical_tasks = 0;
  std::optional<double> nonsense_rate;  // nonsensical / labeled
};

struct ServiceStats {
  std::size_t tasks = 0;
  std::size_t records = 0;
  std::size_t annotators = 0;
  std::size_t queue_depth = 0;  // tasks whose quota is not yet met
  std::size_t completed = 0;
  std::map<std::string, std::size_t> records_by_annotator;
};

struct ServiceOptions {
  // Empty: any non-empty id is registered on first use.
  std::vector<std::string> annotators;
  // How long a served task stays reserved for its annotator.
  std::chrono::seconds lease{600};
};

class AnnotationService {
 public:
  // Replays `journal` if it exists. Throws kSchema for corrupt journal lines
  // (a torn final line is dropped) and kDuplicateId for repeated task ids.
  AnnotationService(std::vector<AnnotationTask> tasks,
                    std::filesystem::path journal, ServiceOptions options = {});
  ~AnnotationService();
  AnnotationService(const AnnotationService&) = delete;
  AnnotationService& operator=(const AnnotationService&) = delete;

  // First task in queue order that this annotator has not answered and whose
  // quota is not covered by answers and other annotators' leases. Throws
  // kUnknownAnnotator.
  std::optional<AnnotationTask> NextTask(std::string_view annotator_id);

  // Journals the verdict (flushed and synced) before returning. Throws
  // kUnknownAnnotator, kUnknownTask, kBadVerdict and kDuplicateSubmission.
  AnnotationRecord Submit(std::string_view task_id,
                          std::string_view annotator_id,
                          std::string_view verdict);

  // Cohen's kappa over the first two verdicts of every task of `kind`;
  // pairs containing a nonsensical verdict are left out, and "modified"
  // counts as "fake". Throws kNoOverlap when no pair remains.
  AgreementReport Agreement(TaskKind kind = TaskKind::kVeracity) const;

  // Labeled examples from the verdicts on tasks of `kind`. Tasks with a
  // nonsensical verdict are dropped; tasks with contradictory verdicts are
  // listed in `conflicts` instead.
  ExportResult Export(TaskKind kind = TaskKind::kVeracity) const;

  ServiceStats Stats() const;
  std::vector<AnnotationRecord> Records() const;
  const AnnotationTask* FindTask(std::string_view task_id) const;

 private:
  struct Lease {
    std::size_t task = 0;
    std::chrono::steady_clock::time_point expires;
  };

  void Replay();
  void CheckAnnotator(std::string_view annotator_id) const;
  void Apply(AnnotationRecord record);

  std::vector<AnnotationTask> tasks_;
  std::unordered_map<std::string, std::size_t> task_index_;
  std::filesystem::path journal_path_;
  ServiceOptions options_;
  std::set<std::string, std::less<>> allowed_;

  mutable std::shared_mutex mu_;
  std::vector<AnnotationRecord> records_;
  std::vector<std::vector<std::size_t>> records_by_task_;
  std::map<std::string, std::set<std::size_t>, std::less<>> answered_;
  std::map<std::string, Lease, std::less<>> leases_;
  std::FILE* journal_ = nullptr;
};

// HTTP front end:
//   GET  /api/tasks/next?annotator=ID  -> {"task": {...} | null}
//   POST /api/labels {task_id, annotator_id, verdict} -> {"record": {...}}
//   GET  /api/agreement?kind=K         -> {"kappa", "n", "table"}
//   GET  /api/export?kind=K            -> {"examples", "conflicts", ...}
//   GET  /api/stats
// Errors are {"error": <code name>, "message": ...} with a 4xx status.
class AnnotationServer {
 public:
  // `ui_dir`, when non-empty, is served at "/".
  AnnotationServer(AnnotationService& service,
                   const std::filesystem::path& ui_dir = {});
  ~AnnotationServer();
  AnnotationServer(const AnnotationServer&) = delete;
  AnnotationServer& operator=(const AnnotationServer&) = delete;

  // Port 0 picks a free port. Returns the bound port; throws kIo on failure.
  int Bind(const std::string& host, int port);
  // Blocks until Stop().
  void Listen();
  // Waits until a Listen() running on another thread accepts connections.
  void WaitUntilReady();
  void Stop();

 private:
  AnnotationService& service_;
  std::unique_ptr<httplib::Server> server_;
};

// Reads VFORGE_PORT, default 8471.
int DefaultAnnotationPort();

}  // namespace vforge

#endif  // VFORGE_ANNOTATION_SERVICE_H_
