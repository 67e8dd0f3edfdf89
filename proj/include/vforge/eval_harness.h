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

// Detector evaluation. "fake" is the positive class throughout. Cells with a
// zero denominator score 0 (precision, recall and F1 alike).

#ifndef VFORGE_EVAL_HARNESS_H_
#define VFORGE_EVAL_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vforge/dataset.h"
#include "vforge/error.h"

namespace vforge {

struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  std::size_t total() const { return tp + fp + fn + tn; }
  friend bool operator==(const ConfusionMatrix&,
                         const ConfusionMatrix&) = default;
};

// Throws kLengthMismatch and kEmpty.
ConfusionMatrix Confusion(std::span<const Label> predictions,
                          std::span<const Label> golds);

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
};

struct EvalReport {
  double fake_precision = 0.0;
  double fake_recall = 0.0;
  double fake_f1 = 0.0;
  double real_precision = 0.0;
  double real_recall = 0.0;
  double real_f1 = 0.0;
  double macro_f1 = 0.0;  // unweighted mean of the two F1 values
  double accuracy = 0.0;
  ConfusionMatrix matrix;
  std::vector<RocPoint> roc;
  std::optional<double> auc;
};

// Scalar metrics of the matrix; roc and auc are left empty. Throws kEmpty for
// an all-zero matrix.
EvalReport Metrics(const ConfusionMatrix& matrix);

struct RocCurve {
  std::vector<RocPoint> points;  // (0,0), one per distinct score, ending (1,1)
  double auc = 0.0;              // trapezoid rule
};

// `scores` are probabilities of fake; higher means more likely fake. Throws
// kLengthMismatch and kSingleClass.
RocCurve Roc(std::span<const double> scores, std::span<const Label> golds);

// Metrics plus ROC. Without scores, the hard predictions give a single
// operating point.
EvalReport Evaluate(std::span<const Label> predictions,
                    std::span<const Label> golds,
                    std::optional<std::span<const double>> scores = {});

struct LengthExample {
  std::size_t words = 0;
  Label gold = Label::kReal;
};

// One-dimensional word-count classifier: predicts fake when the length is
// above `threshold` (or at most `threshold` when fake_if_longer is false).
struct LengthThreshold {
  std::int64_t threshold = 0;
  bool fake_if_longer = true;
  double train_accuracy = 0.0;

  Label Predict(std::size_t words) const;
};

// Threshold and direction with the best training accuracy; ties go to the
// smaller threshold, then to fake_if_longer. The search includes the
// constant classifiers. Throws kEmpty and kSingleClass.
LengthThreshold FitLengthThreshold(std::span<const LengthExample> train);

EvalReport LengthBaseline(std::span<const LengthExample> train,
                          std::span<const LengthExample> eval);

// Most frequent training label, real on ties. Throws kEmpty.
Label MajorityLabel(std::span<const Label> train_golds);

EvalReport MajorityBaseline(std::span<const Label> train_golds,
                            std::span<const Label> eval_golds);

using ExamplePredicate = std::function<bool(const LabeledExample&)>;

// Examples satisfying the predicate, order preserved.
std::vector<LabeledExample> Slice(std::span<const LabeledExample> examples,
                                  const ExamplePredicate& predicate);

// meta.answer_word_count <= n; falls back to counting meta.answer words, and
// rejects examples with neither.
ExamplePredicate AnswerWordCountAtMost(std::size_t n);

// Cohen's kappa for two raters over any ordered label type:
// (p_o - p_e) / (1 - p_e) with p_e from the marginals. Returns 1 when
// p_e = 1 (both raters used one and the same label throughout).
template <typename T>
double CohenKappa(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kLengthMismatch, "rater label lists differ in length");
  }
  if (a.empty()) throw Error(ErrorCode::kEmpty, "no rated items");
  const double n = static_cast<double>(a.size());
  std::map<T, std::pair<double, double>> marginals;
  double agree = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    marginals[a[i]].first += 1.0;
    marginals[b[i]].second += 1.0;
    if (a[i] == b[i]) agree += 1.0;
  }
  const double observed = agree / n;
  double expected = 0.0;
  for (const auto& [label, counts] : marginals) {
    expected += (counts.first / n) * (counts.second / n);
  }
  if (expected == 1.0) return 1.0;
  return (observed - expected) / (1.0 - expected);
}

// Harmonic mean of multiset word-overlap precision and recall over
// lower-cased word tokens; 0 when either side has no words.
double TokenOverlapF1(std::string_view prediction, std::string_view gold);

struct FractionBin {
  std::size_t bin = 0;
  double lower = 0.0;
  double upper = 0.0;
  std::size_t n = 0;
  std::optional<double> real_rate;  // empty for bins without examples
};

// Share of examples predicted real per equal-width bin of [0, range_max].
// range_max is 1 for machine fractions; pass the largest ratio when binning
// ratio-to-original values. Throws kLengthMismatch, kBadConfig and
// kOutOfRange.
std::vector<FractionBin> FractionCurve(std::span<const Label> predictions,
                                       std::span<const double> fractions,
                                       std::size_t bins,
                                       double range_max = 1.0);

Json ReportToJson(const EvalReport& report);

// Fixed-width table with the fake-class precision and recall, macro-F1 and
// accuracy of each named report.
std::string FormatReportTable(
    std::span<const std::pair<std::string, EvalReport>> rows);

// "fpr,tpr" header plus one line per point.
std::string RocCsv(std::span<const RocPoint> points);

}  // namespace vforge

#endif  // VFORGE_EVAL_HARNESS_H_
