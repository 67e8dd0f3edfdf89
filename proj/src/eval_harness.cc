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
#include <cmath>
#include <cstdio>
#include <numeric>

#include "vforge/text_core.h"

namespace vforge {
namespace {

double Ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0
                  : static_cast<double>(num) / static_cast<double>(den);
}

double F1(double precision, double recall) {
  return precision + recall == 0.0
             ? 0.0
             : 2.0 * precision * recall / (precision + recall);
}

void CheckSameLength(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(a) + " vs " + std::to_string(b) + " items");
  }
}

std::string Fixed(double v, int digits) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

}  // namespace

ConfusionMatrix Confusion(std::span<const Label> predictions,
                          std::span<const Label> golds) {
  CheckSameLength(predictions.size(), golds.size());
  if (golds.empty()) throw Error(ErrorCode::kEmpty, "no predictions");
  ConfusionMatrix m;
  for (std::size_t i = 0; i < golds.size(); ++i) {
    const bool pred_fake = predictions[i] == Label::kFake;
    const bool gold_fake = golds[i] == Label::kFake;
    if (pred_fake && gold_fake) ++m.tp;
    if (pred_fake && !gold_fake) ++m.fp;
    if (!pred_fake && gold_fake) ++m.fn;
    if (!pred_fake && !gold_fake) ++m.tn;
  }
  return m;
}

EvalReport Metrics(const ConfusionMatrix& matrix) {
  if (matrix.total() == 0) throw Error(ErrorCode::kEmpty, "empty matrix");
  EvalReport r;
  r.matrix = matrix;
  r.fake_precision = Ratio(matrix.tp, matrix.tp + matrix.fp);
  r.fake_recall = Ratio(matrix.tp, matrix.tp + matrix.fn);
  r.fake_f1 = F1(r.fake_precision, r.fake_recall);
  r.real_precision = Ratio(matrix.tn, matrix.tn + matrix.fn);
  r.real_recall = Ratio(matrix.tn, matrix.tn + matrix.fp);
  r.real_f1 = F1(r.real_precision, r.real_recall);
  r.macro_f1 = (r.fake_f1 + r.real_f1) / 2.0;
  r.accuracy = Ratio(matrix.tp + matrix.tn, matrix.total());
  return r;
}

RocCurve Roc(std::span<const double> scores, std::span<const Label> golds) {
  CheckSameLength(scores.size(), golds.size());
  const auto positives = static_cast<std::size_t>(
      std::count(golds.begin(), golds.end(), Label::kFake));
  const std::size_t negatives = golds.size() - positives;
  if (positives == 0 || negatives == 0) {
    throw Error(ErrorCode::kSingleClass, "ROC needs both classes");
  }

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] > scores[b];
  });

  RocCurve curve;
  curve.points.push_back({0.0, 0.0});
  std::size_t tp = 0;
  std::size_t fp = 0;
  for (std::size_t i = 0; i < order.size();) {
    const double threshold = scores[order[i]];
    for (; i < order.size() && scores[order[i]] == threshold; ++i) {
      (golds[order[i]] == Label::kFake ? tp : fp) += 1;
    }
    const RocPoint p{Ratio(fp, negatives), Ratio(tp, positives)};
    const RocPoint& prev = curve.points.back();
    curve.auc += (p.fpr - prev.fpr) * (p.tpr + prev.tpr) / 2.0;
    curve.points.push_back(p);
  }
  return curve;
}

EvalReport Evaluate(std::span<const Label> predictions,
                    std::span<const Label> golds,
                    std::optional<std::span<const double>> scores) {
  EvalReport report = Metrics(Confusion(predictions, golds));
  const bool both_classes =
      std::find(golds.begin(), golds.end(), Label::kFake) != golds.end() &&
      std::find(golds.begin(), golds.end(), Label::kReal) != golds.end();
  if (!both_classes) return report;
  std::vector<double> hard;
  if (!scores) {
    for (Label p : predictions) hard.push_back(p == Label::kFake ? 1.0 : 0.0);
  }
  const RocCurve curve =
      Roc(scores ? *scores : std::span<const double>(hard), golds);
  report.roc = curve.points;
  report.auc = curve.auc;
  return report;
}

Label LengthThreshold::Predict(std::size_t words) const {
  const bool longer = static_cast<std::int64_t>(words) > threshold;
  return longer == fake_if_longer ? Label::kFake : Label::kReal;
}

LengthThreshold FitLengthThreshold(std::span<const LengthExample> train) {
  if (train.empty()) throw Error(ErrorCode::kEmpty, "no training examples");
  std::vector<LengthExample> sorted(train.begin(), train.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.words < b.words; });
  const std::size_t n = sorted.size();
  std::size_t fakes = 0;
  for (const auto& e : sorted) fakes += e.gold == Label::kFake ? 1 : 0;
  if (fakes == 0 || fakes == n) {
    throw Error(ErrorCode::kSingleClass, "training set has a single class");
  }

  // Threshold below every length: everything is "longer".
  std::size_t reals_at_or_below = 0;
  std::size_t fakes_at_or_below = 0;
  LengthThreshold best;
  std::size_t best_correct = 0;
  bool have_best = false;
  auto consider = [&](std::int64_t threshold) {
    const std::size_t up = (fakes - fakes_at_or_below) + reals_at_or_below;
    const std::size_t down = n - up;
    if (!have_best || up > best_correct) {
      best = {threshold, true, 0.0};
      best_correct = up;
      have_best = true;
    }
    if (down > best_correct) {
      best = {threshold, false, 0.0};
      best_correct = down;
    }
  };
  consider(static_cast<std::int64_t>(sorted.front().words) - 1);
  for (std::size_t i = 0; i < n;) {
    const std::size_t value = sorted[i].words;
    for (; i < n && sorted[i].words == value; ++i) {
      (sorted[i].gold == Label::kFake ? fakes_at_or_below : reals_at_or_below) +=
          1;
    }
    consider(static_cast<std::int64_t>(value));
  }
  best.train_accuracy = Ratio(best_correct, n);
  return best;
}

EvalReport LengthBaseline(std::span<const LengthExample> train,
                          std::span<const LengthExample> eval) {
  const LengthThreshold model = FitLengthThreshold(train);
  std::vector<Label> preds;
  std::vector<Label> golds;
  for (const auto& e : eval) {
    preds.push_back(model.Predict(e.words));
    golds.push_back(e.gold);
  }
  return Evaluate(preds, golds);
}

Label MajorityLabel(std::span<const Label> train_golds) {
  if (train_golds.empty()) throw Error(ErrorCode::kEmpty, "no training labels");
  const auto fakes =
      std::count(train_golds.begin(), train_golds.end(), Label::kFake);
  const auto reals = static_cast<std::ptrdiff_t>(train_golds.size()) - fakes;
  return fakes > reals ? Label::kFake : Label::kReal;
}

EvalReport MajorityBaseline(std::span<const Label> train_golds,
                            std::span<const Label> eval_golds) {
  const std::vector<Label> preds(eval_golds.size(), MajorityLabel(train_golds));
  return Evaluate(preds, eval_golds);
}

std::vector<LabeledExample> Slice(std::span<const LabeledExample> examples,
                                  const ExamplePredicate& predicate) {
  std::vector<LabeledExample> out;
  for (const LabeledExample& e : examples) {
    if (predicate(e)) out.push_back(e);
  }
  return out;
}

ExamplePredicate AnswerWordCountAtMost(std::size_t n) {
  return [n](const LabeledExample& e) {
    if (!e.meta.is_object()) return false;
    if (auto it = e.meta.find("answer_word_count");
        it != e.meta.end() && it->is_number_unsigned()) {
      return it->get<std::size_t>() <= n;
    }
    if (auto it = e.meta.find("answer"); it != e.meta.end() && it->is_string()) {
      return Tokenize(it->get<std::string>()).word_count() <= n;
    }
    return false;
  };
}

double TokenOverlapF1(std::string_view prediction, std::string_view gold) {
  std::vector<std::string> pred = WordTerms(Tokenize(prediction));
  std::vector<std::string> ref = WordTerms(Tokenize(gold));
  if (pred.empty() || ref.empty()) return 0.0;
  std::sort(pred.begin(), pred.end());
  std::sort(ref.begin(), ref.end());
  std::vector<std::string> common;
  std::set_intersection(pred.begin(), pred.end(), ref.begin(), ref.end(),
                        std::back_inserter(common));
  if (common.empty()) return 0.0;
  const double precision = Ratio(common.size(), pred.size());
  const double recall = Ratio(common.size(), ref.size());
  return F1(precision, recall);
}

std::vector<FractionBin> FractionCurve(std::span<const Label> predictions,
                                       std::span<const double> fractions,
                                       std::size_t bins, double range_max) {
  CheckSameLength(predictions.size(), fractions.size());
  if (bins == 0 || !(range_max > 0.0)) {
    throw Error(ErrorCode::kBadConfig, "need at least one bin and a positive range");
  }
  std::vector<FractionBin> out(bins);
  std::vector<std::size_t> reals(bins, 0);
  const double width = range_max / static_cast<double>(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    out[b].bin = b;
    out[b].lower = width * static_cast<double>(b);
    out[b].upper = b + 1 == bins ? range_max : width * static_cast<double>(b + 1);
  }
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    const double f = fractions[i];
    if (!(f >= 0.0 && f <= range_max)) {
      throw Error(ErrorCode::kOutOfRange,
                  "fraction " + std::to_string(f) + " outside [0, " +
                      std::to_string(range_max) + "]");
    }
    const auto b = std::min(
        bins - 1,
        static_cast<std::size_t>(f / range_max * static_cast<double>(bins)));
    ++out[b].n;
    reals[b] += predictions[i] == Label::kReal ? 1 : 0;
  }
  for (std::size_t b = 0; b < bins; ++b) {
    if (out[b].n > 0) out[b].real_rate = Ratio(reals[b], out[b].n);
  }
  return out;
}

Json ReportToJson(const EvalReport& report) {
  Json j = Json::object();
  j["fake_precision"] = report.fake_precision;
  j["fake_recall"] = report.fake_recall;
  j["fake_f1"] = report.fake_f1;
  j["real_precision"] = report.real_precision;
  j["real_recall"] = report.real_recall;
  j["real_f1"] = report.real_f1;
  j["macro_f1"] = report.macro_f1;
  j["accuracy"] = report.accuracy;
  j["matrix"] = {{"tp", report.matrix.tp},
                 {"fp", report.matrix.fp},
                 {"fn", report.matrix.fn},
                 {"tn", report.matrix.tn}};
  Json roc = Json::array();
  for (const RocPoint& p : report.roc) roc.push_back({p.fpr, p.tpr});
  j["roc"] = std::move(roc);
  j["auc"] = report.auc ? Json(*report.auc) : Json(nullptr);
  return j;
}

std::string FormatReportTable(
    std::span<const std::pair<std::string, EvalReport>> rows) {
  std::size_t name_width = 8;
  for (const auto& [name, report] : rows) {
    name_width = std::max(name_width, name.size());
  }
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  std::string out = pad("detector", name_width) +
                    "  precision  recall  F1      accuracy\n";
  for (const auto& [name, r] : rows) {
    out += pad(name, name_width) + "  " + pad(Fixed(r.fake_precision, 4), 9) +
           "  " + pad(Fixed(r.fake_recall, 4), 6) + "  " +
           pad(Fixed(r.macro_f1, 4), 6) + "  " + Fixed(r.accuracy, 4) + "\n";
  }
  return out;
}

std::string RocCsv(std::span<const RocPoint> points) {
  std::string out = "fpr,tpr\n";
  char buf[64];
  for (const RocPoint& p : points) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", p.fpr, p.tpr);
    out += buf;
  }
  return out;
}

}  // namespace vforge
