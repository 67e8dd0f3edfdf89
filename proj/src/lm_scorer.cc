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

#include "vforge/lm_scorer.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "vforge/error.h"

namespace vforge {
namespace {

constexpr double kWeightSumTolerance = 1e-9;

std::string HexDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%a", v);
  return buf;
}

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kModelFormat, what);
}

}  // namespace

std::vector<double> Scorer::ScoreCandidates(
    std::span<const std::string> context,
    std::span<const std::string> candidates) const {
  std::vector<double> out;
  out.reserve(candidates.size());
  for (const std::string& c : candidates) {
    out.push_back(NextTokenProb(context, c));
  }
  return out;
}

std::size_t NgramModel::HistoryHash::operator()(
    const std::vector<std::int32_t>& h) const {
  std::size_t seed = h.size();
  for (std::int32_t v : h) {
    seed ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) +
            (seed >> 2);
  }
  return seed;
}

void NgramModel::Validate() const {
  if (order_ < 1) {
    throw Error(ErrorCode::kBadWeights, "order must be at least 1");
  }
  if (lambdas_.size() != static_cast<std::size_t>(order_)) {
    throw Error(ErrorCode::kBadWeights, "expected " + std::to_string(order_) +
                                            " interpolation weights, got " +
                                            std::to_string(lambdas_.size()));
  }
  double sum = 0.0;
  for (double l : lambdas_) {
    if (!(l >= 0.0) || !std::isfinite(l)) {
      throw Error(ErrorCode::kBadWeights, "weights must be non-negative");
    }
    sum += l;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw Error(ErrorCode::kBadWeights, "weights must sum to 1");
  }
}

NgramModel NgramModel::Train(std::span<const Document> corpus, int order,
                             std::vector<double> lambdas) {
  NgramModel model;
  model.order_ = order;
  model.lambdas_ = std::move(lambdas);
  model.Validate();

  std::vector<std::vector<std::string>> sequences;
  sequences.reserve(corpus.size());
  std::set<std::string> terms;
  for (const Document& doc : corpus) {
    sequences.push_back(WordTerms(doc));
    terms.insert(sequences.back().begin(), sequences.back().end());
  }
  if (terms.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "corpus has no word tokens");
  }

  model.vocab_.reserve(terms.size() + 1);
  model.vocab_.emplace_back(kUnknownTerm);
  for (const std::string& t : terms) {
    model.ids_.emplace(t, static_cast<std::int32_t>(model.vocab_.size()));
    model.vocab_.push_back(t);
  }
  model.unigram_.assign(model.vocab_.size(), 0);
  model.levels_.resize(static_cast<std::size_t>(order - 1));

  std::vector<std::int32_t> ids;
  std::vector<std::int32_t> history;
  for (const auto& seq : sequences) {
    ids.clear();
    for (const std::string& t : seq) ids.push_back(model.ids_.at(t));
    for (std::size_t j = 0; j < ids.size(); ++j) {
      ++model.unigram_[ids[j]];
      ++model.total_;
      for (int k = 2; k <= order; ++k) {
        const auto hist_len = static_cast<std::size_t>(k - 1);
        if (j < hist_len) break;
        history.assign(ids.begin() + static_cast<std::ptrdiff_t>(j - hist_len),
                       ids.begin() + static_cast<std::ptrdiff_t>(j));
        Successors& succ = model.levels_[k - 2][history];
        ++succ.total;
        ++succ.counts[ids[j]];
      }
    }
  }
  return model;
}

std::int32_t NgramModel::IdOf(std::string_view term) const {
  auto it = ids_.find(std::string(term));
  return it == ids_.end() ? 0 : it->second;
}

double NgramModel::NextTokenProb(std::span<const std::string> context,
                                 std::string_view candidate) const {
  const std::int32_t target = IdOf(Lowercase(candidate));
  const double denom =
      static_cast<double>(total_) + static_cast<double>(vocab_.size());
  double level_prob = (static_cast<double>(unigram_[target]) + 1.0) / denom;
  double prob = lambdas_[0] * level_prob;

  std::vector<std::int32_t> history;
  for (int k = 2; k <= order_; ++k) {
    const auto hist_len = static_cast<std::size_t>(k - 1);
    if (context.size() >= hist_len) {
      history.clear();
      for (std::size_t i = context.size() - hist_len; i < context.size(); ++i) {
        history.push_back(IdOf(Lowercase(context[i])));
      }
      const Level& level = levels_[k - 2];
      auto it = level.find(history);
      if (it != level.end()) {
        auto c = it->second.counts.find(target);
        const double count =
            c == it->second.counts.end() ? 0.0 : static_cast<double>(c->second);
        level_prob = count / static_cast<double>(it->second.total);
      }
    }
    prob += lambdas_[k - 1] * level_prob;
  }
  return prob;
}

void NgramModel::Save(std::ostream& out) const {
  out << kNgramMagic << '\n';
  out << "order " << order_ << '\n';
  out << "lambdas";
  for (double l : lambdas_) out << ' ' << HexDouble(l);
  out << '\n';
  out << "vocab " << vocab_.size() - 1 << '\n';
  for (std::size_t i = 1; i < vocab_.size(); ++i) out << vocab_[i] << '\n';
  std::size_t nonzero = 0;
  for (std::uint64_t c : unigram_) nonzero += c > 0 ? 1 : 0;
  out << "counts 1 " << nonzero << '\n';
  for (std::size_t i = 0; i < unigram_.size(); ++i) {
    if (unigram_[i] > 0) out << i << ' ' << unigram_[i] << '\n';
  }
  for (int k = 2; k <= order_; ++k) {
    std::map<std::vector<std::int32_t>, std::uint64_t> sorted;
    for (const auto& [hist, succ] : levels_[k - 2]) {
      for (const auto& [next, count] : succ.counts) {
        std::vector<std::int32_t> key = hist;
        key.push_back(next);
        sorted.emplace(std::move(key), count);
      }
    }
    out << "counts " << k << ' ' << sorted.size() << '\n';
    for (const auto& [key, count] : sorted) {
      for (std::int32_t id : key) out << id << ' ';
      out << count << '\n';
    }
  }
  out << "end\n";
}

NgramModel NgramModel::Load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) Malformed("empty model file");
  if (line != kNgramMagic) {
    if (line.rfind("VFORGE-NGRAM-", 0) == 0) {
      throw Error(ErrorCode::kVersionMismatch,
                  "expected " + std::string(kNgramMagic) + ", found " + line);
    }
    Malformed("missing model header");
  }

  NgramModel model;
  std::string keyword;
  auto expect = [&](std::string_view want) {
    if (!(in >> keyword) || keyword != want) {
      Malformed("expected '" + std::string(want) + "'");
    }
  };

  expect("order");
  if (!(in >> model.order_) || model.order_ < 1 || model.order_ > 16) {
    Malformed("bad order");
  }
  expect("lambdas");
  for (int k = 0; k < model.order_; ++k) {
    std::string token;
    if (!(in >> token)) Malformed("missing interpolation weight");
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0') Malformed("bad weight " + token);
    model.lambdas_.push_back(v);
  }
  model.Validate();

  std::size_t vocab_size = 0;
  expect("vocab");
  if (!(in >> vocab_size)) Malformed("bad vocabulary size");
  model.vocab_.emplace_back(kUnknownTerm);
  for (std::size_t i = 0; i < vocab_size; ++i) {
    std::string term;
    if (!(in >> term)) Malformed("truncated vocabulary");
    if (!model.ids_.emplace(term, static_cast<std::int32_t>(i + 1)).second) {
      Malformed("duplicate vocabulary term " + term);
    }
    model.vocab_.push_back(std::move(term));
  }
  model.unigram_.assign(model.vocab_.size(), 0);
  model.levels_.resize(static_cast<std::size_t>(model.order_ - 1));

  auto read_id = [&]() {
    std::int64_t id = -1;
    if (!(in >> id) || id < 0 ||
        static_cast<std::size_t>(id) >= model.vocab_.size()) {
      Malformed("bad term id");
    }
    return static_cast<std::int32_t>(id);
  };
  auto read_count = [&]() {
    std::uint64_t c = 0;
    if (!(in >> c) || c == 0) Malformed("bad count");
    return c;
  };

  for (int k = 1; k <= model.order_; ++k) {
    int level = 0;
    std::size_t entries = 0;
    expect("counts");
    if (!(in >> level >> entries) || level != k) Malformed("bad counts header");
    for (std::size_t e = 0; e < entries; ++e) {
      std::vector<std::int32_t> key;
      for (int j = 0; j < k; ++j) key.push_back(read_id());
      const std::uint64_t count = read_count();
      if (k == 1) {
        model.unigram_[key[0]] += count;
        model.total_ += count;
      } else {
        const std::int32_t next = key.back();
        key.pop_back();
        Successors& succ = model.levels_[k - 2][key];
        succ.total += count;
        succ.counts[next] += count;
      }
    }
  }
  expect("end");
  if (model.total_ == 0) {
    throw Error(ErrorCode::kEmptyCorpus, "model has no unigram counts");
  }
  return model;
}

}  // namespace vforge
