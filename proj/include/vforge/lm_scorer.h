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

#ifndef VFORGE_LM_SCORER_H_
#define VFORGE_LM_SCORER_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vforge/text_core.h"

namespace vforge {

inline constexpr std::size_t kUnboundedContext =
    std::numeric_limits<std::size_t>::max();

// Source of next-token probabilities over lower-cased word terms.
// Implementations must be deterministic and safe to call concurrently.
class Scorer {
 public:
  virtual ~Scorer() = default;

  virtual double NextTokenProb(std::span<const std::string> context,
                               std::string_view candidate) const = 0;

  // One probability per candidate, in order. Remote scorers override this to
  // batch the request.
  virtual std::vector<double> ScoreCandidates(
      std::span<const std::string> context,
      std::span<const std::string> candidates) const;

  // How many trailing context terms influence the result. Callers may trim
  // longer contexts to this length.
  virtual std::size_t context_window() const { return kUnboundedContext; }
};

inline constexpr std::string_view kNgramMagic = "VFORGE-NGRAM-1";
inline constexpr std::string_view kUnknownTerm = "<unk>";

// Interpolated n-gram model:
//   P(t | c) = sum_k lambda_k * P_k(t | last k-1 terms of c)
// P_1 is add-one smoothed over the vocabulary plus the unknown symbol. For
// k >= 2, P_k is the maximum-likelihood estimate when the history was seen in
// training and falls back to P_{k-1} otherwise, so every level is normalized.
// Probabilities are strictly positive whenever lambda_1 > 0.
class NgramModel final : public Scorer {
 public:
  static constexpr int kDefaultOrder = 3;
  static std::vector<double> DefaultLambdas() { return {0.1, 0.3, 0.6}; }

  // Throws kEmptyCorpus when the corpus has no word tokens and kBadWeights
  // unless `lambdas` holds `order` non-negative weights summing to 1.
  static NgramModel Train(std::span<const Document> corpus,
                          int order = kDefaultOrder,
                          std::vector<double> lambdas = DefaultLambdas());

  // Text dump starting with kNgramMagic. Load throws kVersionMismatch for a
  // dump of another format version and kModelFormat for anything malformed.
  void Save(std::ostream& out) const;
  static NgramModel Load(std::istream& in);

  double NextTokenProb(std::span<const std::string> context,
                       std::string_view candidate) const override;
  std::size_t context_window() const override {
    return static_cast<std::size_t>(order_ - 1);
  }

  int order() const { return order_; }
  const std::vector<double>& lambdas() const { return lambdas_; }
  // Index 0 is kUnknownTerm; the rest are the training terms, sorted.
  const std::vector<std::string>& vocabulary() const { return vocab_; }
  std::uint64_t total_tokens() const { return total_; }

 private:
  struct HistoryHash {
    std::size_t operator()(const std::vector<std::int32_t>& h) const;
  };
  struct Successors {
    std::uint64_t total = 0;
    std::unordered_map<std::int32_t, std::uint64_t> counts;
  };
  using Level =
      std::unordered_map<std::vector<std::int32_t>, Successors, HistoryHash>;

  NgramModel() = default;
  std::int32_t IdOf(std::string_view term) const;
  void Validate() const;

  int order_ = 0;
  std::vector<double> lambdas_;
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, std::int32_t> ids_;
  std::vector<std::uint64_t> unigram_;
  std::uint64_t total_ = 0;
  // levels_[k - 2] holds histories of length k - 1.
  std::vector<Level> levels_;
};

}  // namespace vforge

#endif  // VFORGE_LM_SCORER_H_
