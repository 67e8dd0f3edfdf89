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

// Statement inversion by negation edits. An article is modified by deleting
// m/2 randomly chosen "not"/"no" tokens and then inserting m/2 new ones at the
// sampled positions where a language model likes them best, so the total
// negation count never changes.

#ifndef VFORGE_NEGATION_ATTACK_H_
#define VFORGE_NEGATION_ATTACK_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vforge/lm_scorer.h"
#include "vforge/sampling.h"
#include "vforge/text_core.h"

namespace vforge {

struct ModificationConfig {
  int m = 2;            // total edits; even, >= 2
  std::size_t k = 100;  // candidate positions sampled for insertions
  std::uint64_t seed = 0;

  // Throws kBadConfig for odd or non-positive m, or k < m / 2.
  void Validate() const;
};

enum class EditKind { kDeletion, kInsertion };

std::string_view EditKindName(EditKind kind);

// One applied edit. `token_position` indexes the token sequence the edit step
// started from: the original article for deletions, the post-deletion article
// for insertions. The splice fields describe the exact bytes changed in the
// text as it was when the edit was applied: text[offset, offset +
// removed.size()) became `inserted`. Capitalization repair of the neighbouring
// word is part of the splice.
struct EditRecord {
  EditKind kind = EditKind::kDeletion;
  std::size_t token_position = 0;
  std::string word;    // "not" or "no"
  double score = 0.0;  // insertions only
  std::size_t offset = 0;
  std::string removed;
  std::string inserted;

  friend bool operator==(const EditRecord&, const EditRecord&) = default;
};

struct EditedDocument {
  Document doc;
  std::vector<EditRecord> edits;  // in application order
};

struct ModifiedArticle {
  Document original;
  Document modified;
  std::vector<EditRecord> edits;  // deletions, then insertions; applied order
};

// Removes `count` negation tokens chosen uniformly without replacement, each
// with one adjacent whitespace character. Throws kInsufficientNegations (detail
// = available count) when the document has fewer.
EditedDocument DeleteNegations(const Document& doc, std::size_t count,
                               Rng& rng);

// min(k, eligible) distinct word-token indices, ascending. A negation is
// inserted immediately before the chosen token, which becomes the following
// word. Throws kNoEligiblePositions when the document has no word tokens.
std::vector<std::size_t> SampleCandidatePositions(const Document& doc,
                                                  std::size_t k, Rng& rng);

// P(word | words before pos) * P(token pos | words before pos, word).
// Throws kIneligiblePosition unless token `pos` is a word.
double ScoreInsertion(const Document& doc, std::size_t pos,
                      std::string_view word, const Scorer& scorer);

struct InsertionCandidate {
  std::size_t position = 0;
  std::string word;
  double score = 0.0;
};

// Scores of both negation words at each position, positions in input order,
// "not" before "no".
std::vector<InsertionCandidate> ScoreInsertionCandidates(
    const Document& doc, std::span<const std::size_t> positions,
    const Scorer& scorer);

// Inserts `count` negations at the best-scoring (position, word) pairs among
// the sampled candidates, at most one per position. Ties prefer the lower
// position, then "not". Throws kInsufficientCandidates when fewer than
// `count` positions were sampled.
EditedDocument InsertNegations(const Document& doc, std::size_t count,
                               const ModificationConfig& config,
                               const Scorer& scorer, Rng& rng);

// Deletes then inserts m/2 negations with an Rng seeded from config.seed.
ModifiedArticle ModifyArticle(const Document& doc,
                              const ModificationConfig& config,
                              const Scorer& scorer);

// Undoes `edits` (given in application order) on `modified_text`. Throws
// kInvariantViolation when a splice does not match the text.
std::string RevertEdits(std::string_view modified_text,
                        std::span<const EditRecord> edits);

}  // namespace vforge

#endif  // VFORGE_NEGATION_ATTACK_H_
