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

#include "vforge/negation_attack.h"

#include <algorithm>
#include <array>
#include <cctype>

#include "vforge/error.h"

namespace vforge {
namespace {

const std::array<std::string, 2> kNegationWords = {"not", "no"};

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsUpper(char c) { return c >= 'A' && c <= 'Z'; }
bool IsLower(char c) { return c >= 'a' && c <= 'z'; }

// Acronyms and "I" keep their case when they stop being sentence-initial.
bool IsAllCaps(std::string_view token) {
  bool any_letter = false;
  for (char c : token) {
    if (IsLower(c)) return false;
    any_letter = any_letter || IsUpper(c);
  }
  return any_letter;
}

bool IsSentenceInitial(const Document& doc, std::size_t token) {
  return doc.sentences()[doc.sentence_of_token(token)].first_token == token;
}

std::string Splice(std::string_view text, std::size_t offset,
                   std::size_t removed, std::string_view inserted) {
  std::string out;
  out.reserve(text.size() - removed + inserted.size());
  out.append(text.substr(0, offset));
  out.append(inserted);
  out.append(text.substr(offset + removed));
  return out;
}

// Lower-cased words preceding each token, shared by all candidates of one
// document.
struct WordIndex {
  std::vector<std::string> terms;
  std::vector<std::size_t> words_before;  // per token
};

WordIndex BuildWordIndex(const Document& doc) {
  WordIndex index;
  index.words_before.reserve(doc.token_count());
  for (std::size_t i = 0; i < doc.token_count(); ++i) {
    index.words_before.push_back(index.terms.size());
    if (doc.is_word(i)) index.terms.push_back(Lowercase(doc.token_text(i)));
  }
  return index;
}

std::span<const std::string> Tail(std::span<const std::string> terms,
                                  std::size_t window) {
  if (window >= terms.size()) return terms;
  return terms.subspan(terms.size() - window);
}

// Score of each word in `words` inserted before `follower`, given the words
// preceding the insertion point.
std::vector<double> ScoreWordsAt(std::span<const std::string> prefix,
                                 const std::string& follower,
                                 std::span<const std::string> words,
                                 const Scorer& scorer) {
  const std::size_t window = scorer.context_window();
  const std::vector<double> first =
      scorer.ScoreCandidates(Tail(prefix, window), words);
  std::vector<double> out;
  out.reserve(words.size());
  std::vector<std::string> context;
  for (std::size_t w = 0; w < words.size(); ++w) {
    context.clear();
    if (window > 0) {
      const auto tail =
          Tail(prefix, window == kUnboundedContext ? window : window - 1);
      context.assign(tail.begin(), tail.end());
      context.push_back(words[w]);
    }
    out.push_back(first[w] * scorer.NextTokenProb(context, follower));
  }
  return out;
}

void CheckEligible(const Document& doc, std::size_t pos) {
  if (pos >= doc.token_count() || !doc.is_word(pos)) {
    throw Error(ErrorCode::kIneligiblePosition,
                "token " + std::to_string(pos) + " is not a word");
  }
}

}  // namespace

void ModificationConfig::Validate() const {
  if (m < 2 || m % 2 != 0) {
    throw Error(ErrorCode::kBadConfig,
                "m must be an even number >= 2, got " + std::to_string(m));
  }
  if (k < static_cast<std::size_t>(m / 2)) {
    throw Error(ErrorCode::kBadConfig, "k must be at least m/2");
  }
}

std::string_view EditKindName(EditKind kind) {
  return kind == EditKind::kDeletion ? "deletion" : "insertion";
}

EditedDocument DeleteNegations(const Document& doc, std::size_t count,
                               Rng& rng) {
  const std::vector<std::size_t> occurrences = NegationOccurrences(doc);
  if (count > occurrences.size()) {
    throw Error(ErrorCode::kInsufficientNegations,
                "need " + std::to_string(count) + " negations, found " +
                    std::to_string(occurrences.size()),
                static_cast<std::int64_t>(occurrences.size()));
  }
  EditedDocument result{doc, {}};
  if (count == 0) return result;

  std::vector<std::size_t> chosen =
      SampleWithoutReplacement(occurrences, count, rng);
  std::sort(chosen.rbegin(), chosen.rend());

  // Right to left, so tokens left of each edit keep their indices.
  for (std::size_t pos : chosen) {
    const Document& cur = result.doc;
    const std::string& text = cur.text();
    const Span span = cur.tokens()[pos].span;
    std::size_t begin = span.begin;
    std::size_t end = span.end;
    if (end < text.size() && text[end] == ' ') {
      ++end;
    } else if (begin > 0 && text[begin - 1] == ' ') {
      --begin;
    } else if (end < text.size() && IsSpace(text[end])) {
      ++end;
    } else if (begin > 0 && IsSpace(text[begin - 1])) {
      --begin;
    }

    std::string inserted;
    if (IsSentenceInitial(cur, pos) && IsUpper(text[span.begin]) &&
        pos + 1 < cur.token_count() && cur.is_word(pos + 1) &&
        cur.tokens()[pos + 1].span.begin == end && IsLower(text[end])) {
      inserted.push_back(static_cast<char>(text[end] - 'a' + 'A'));
      ++end;
    }

    EditRecord edit;
    edit.kind = EditKind::kDeletion;
    edit.token_position = pos;
    edit.word = Lowercase(cur.token_text(pos));
    edit.offset = begin;
    edit.removed = text.substr(begin, end - begin);
    edit.inserted = inserted;
    result.doc = Tokenize(Splice(text, begin, end - begin, inserted));
    result.edits.push_back(std::move(edit));
  }
  return result;
}

std::vector<std::size_t> SampleCandidatePositions(const Document& doc,
                                                  std::size_t k, Rng& rng) {
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < doc.token_count(); ++i) {
    if (doc.is_word(i)) eligible.push_back(i);
  }
  if (eligible.empty()) {
    throw Error(ErrorCode::kNoEligiblePositions, "document has no words");
  }
  std::vector<std::size_t> sample =
      SampleWithoutReplacement(std::move(eligible), k, rng);
  std::sort(sample.begin(), sample.end());
  return sample;
}

double ScoreInsertion(const Document& doc, std::size_t pos,
                      std::string_view word, const Scorer& scorer) {
  CheckEligible(doc, pos);
  const std::vector<std::string> prefix = WordTerms(doc, 0, pos);
  const std::string follower = Lowercase(doc.token_text(pos));
  const std::string w = Lowercase(word);
  return ScoreWordsAt(prefix, follower, std::span(&w, 1), scorer)[0];
}

std::vector<InsertionCandidate> ScoreInsertionCandidates(
    const Document& doc, std::span<const std::size_t> positions,
    const Scorer& scorer) {
  const WordIndex index = BuildWordIndex(doc);
  std::vector<InsertionCandidate> out;
  out.reserve(positions.size() * kNegationWords.size());
  for (std::size_t pos : positions) {
    CheckEligible(doc, pos);
    const auto prefix =
        std::span(index.terms).first(index.words_before[pos]);
    const std::string& follower = index.terms[index.words_before[pos]];
    const std::vector<double> scores =
        ScoreWordsAt(prefix, follower, kNegationWords, scorer);
    for (std::size_t w = 0; w < kNegationWords.size(); ++w) {
      out.push_back({pos, kNegationWords[w], scores[w]});
    }
  }
  return out;
}

EditedDocument InsertNegations(const Document& doc, std::size_t count,
                               const ModificationConfig& config,
                               const Scorer& scorer, Rng& rng) {
  EditedDocument result{doc, {}};
  if (count == 0) return result;
  const std::vector<std::size_t> positions =
      SampleCandidatePositions(doc, config.k, rng);
  if (count > positions.size()) {
    throw Error(ErrorCode::kInsufficientCandidates,
                "need " + std::to_string(count) + " insertion points, sampled " +
                    std::to_string(positions.size()));
  }

  std::vector<InsertionCandidate> candidates =
      ScoreInsertionCandidates(doc, positions, scorer);
  // Candidates come grouped by ascending position with "not" first, so a
  // stable sort on score alone applies the tie rule.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const InsertionCandidate& a, const InsertionCandidate& b) {
                     return a.score > b.score;
                   });
  std::vector<InsertionCandidate> chosen;
  for (const InsertionCandidate& c : candidates) {
    if (chosen.size() == count) break;
    const bool taken =
        std::any_of(chosen.begin(), chosen.end(),
                    [&](const auto& x) { return x.position == c.position; });
    if (!taken) chosen.push_back(c);
  }
  std::sort(chosen.begin(), chosen.end(), [](const auto& a, const auto& b) {
    return a.position > b.position;
  });

  for (const InsertionCandidate& c : chosen) {
    const Document& cur = result.doc;
    const std::string& text = cur.text();
    const std::size_t begin = cur.tokens()[c.position].span.begin;

    EditRecord edit;
    edit.kind = EditKind::kInsertion;
    edit.token_position = c.position;
    edit.word = c.word;
    edit.score = c.score;
    edit.offset = begin;
    if (IsSentenceInitial(cur, c.position)) {
      std::string surface = c.word;
      surface[0] = static_cast<char>(surface[0] - 'a' + 'A');
      edit.inserted = surface + " ";
      if (IsUpper(text[begin]) && !IsAllCaps(cur.token_text(c.position))) {
        edit.removed = text.substr(begin, 1);
        edit.inserted.push_back(static_cast<char>(text[begin] - 'A' + 'a'));
      }
    } else {
      edit.inserted = c.word + " ";
    }
    result.doc = Tokenize(Splice(text, begin, edit.removed.size(), edit.inserted));
    result.edits.push_back(std::move(edit));
  }
  return result;
}

ModifiedArticle ModifyArticle(const Document& doc,
                              const ModificationConfig& config,
                              const Scorer& scorer) {
  config.Validate();
  const auto half = static_cast<std::size_t>(config.m / 2);
  const std::size_t available = NegationOccurrences(doc).size();
  if (available < half) {
    throw Error(ErrorCode::kInsufficientNegations,
                "need " + std::to_string(half) + " negations, found " +
                    std::to_string(available),
                static_cast<std::int64_t>(available));
  }
  Rng rng(config.seed);
  EditedDocument deleted = DeleteNegations(doc, half, rng);
  EditedDocument inserted =
      InsertNegations(deleted.doc, half, config, scorer, rng);

  ModifiedArticle out;
  out.original = doc;
  out.modified = std::move(inserted.doc);
  out.edits = std::move(deleted.edits);
  out.edits.insert(out.edits.end(), inserted.edits.begin(),
                   inserted.edits.end());
  return out;
}

std::string RevertEdits(std::string_view modified_text,
                        std::span<const EditRecord> edits) {
  std::string text(modified_text);
  for (auto it = edits.rbegin(); it != edits.rend(); ++it) {
    if (it->offset > text.size() ||
        text.compare(it->offset, it->inserted.size(), it->inserted) != 0) {
      throw Error(ErrorCode::kInvariantViolation,
                  "edit at offset " + std::to_string(it->offset) +
                      " does not match the text");
    }
    text = Splice(text, it->offset, it->inserted.size(), it->removed);
  }
  return text;
}

}  // namespace vforge
