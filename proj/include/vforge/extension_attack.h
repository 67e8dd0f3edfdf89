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

// Article extension attacks: question-answer prompting, where a generated
// answer is appended and the article sentence closest to it is removed, and
// plain continuation up to a target share of machine-written words.
//
// Word counts here are word tokens as defined by text_core; punctuation does
// not count toward prefixes or machine fractions.

#ifndef VFORGE_EXTENSION_ATTACK_H_
#define VFORGE_EXTENSION_ATTACK_H_

#include <cstddef>
#include <string>
#include <string_view>

#include "vforge/generator.h"
#include "vforge/text_core.h"

namespace vforge {

inline constexpr std::string_view kQaQuestionLead = "We attempt to answer: ";
inline constexpr std::string_view kQaAnswerCue = "\nAnswer:";

// article ++ "\n" ++ "We attempt to answer: " ++ question ++ "\nAnswer:",
// byte for byte. The question is not normalized. Throws kEmptyQuestion.
std::string BuildQaPrompt(const Document& article, std::string_view question);

// First sentence of the generated text, whitespace-trimmed. Throws
// kEmptyGeneration for blank input.
std::string ExtractAnswer(std::string_view generated);

struct SentenceRemoval {
  Document article;
  std::size_t removed_index = 0;
};

// Drops the sentence most similar to question ++ " " ++ answer together with
// the whitespace separating it from its neighbour. Throws kTooFewSentences
// for articles with fewer than two sentences.
SentenceRemoval RemoveAnswerSentence(const Document& article,
                                     std::string_view question,
                                     std::string_view answer);

struct QaExtension {
  Document article;  // answer sentence removed
  std::string question;
  std::string answer;
  std::string prompt;  // built from the full article
  std::size_t removed_sentence_index = 0;
};

// Full QA pipeline: prompt with the whole article, keep the first generated
// sentence as the answer, then remove the matching article sentence.
// Generator transport failures surface as kGeneratorUnavailable.
QaExtension ExtendWithQa(const Document& article, std::string_view question,
                         Generator& generator, const SamplingParams& sampling);

struct ExtensionConfig {
  std::size_t prefix_words = 500;
  double g_target = 0.01;
  SamplingParams sampling;
  std::size_t max_sentences_per_request = 8;
  std::size_t max_requests = 32;

  // Throws kBadConfig unless 0 < g_target <= 1.
  void Validate() const;
};

struct VanillaExtension {
  Document article;
  double g_actual = 0.0;
  std::size_t human_words = 0;
  std::size_t machine_words = 0;
};

// Continues the first `prefix_words` words of the article with generated
// sentences, stopping at the first sentence boundary where the machine
// fraction reaches g_target. Throws kArticleTooShort, kGeneratorUnavailable,
// kGeneratorEmpty (a request produced no sentence) and kTargetUnreachable.
VanillaExtension VanillaExtend(const Document& article,
                               const ExtensionConfig& config,
                               Generator& generator);

// machine / (human + machine). Throws kZeroLength when both are 0.
double MachineFraction(std::size_t human_words, std::size_t machine_words);

// machine / human, where 1.0 means the text doubled. Throws kZeroLength when
// human is 0.
double RatioToOriginal(std::size_t human_words, std::size_t machine_words);

// Prefix of `real` with exactly as many words as `fake`. Throws kRealTooShort.
Document LengthMatchTruncate(const Document& real, const Document& fake);

}  // namespace vforge

#endif  // VFORGE_EXTENSION_ATTACK_H_
