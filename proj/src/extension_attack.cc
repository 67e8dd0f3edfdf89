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

#include "vforge/extension_attack.h"

#include <cmath>

#include "vforge/error.h"

namespace vforge {
namespace {

constexpr double kFractionEpsilon = 1e-12;

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

std::string CallGenerator(Generator& generator, const GeneratorRequest& req) {
  try {
    return generator.Generate(req);
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::kTransport:
      case ErrorCode::kTimeout:
      case ErrorCode::kMalformedResponse:
        throw Error(ErrorCode::kGeneratorUnavailable, e.what(), e.detail());
      default:
        throw;
    }
  }
}

std::size_t WordsIn(const Document& doc, const Sentence& s) {
  std::size_t n = 0;
  for (std::size_t i = s.first_token; i < s.end_token; ++i) {
    n += doc.is_word(i) ? 1 : 0;
  }
  return n;
}

}  // namespace

void GeneratorRequest::Validate() const {
  if (max_sentences < 1) {
    throw Error(ErrorCode::kBadConfig, "max_sentences must be at least 1");
  }
  if (!(temperature > 0.0)) {
    throw Error(ErrorCode::kBadConfig, "temperature must be positive");
  }
}

std::string BuildQaPrompt(const Document& article, std::string_view question) {
  if (question.empty()) {
    throw Error(ErrorCode::kEmptyQuestion, "question is empty");
  }
  std::string prompt = article.text();
  prompt.push_back('\n');
  prompt.append(kQaQuestionLead);
  prompt.append(question);
  prompt.append(kQaAnswerCue);
  return prompt;
}

std::string ExtractAnswer(std::string_view generated) {
  const std::string_view trimmed = Trim(generated);
  if (trimmed.empty()) {
    throw Error(ErrorCode::kEmptyGeneration, "generation is blank");
  }
  const Document doc = Tokenize(trimmed);
  return std::string(Trim(doc.sentence_text(0)));
}

SentenceRemoval RemoveAnswerSentence(const Document& article,
                                     std::string_view question,
                                     std::string_view answer) {
  const auto& sentences = article.sentences();
  if (sentences.size() < 2) {
    throw Error(ErrorCode::kTooFewSentences,
                "need at least 2 sentences, found " +
                    std::to_string(sentences.size()));
  }
  std::string query(question);
  query.push_back(' ');
  query.append(answer);
  const std::vector<std::string> terms = WordTerms(Tokenize(query));
  const std::size_t index = MostSimilarSentence(article, terms);

  std::size_t begin = 0;
  std::size_t end = 0;
  if (index + 1 < sentences.size()) {
    begin = sentences[index].span.begin;
    end = sentences[index + 1].span.begin;
  } else {
    begin = sentences[index - 1].span.end;
    end = sentences[index].span.end;
  }
  const std::string& text = article.text();
  std::string kept = text.substr(0, begin);
  kept.append(text, end, std::string::npos);
  return {Tokenize(kept), index};
}

QaExtension ExtendWithQa(const Document& article, std::string_view question,
                         Generator& generator, const SamplingParams& sampling) {
  QaExtension out;
  out.question = std::string(question);
  out.prompt = BuildQaPrompt(article, question);
  GeneratorRequest request{out.prompt, 1, sampling.temperature, sampling.top_k};
  request.Validate();
  out.answer = ExtractAnswer(CallGenerator(generator, request));
  SentenceRemoval removal = RemoveAnswerSentence(article, question, out.answer);
  out.article = std::move(removal.article);
  out.removed_sentence_index = removal.removed_index;
  return out;
}

void ExtensionConfig::Validate() const {
  if (!(g_target > 0.0 && g_target <= 1.0)) {
    throw Error(ErrorCode::kBadConfig, "g_target must be in (0, 1]");
  }
  if (max_sentences_per_request < 1 || max_requests < 1) {
    throw Error(ErrorCode::kBadConfig, "request limits must be positive");
  }
}

VanillaExtension VanillaExtend(const Document& article,
                               const ExtensionConfig& config,
                               Generator& generator) {
  config.Validate();
  if (article.word_count() < config.prefix_words) {
    throw Error(ErrorCode::kArticleTooShort,
                "article has " + std::to_string(article.word_count()) +
                    " words, prefix needs " +
                    std::to_string(config.prefix_words));
  }
  const Document prefix = TruncateWords(article, config.prefix_words);
  VanillaExtension out;
  out.human_words = prefix.word_count();
  if (config.g_target >= 1.0 && out.human_words > 0) {
    throw Error(ErrorCode::kTargetUnreachable,
                "a machine fraction of 1 needs an empty prefix");
  }
  auto reached = [&](std::size_t machine) {
    return machine > 0 && MachineFraction(out.human_words, machine) >=
                              config.g_target - kFractionEpsilon;
  };

  std::string text = prefix.text();
  for (std::size_t round = 0; round < config.max_requests; ++round) {
    GeneratorRequest request{text, config.max_sentences_per_request,
                             config.sampling.temperature,
                             config.sampling.top_k};
    request.Validate();
    const std::string generated = CallGenerator(generator, request);
    const Document gen = Tokenize(generated);
    if (gen.sentences().empty()) {
      throw Error(ErrorCode::kGeneratorEmpty, "generator produced no sentence");
    }
    std::size_t cut = 0;
    bool done = false;
    for (const Sentence& s : gen.sentences()) {
      out.machine_words += WordsIn(gen, s);
      cut = s.span.end;
      if (reached(out.machine_words)) {
        done = true;
        break;
      }
    }
    if (!text.empty() && !IsSpace(text.back()) && !IsSpace(generated.front())) {
      text.push_back(' ');
    }
    text.append(generated, 0, cut);
    if (done) {
      out.article = Tokenize(text);
      out.g_actual = MachineFraction(out.human_words, out.machine_words);
      return out;
    }
  }
  throw Error(ErrorCode::kTargetUnreachable,
              "target fraction not reached after " +
                  std::to_string(config.max_requests) + " requests");
}

double MachineFraction(std::size_t human_words, std::size_t machine_words) {
  if (human_words + machine_words == 0) {
    throw Error(ErrorCode::kZeroLength, "no words");
  }
  return static_cast<double>(machine_words) /
         static_cast<double>(human_words + machine_words);
}

double RatioToOriginal(std::size_t human_words, std::size_t machine_words) {
  if (human_words == 0) {
    throw Error(ErrorCode::kZeroLength, "no human words");
  }
  return static_cast<double>(machine_words) / static_cast<double>(human_words);
}

Document LengthMatchTruncate(const Document& real, const Document& fake) {
  if (real.word_count() < fake.word_count()) {
    throw Error(ErrorCode::kRealTooShort,
                "real text has " + std::to_string(real.word_count()) +
                    " words, fake has " + std::to_string(fake.word_count()));
  }
  return TruncateWords(real, fake.word_count());
}

}  // namespace vforge
