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

#include "vforge/text_core.h"

#include <algorithm>
#include <cmath>

#include "vforge/error.h"

namespace vforge {
namespace {

enum class CharClass { kSpace, kWord, kPunct };

struct CharInfo {
  CharClass cls;
  std::size_t width;
};

bool IsAsciiSpace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsAsciiAlnum(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z');
}

// U+2000..U+206F is encoded as E2 80 xx or E2 81 xx.
bool IsGeneralPunctuation(std::string_view text, std::size_t i) {
  return i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
         (static_cast<unsigned char>(text[i + 1]) == 0x80 ||
          static_cast<unsigned char>(text[i + 1]) == 0x81);
}

constexpr std::string_view kRightSingleQuote = "\xE2\x80\x99";

CharInfo Classify(std::string_view text, std::size_t i) {
  const auto c = static_cast<unsigned char>(text[i]);
  if (IsAsciiSpace(c)) return {CharClass::kSpace, 1};
  if (IsGeneralPunctuation(text, i)) {
    // The typographic apostrophe belongs to words ("don’t").
    if (text.substr(i, 3) == kRightSingleQuote) return {CharClass::kWord, 3};
    return {CharClass::kPunct, 3};
  }
  if (IsAsciiAlnum(c) || c == '\'' || c >= 0x80) return {CharClass::kWord, 1};
  return {CharClass::kPunct, 1};
}

bool HasWordContent(std::string_view token) {
  for (std::size_t i = 0; i < token.size(); ++i) {
    const auto c = static_cast<unsigned char>(token[i]);
    if (IsAsciiAlnum(c)) return true;
    if (c >= 0x80) {
      if (token.substr(i, 3) == kRightSingleQuote) {
        i += 2;
        continue;
      }
      return true;
    }
  }
  return false;
}

bool IsTerminator(std::string_view t) { return t == "." || t == "!" || t == "?"; }

bool IsCloser(std::string_view t) {
  return t == "\"" || t == "'" || t == ")" || t == "]" || t == "\xE2\x80\x9D" ||
         t == kRightSingleQuote;
}

bool IsOpener(std::string_view t) {
  return t == "\"" || t == "'" || t == "(" || t == "[" || t == "\xE2\x80\x9C" ||
         t == "\xE2\x80\x98";
}

bool StartsUpper(std::string_view t) {
  return !t.empty() && t.front() >= 'A' && t.front() <= 'Z';
}

}  // namespace

std::string_view Document::token_text(std::size_t i) const {
  const Span& s = tokens_[i].span;
  return std::string_view(text_).substr(s.begin, s.size());
}

std::string_view Document::sentence_text(std::size_t s) const {
  const Span& span = sentences_[s].span;
  return std::string_view(text_).substr(span.begin, span.size());
}

std::size_t Document::sentence_of_token(std::size_t i) const {
  auto it = std::upper_bound(
      sentences_.begin(), sentences_.end(), i,
      [](std::size_t tok, const Sentence& s) { return tok < s.end_token; });
  return static_cast<std::size_t>(it - sentences_.begin());
}

Document Tokenize(std::string_view text) {
  Document doc;
  doc.text_ = std::string(text);
  const std::string_view view(doc.text_);

  for (std::size_t i = 0; i < view.size();) {
    const CharInfo info = Classify(view, i);
    if (info.cls == CharClass::kSpace) {
      i += info.width;
      continue;
    }
    if (info.cls == CharClass::kPunct) {
      doc.tokens_.push_back({{i, i + info.width}, TokenKind::kPunct});
      i += info.width;
      continue;
    }
    std::size_t j = i;
    while (j < view.size()) {
      const CharInfo next = Classify(view, j);
      if (next.cls != CharClass::kWord) break;
      j += next.width;
    }
    const bool word = HasWordContent(view.substr(i, j - i));
    doc.tokens_.push_back(
        {{i, j}, word ? TokenKind::kWord : TokenKind::kPunct});
    if (word) ++doc.word_count_;
    i = j;
  }

  const std::size_t n = doc.tokens_.size();
  auto text_of = [&](std::size_t k) { return doc.token_text(k); };
  auto adjacent = [&](std::size_t a, std::size_t b) {
    return doc.tokens_[a].span.end == doc.tokens_[b].span.begin;
  };
  auto starts_sentence = [&](std::size_t k) {
    if (StartsUpper(text_of(k))) return true;
    return IsOpener(text_of(k)) && k + 1 < n && adjacent(k, k + 1) &&
           StartsUpper(text_of(k + 1));
  };

  std::size_t start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (doc.tokens_[i].kind != TokenKind::kPunct || !IsTerminator(text_of(i))) {
      continue;
    }
    if (text_of(i) == "." && i > 0 && adjacent(i - 1, i) &&
        doc.is_word(i - 1) && doc.tokens_[i - 1].span.size() == 1) {
      continue;  // "U.S."
    }
    std::size_t last = i;
    while (last + 1 < n && adjacent(last, last + 1) &&
           (IsCloser(text_of(last + 1)) || IsTerminator(text_of(last + 1)))) {
      ++last;
    }
    if (last + 1 < n &&
        (adjacent(last, last + 1) || !starts_sentence(last + 1))) {
      i = last;
      continue;
    }
    const Span span{doc.tokens_[start].span.begin, doc.tokens_[last].span.end};
    doc.sentences_.push_back({span, start, last + 1});
    start = last + 1;
    i = last;
  }
  if (start < n) {
    const Span span{doc.tokens_[start].span.begin, doc.tokens_[n - 1].span.end};
    doc.sentences_.push_back({span, start, n});
  }
  return doc;
}

std::string Lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool IsNegationWord(std::string_view token) {
  if (token.size() != 2 && token.size() != 3) return false;
  const std::string lower = Lowercase(token);
  return lower == "no" || lower == "not";
}

std::vector<std::size_t> NegationOccurrences(const Document& doc) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < doc.token_count(); ++i) {
    if (doc.is_word(i) && IsNegationWord(doc.token_text(i))) out.push_back(i);
  }
  return out;
}

std::vector<std::string> WordTerms(const Document& doc) {
  return WordTerms(doc, 0, doc.token_count());
}

std::vector<std::string> WordTerms(const Document& doc, std::size_t first_token,
                                   std::size_t end_token) {
  std::vector<std::string> out;
  end_token = std::min(end_token, doc.token_count());
  for (std::size_t i = first_token; i < end_token; ++i) {
    if (doc.is_word(i)) out.push_back(Lowercase(doc.token_text(i)));
  }
  return out;
}

double IdfTable::weight(std::string_view term) const {
  auto it = weights.find(term);
  return it == weights.end() ? unknown_weight : it->second;
}

double TfidfVector::weight(std::string_view term) const {
  auto it = weights.find(term);
  return it == weights.end() ? 0.0 : it->second;
}

double TfidfVector::norm() const {
  double sum = 0.0;
  for (const auto& [term, w] : weights) sum += w * w;
  return std::sqrt(sum);
}

TfidfVector ComputeTfidf(std::span<const std::string> terms,
                         const IdfTable& idf) {
  std::map<std::string, double, std::less<>> counts;
  for (const std::string& t : terms) counts[t] += 1.0;
  TfidfVector v;
  for (auto& [term, count] : counts) {
    v.weights.emplace(term, count * idf.weight(term));
  }
  return v;
}

IdfTable IdfFromSentences(const Document& doc) {
  const std::size_t n = doc.sentences().size();
  if (n == 0) {
    throw Error(ErrorCode::kEmptyDocument, "document has no sentences");
  }
  std::map<std::string, std::size_t, std::less<>> df;
  for (const Sentence& s : doc.sentences()) {
    std::vector<std::string> terms = WordTerms(doc, s.first_token, s.end_token);
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    for (std::string& t : terms) ++df[std::move(t)];
  }
  IdfTable idf;
  const double total = static_cast<double>(n);
  for (auto& [term, count] : df) {
    idf.weights.emplace(term, std::log(total / static_cast<double>(count)));
  }
  idf.unknown_weight = std::log(total);
  return idf;
}

double CosineSimilarity(const TfidfVector& a, const TfidfVector& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  const TfidfVector& small = a.weights.size() <= b.weights.size() ? a : b;
  const TfidfVector& large = &small == &a ? b : a;
  double dot = 0.0;
  for (const auto& [term, w] : small.weights) dot += w * large.weight(term);
  return std::clamp(dot / (na * nb), 0.0, 1.0);
}

std::size_t MostSimilarSentence(const Document& doc,
                                std::span<const std::string> query_terms) {
  const IdfTable idf = IdfFromSentences(doc);
  const TfidfVector query = ComputeTfidf(query_terms, idf);
  std::size_t best = 0;
  double best_score = -1.0;
  for (std::size_t s = 0; s < doc.sentences().size(); ++s) {
    const Sentence& sent = doc.sentences()[s];
    const std::vector<std::string> terms =
        WordTerms(doc, sent.first_token, sent.end_token);
    const double score = CosineSimilarity(ComputeTfidf(terms, idf), query);
    if (score > best_score + kSimilarityTieEpsilon) {
      best = s;
      best_score = score;
    }
  }
  return best;
}

Document TruncateWords(const Document& doc, std::size_t n) {
  if (n == 0) return Tokenize("");
  if (doc.word_count() <= n) return doc;
  std::size_t seen = 0;
  std::size_t i = 0;
  for (; i < doc.token_count(); ++i) {
    if (doc.is_word(i) && ++seen == n) break;
  }
  std::size_t last = i;
  while (last + 1 < doc.token_count() && !doc.is_word(last + 1) &&
         doc.tokens()[last].span.end == doc.tokens()[last + 1].span.begin) {
    ++last;
  }
  return Tokenize(
      std::string_view(doc.text()).substr(0, doc.tokens()[last].span.end));
}

}  // namespace vforge
