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

// Deterministic tokenization, sentence segmentation and TF-IDF similarity.
//
// Tokens are maximal runs of word characters (ASCII letters and digits,
// apostrophes, and non-ASCII UTF-8 bytes other than the General Punctuation
// block), or a single punctuation character. Whitespace separates tokens and
// is never part of one. A sentence ends after '.', '!' or '?' (plus any
// directly attached closing quotes or brackets) when the next token follows
// whitespace and starts with an upper-case letter, possibly behind an opening
// quote or bracket. A '.' directly after a single-letter word ("U.S.") never
// ends a sentence. The end of the text always ends the last sentence.

#ifndef VFORGE_TEXT_CORE_H_
#define VFORGE_TEXT_CORE_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vforge {

// Half-open byte range [begin, end) into a document's text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const Span&, const Span&) = default;
};

enum class TokenKind { kWord, kPunct };

struct Token {
  Span span;
  TokenKind kind = TokenKind::kWord;
};

// Tokens [first_token, end_token) of the document; `span` runs from the
// first token's begin to the last token's end.
struct Sentence {
  Span span;
  std::size_t first_token = 0;
  std::size_t end_token = 0;
};

// Immutable text with its token and sentence segmentation. Built only by
// Tokenize(), so the segmentation always matches the text.
class Document {
 public:
  Document() = default;

  const std::string& text() const { return text_; }
  const std::vector<Token>& tokens() const { return tokens_; }
  const std::vector<Sentence>& sentences() const { return sentences_; }

  std::size_t token_count() const { return tokens_.size(); }
  std::size_t word_count() const { return word_count_; }
  std::string_view token_text(std::size_t i) const;
  bool is_word(std::size_t i) const {
    return tokens_[i].kind == TokenKind::kWord;
  }
  std::string_view sentence_text(std::size_t s) const;
  std::size_t sentence_of_token(std::size_t i) const;

 private:
  friend Document Tokenize(std::string_view text);

  std::string text_;
  std::vector<Token> tokens_;
  std::vector<Sentence> sentences_;
  std::size_t word_count_ = 0;
};

Document Tokenize(std::string_view text);

// ASCII lower-casing; other bytes pass through unchanged.
std::string Lowercase(std::string_view s);

// True for "not" and "no" in any letter case.
bool IsNegationWord(std::string_view token);

// Indices of tokens that are a negation word, ascending.
std::vector<std::size_t> NegationOccurrences(const Document& doc);

// Lower-cased word tokens of the document (punctuation dropped), optionally
// restricted to tokens [first_token, end_token).
std::vector<std::string> WordTerms(const Document& doc);
std::vector<std::string> WordTerms(const Document& doc, std::size_t first_token,
                                   std::size_t end_token);

// Inverse document frequencies. Terms absent from `weights` get
// `unknown_weight`.
struct IdfTable {
  std::map<std::string, double, std::less<>> weights;
  double unknown_weight = 0.0;

  double weight(std::string_view term) const;
};

// Sparse term weights; absent terms weigh 0.
struct TfidfVector {
  std::map<std::string, double, std::less<>> weights;

  double weight(std::string_view term) const;
  double norm() const;
};

// weight(t) = count(t in terms) * idf(t).
TfidfVector ComputeTfidf(std::span<const std::string> terms,
                         const IdfTable& idf);

// idf(t) = ln(N / df(t)) with every sentence of `doc` as one document; the
// unknown-term weight is ln(N), as if df = 1. Throws kEmptyDocument when the
// document has no sentences.
IdfTable IdfFromSentences(const Document& doc);

// Cosine of the angle between the two vectors, 0 when either norm is 0.
double CosineSimilarity(const TfidfVector& a, const TfidfVector& b);

// Scores closer than this are treated as ties.
inline constexpr double kSimilarityTieEpsilon = 1e-12;

// Sentence whose TF-IDF vector is most cosine-similar to the query's, lowest
// index on ties. Throws kEmptyDocument when there are no sentences.
std::size_t MostSimilarSentence(const Document& doc,
                                std::span<const std::string> query_terms);

// Prefix of `doc` through its n-th word token, keeping punctuation attached
// directly to that word ("three." stays whole). Returns `doc` unchanged when
// it has at most n words.
Document TruncateWords(const Document& doc, std::size_t n);

}  // namespace vforge

#endif  // VFORGE_TEXT_CORE_H_
