// Copyright 2026 The ocrkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// OCR text metrics: normalized edit distance, bag-of-tokens precision /
// recall / F1, BLEU-4 and exact-match METEOR, over word- or character-level
// token sequences.

#ifndef OCRKIT_TEXT_METRICS_H_
#define OCRKIT_TEXT_METRICS_H_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ocrkit/corpus.h"

namespace ocrkit {

enum class Granularity { kWord, kChar };

std::string_view GranularityName(Granularity granularity);
// Accepts "word" and "char"; throws Error otherwise.
Granularity ParseGranularity(std::string_view name);

// A tokenized text. Tokens are non-empty and whitespace-free; in char mode
// each token is exactly one scalar value. The constructor enforces both.
class TokenSeq {
 public:
  TokenSeq() = default;
  TokenSeq(std::vector<std::string> tokens, Granularity granularity);

  const std::vector<std::string>& tokens() const { return tokens_; }
  Granularity granularity() const { return granularity_; }
  size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }

  friend bool operator==(const TokenSeq&, const TokenSeq&) = default;

 private:
  std::vector<std::string> tokens_;
  Granularity granularity_ = Granularity::kWord;
};

// Input is NFC-normalized first. Word mode: every CJK scalar is its own token
// and the remaining runs split on Unicode whitespace. Char mode: every
// non-whitespace scalar is a token.
TokenSeq Tokenize(std::string_view text, Granularity granularity);

// Escape hatch for callers that want a real segmenter (e.g. for zh words).
using Tokenizer = std::function<TokenSeq(std::string_view, Granularity)>;

// Unit-cost Levenshtein distance over tokens.
size_t LevenshteinDistance(std::span<const std::string> a, std::span<const std::string> b);

// Levenshtein / max(|ref|, |hyp|); 0 when both are empty.
double EditDistanceNorm(const TokenSeq& ref, const TokenSeq& hyp);

struct PrecisionRecall {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

double HarmonicF1(double precision, double recall);

// Multiset overlap: m = sum over tokens of min(ref count, hyp count).
PrecisionRecall Prf(const TokenSeq& ref, const TokenSeq& hyp);

// BLEU-4, uniform weights, clipped n-gram precision with brevity penalty.
// A zero precision for n > 1 is smoothed to 1 / (2 * #hyp n-grams); orders
// longer than the hypothesis are dropped and the weights renormalized.
double Bleu(const TokenSeq& ref, const TokenSeq& hyp);

struct MeteorParams {
  double alpha = 0.9;
  double beta = 3.0;
  double gamma = 0.5;
};

// Exact-match alignment chosen greedily left to right over the hypothesis:
// each token takes the reference position right after the previous match
// when that continues a chunk, otherwise the leftmost unused occurrence.
struct MeteorAlignment {
  size_t matches = 0;
  size_t chunks = 0;
  std::vector<int> hyp_to_ref;  // -1 for unmatched hypothesis tokens
};

MeteorAlignment AlignForMeteor(const TokenSeq& ref, const TokenSeq& hyp);
double Meteor(const TokenSeq& ref, const TokenSeq& hyp, const MeteorParams& params = {});

struct MetricReport {
  double edit_distance = 0;
  double f1 = 0;
  double precision = 0;
  double recall = 0;
  double bleu = 0;
  double meteor = 0;
  size_t n_samples = 0;

  friend bool operator==(const MetricReport&, const MetricReport&) = default;
};

MetricReport ScoreTokens(const TokenSeq& ref, const TokenSeq& hyp);
MetricReport ScoreText(std::string_view ref, std::string_view hyp, Granularity granularity);

struct ScoreOptions {
  Granularity granularity = Granularity::kWord;
  Tokenizer tokenizer;  // empty: Tokenize
  int workers = 1;
};

struct SampleScore {
  std::string id;
  MetricReport report;
};

struct CorpusScore {
  MetricReport aggregate;
  std::vector<SampleScore> per_sample;  // sorted by id
};

// Pairs hyps with refs by id (each ref needs exactly one prediction) and
// macro-averages the per-sample metrics, summing in id order so the result
// is independent of worker count and input order. The aggregate F1 is the
// harmonic mean of the averaged precision and recall.
CorpusScore ScoreCorpus(const Corpus& refs, const Corpus& hyps, const ScoreOptions& options = {});

}  // namespace ocrkit

#endif  // OCRKIT_TEXT_METRICS_H_
