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

#include "ocrkit/text_metrics.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>

#include "ocrkit/error.h"
#include "ocrkit/utf8.h"

namespace ocrkit {
namespace {

void CheckSameGranularity(const TokenSeq& ref, const TokenSeq& hyp) {
  if (ref.granularity() != hyp.granularity()) {
    throw Error("token granularity mismatch: " + std::string(GranularityName(ref.granularity())) +
                " vs " + std::string(GranularityName(hyp.granularity())));
  }
}

// Maps both sequences onto dense integer ids so the inner loops compare ints.
struct Interned {
  std::vector<int> ref;
  std::vector<int> hyp;
  int vocabulary = 0;
};

Interned Intern(std::span<const std::string> ref, std::span<const std::string> hyp) {
  std::unordered_map<std::string_view, int> ids;
  Interned out;
  auto id_of = [&](const std::string& token) {
    auto [it, inserted] = ids.try_emplace(token, static_cast<int>(ids.size()));
    return it->second;
  };
  out.ref.reserve(ref.size());
  out.hyp.reserve(hyp.size());
  for (const auto& t : ref) out.ref.push_back(id_of(t));
  for (const auto& t : hyp) out.hyp.push_back(id_of(t));
  out.vocabulary = static_cast<int>(ids.size());
  return out;
}

size_t Levenshtein(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() < b.size()) return Levenshtein(b, a);
  std::vector<size_t> row(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    size_t diagonal = row[0];
    row[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      const size_t above = row[j];
      const size_t substitute = diagonal + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = std::min({above + 1, row[j - 1] + 1, substitute});
      diagonal = above;
    }
  }
  return row[b.size()];
}

std::string NgramKey(const std::vector<int>& ids, size_t start, size_t n) {
  std::string key(n * sizeof(int), '\0');
  std::memcpy(key.data(), ids.data() + start, n * sizeof(int));
  return key;
}

std::unordered_map<std::string, int> CountNgrams(const std::vector<int>& ids, size_t n) {
  std::unordered_map<std::string, int> counts;
  for (size_t i = 0; i + n <= ids.size(); ++i) ++counts[NgramKey(ids, i, n)];
  return counts;
}

double SafeRatio(double num, double den) { return den == 0 ? 0.0 : num / den; }

}  // namespace

std::string_view GranularityName(Granularity granularity) {
  return granularity == Granularity::kWord ? "word" : "char";
}

Granularity ParseGranularity(std::string_view name) {
  if (name == "word") return Granularity::kWord;
  if (name == "char") return Granularity::kChar;
  throw Error("unknown granularity '" + std::string(name) + "' (expected word or char)");
}

TokenSeq::TokenSeq(std::vector<std::string> tokens, Granularity granularity)
    : tokens_(std::move(tokens)), granularity_(granularity) {
  for (const auto& token : tokens_) {
    if (token.empty()) throw Error("empty token");
    const std::u32string scalars = DecodeUtf8(token);
    for (char32_t c : scalars) {
      if (IsUnicodeWhitespace(c)) throw Error("token contains whitespace: '" + token + "'");
    }
    if (granularity_ == Granularity::kChar && scalars.size() != 1) {
      throw Error("char token is not a single scalar value: '" + token + "'");
    }
  }
}

TokenSeq Tokenize(std::string_view text, Granularity granularity) {
  const std::u32string scalars = DecodeUtf8(NormalizeNfc(text));
  std::vector<std::string> tokens;
  std::string run;
  auto flush = [&] {
    if (!run.empty()) tokens.push_back(std::move(run));
    run.clear();
  };
  for (char32_t c : scalars) {
    if (IsUnicodeWhitespace(c)) {
      flush();
      continue;
    }
    if (granularity == Granularity::kChar || IsCjk(c)) {
      flush();
      std::string single;
      AppendUtf8(single, c);
      tokens.push_back(std::move(single));
      continue;
    }
    AppendUtf8(run, c);
  }
  flush();
  return TokenSeq(std::move(tokens), granularity);
}

size_t LevenshteinDistance(std::span<const std::string> a, std::span<const std::string> b) {
  const Interned ids = Intern(a, b);
  return Levenshtein(ids.ref, ids.hyp);
}

double EditDistanceNorm(const TokenSeq& ref, const TokenSeq& hyp) {
  CheckSameGranularity(ref, hyp);
  const size_t longest = std::max(ref.size(), hyp.size());
  if (longest == 0) return 0.0;
  return static_cast<double>(LevenshteinDistance(ref.tokens(), hyp.tokens())) /
         static_cast<double>(longest);
}

double HarmonicF1(double precision, double recall) {
  if (precision + recall == 0) return 0.0;
  return 2 * precision * recall / (precision + recall);
}

PrecisionRecall Prf(const TokenSeq& ref, const TokenSeq& hyp) {
  CheckSameGranularity(ref, hyp);
  const Interned ids = Intern(ref.tokens(), hyp.tokens());
  std::vector<int> ref_counts(static_cast<size_t>(ids.vocabulary), 0);
  for (int id : ids.ref) ++ref_counts[static_cast<size_t>(id)];
  size_t overlap = 0;
  for (int id : ids.hyp) {
    if (ref_counts[static_cast<size_t>(id)] > 0) {
      --ref_counts[static_cast<size_t>(id)];
      ++overlap;
    }
  }
  PrecisionRecall out;
  out.precision = SafeRatio(static_cast<double>(overlap), static_cast<double>(hyp.size()));
  out.recall = SafeRatio(static_cast<double>(overlap), static_cast<double>(ref.size()));
  out.f1 = HarmonicF1(out.precision, out.recall);
  return out;
}

double Bleu(const TokenSeq& ref, const TokenSeq& hyp) {
  CheckSameGranularity(ref, hyp);
  if (hyp.empty()) return 0.0;
  const Interned ids = Intern(ref.tokens(), hyp.tokens());
  constexpr size_t kMaxOrder = 4;
  const size_t orders = std::min(kMaxOrder, hyp.size());

  double log_sum = 0;
  for (size_t n = 1; n <= orders; ++n) {
    const auto hyp_counts = CountNgrams(ids.hyp, n);
    const auto ref_counts = CountNgrams(ids.ref, n);
    size_t clipped = 0;
    for (const auto& [gram, count] : hyp_counts) {
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) clipped += static_cast<size_t>(std::min(count, it->second));
    }
    const double total = static_cast<double>(hyp.size() - n + 1);
    double precision = static_cast<double>(clipped) / total;
    if (clipped == 0) {
      if (n == 1) return 0.0;
      precision = 1.0 / (2.0 * total);
    }
    log_sum += std::log(precision);
  }
  const double hyp_len = static_cast<double>(hyp.size());
  const double ref_len = static_cast<double>(ref.size());
  const double brevity = hyp_len < ref_len ? std::exp(1.0 - ref_len / hyp_len) : 1.0;
  return brevity * std::exp(log_sum / static_cast<double>(orders));
}

MeteorAlignment AlignForMeteor(const TokenSeq& ref, const TokenSeq& hyp) {
  CheckSameGranularity(ref, hyp);
  const Interned ids = Intern(ref.tokens(), hyp.tokens());
  std::vector<std::set<int>> unused(static_cast<size_t>(ids.vocabulary));
  for (size_t j = 0; j < ids.ref.size(); ++j) {
    unused[static_cast<size_t>(ids.ref[j])].insert(static_cast<int>(j));
  }

  MeteorAlignment out;
  out.hyp_to_ref.assign(ids.hyp.size(), -1);
  int previous = -1;  // ref position matched by hyp[i - 1], or -1
  for (size_t i = 0; i < ids.hyp.size(); ++i) {
    auto& candidates = unused[static_cast<size_t>(ids.hyp[i])];
    if (candidates.empty()) {
      previous = -1;
      continue;
    }
    int chosen = *candidates.begin();
    if (previous >= 0 && candidates.count(previous + 1) > 0) {
      chosen = previous + 1;
    } else {
      ++out.chunks;
    }
    candidates.erase(chosen);
    out.hyp_to_ref[i] = chosen;
    ++out.matches;
    previous = chosen;
  }
  return out;
}

double Meteor(const TokenSeq& ref, const TokenSeq& hyp, const MeteorParams& params) {
  const MeteorAlignment alignment = AlignForMeteor(ref, hyp);
  if (alignment.matches == 0) return 0.0;
  const double m = static_cast<double>(alignment.matches);
  const double precision = m / static_cast<double>(hyp.size());
  const double recall = m / static_cast<double>(ref.size());
  const double f_mean =
      precision * recall / (params.alpha * precision + (1 - params.alpha) * recall);
  const double fragmentation = static_cast<double>(alignment.chunks) / m;
  const double penalty = params.gamma * std::pow(fragmentation, params.beta);
  return f_mean * (1 - penalty);
}

MetricReport ScoreTokens(const TokenSeq& ref, const TokenSeq& hyp) {
  MetricReport report;
  report.edit_distance = EditDistanceNorm(ref, hyp);
  const PrecisionRecall prf = Prf(ref, hyp);
  report.precision = prf.precision;
  report.recall = prf.recall;
  report.f1 = prf.f1;
  report.bleu = Bleu(ref, hyp);
  report.meteor = Meteor(ref, hyp);
  report.n_samples = 1;
  return report;
}

MetricReport ScoreText(std::string_view ref, std::string_view hyp, Granularity granularity) {
  return ScoreTokens(Tokenize(ref, granularity), Tokenize(hyp, granularity));
}

CorpusScore ScoreCorpus(const Corpus& refs, const Corpus& hyps, const ScoreOptions& options) {
  std::map<std::string_view, const Sample*> predictions;
  for (const Sample& hyp : hyps.samples) {
    if (!predictions.emplace(hyp.id, &hyp).second) {
      throw Error("duplicate prediction id '" + hyp.id + "'");
    }
  }
  std::vector<std::pair<const Sample*, const Sample*>> pairs;
  pairs.reserve(refs.samples.size());
  for (const Sample& ref : refs.samples) {
    auto it = predictions.find(ref.id);
    if (it == predictions.end()) throw Error("missing prediction for id '" + ref.id + "'");
    pairs.emplace_back(&ref, it->second);
    predictions.erase(it);
  }
  if (!predictions.empty()) {
    throw Error("prediction id '" + std::string(predictions.begin()->first) +
                "' has no ground truth");
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first->id < b.first->id; });

  const Tokenizer tokenize = options.tokenizer ? options.tokenizer : Tokenizer(Tokenize);
  CorpusScore out;
  out.per_sample.resize(pairs.size());
  auto score_range = [&](size_t begin, size_t step) {
    for (size_t i = begin; i < pairs.size(); i += step) {
      const auto& [ref, hyp] = pairs[i];
      out.per_sample[i].id = ref->id;
      out.per_sample[i].report = ScoreTokens(tokenize(ref->ground_truth, options.granularity),
                                             tokenize(hyp->ground_truth, options.granularity));
    }
  };
  const size_t workers =
      std::clamp<size_t>(static_cast<size_t>(std::max(options.workers, 1)), 1, std::max<size_t>(pairs.size(), 1));
  if (workers == 1) {
    score_range(0, 1);
  } else {
    // Exceptions from workers are captured and rethrown on this thread.
    std::vector<std::exception_ptr> failures(workers);
    std::vector<std::thread> threads;
    for (size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          score_range(w, workers);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }
  }

  MetricReport& total = out.aggregate;
  for (const SampleScore& s : out.per_sample) {
    total.edit_distance += s.report.edit_distance;
    total.precision += s.report.precision;
    total.recall += s.report.recall;
    total.bleu += s.report.bleu;
    total.meteor += s.report.meteor;
  }
  total.n_samples = out.per_sample.size();
  if (total.n_samples > 0) {
    const double n = static_cast<double>(total.n_samples);
    total.edit_distance /= n;
    total.precision /= n;
    total.recall /= n;
    total.bleu /= n;
    total.meteor /= n;
  }
  total.f1 = HarmonicF1(total.precision, total.recall);
  return out;
}

}  // namespace ocrkit
