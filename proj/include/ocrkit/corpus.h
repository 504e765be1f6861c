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

// Benchmark and training records.
//
// A record file holds one JSON object per line (UTF-8, LF terminated):
//
//   {"schema_version":1,"id":"fox-en-0001","task_kind":"PlainDoc",
//    "image_ref":"img/0001.png","prompt":"OCR:","ground_truth":"...",
//    "lang":"en","meta":{"source":"fox"}}
//
// Field order on output is fixed, meta keys are sorted, and non-ASCII text is
// written unescaped, so saving the same corpus twice yields identical bytes.
// See docs/formats.md for the full schema.

#ifndef OCRKIT_CORPUS_H_
#define OCRKIT_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ocrkit {

inline constexpr int kSchemaVersion = 1;

enum class TaskKind {
  kPlainDoc,
  kSceneText,
  kFormattedDoc,
  kFineGrainedBox,
  kFineGrainedColor,
  kMultiCrop,
  kMultiPage,
  kSheetMusic,
  kGeometry,
  kChart,
};

std::string_view TaskKindName(TaskKind kind);
std::optional<TaskKind> ParseTaskKind(std::string_view name);

enum class Lang { kEn, kZh, kOther };

std::string_view LangName(Lang lang);
std::optional<Lang> ParseLang(std::string_view name);

using Meta = std::map<std::string, std::string>;

struct Sample {
  std::string id;
  TaskKind task_kind = TaskKind::kPlainDoc;
  std::optional<std::string> image_ref;
  std::string prompt;
  std::string ground_truth;
  Lang lang = Lang::kOther;
  Meta meta;

  friend bool operator==(const Sample&, const Sample&) = default;
};

struct Corpus {
  std::vector<Sample> samples;
  int schema_version = kSchemaVersion;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

struct RecordOptions {
  // Prediction files may carry empty outputs; ground-truth files may not.
  bool require_ground_truth = true;
};

// Throws ParseError carrying line_number on any schema violation.
Sample ParseRecord(std::string_view line, int line_number, int* schema_version,
                   const RecordOptions& options = {});
std::string FormatRecord(const Sample& sample, int schema_version = kSchemaVersion);

Corpus ReadRecords(std::istream& in, const RecordOptions& options = {});
void WriteRecords(const Corpus& corpus, std::ostream& out);
std::string FormatRecords(const Corpus& corpus);

Corpus LoadRecords(const std::filesystem::path& path, const RecordOptions& options = {});
void SaveRecords(const Corpus& corpus, const std::filesystem::path& path);

// Throws Error naming the first duplicate id, empty id or bad schema version.
void ValidateCorpus(const Corpus& corpus, const RecordOptions& options = {});

// Similarity between two texts: 1 - character-level normalized edit distance.
double TextSimilarity(std::string_view a, std::string_view b);

// Keeps the test samples whose best similarity to any train ground truth is
// strictly below threshold.
Corpus DedupFilter(const Corpus& test, const Corpus& train, double threshold);

// floor(ratio * |previous|), guarded against products such as 0.29 * 100
// landing one ulp under an integer.
size_t MixCount(double ratio, size_t previous_size);

// All of next, followed by MixCount(ratio, |previous|) samples of previous
// drawn without replacement: indices are Fisher-Yates shuffled under seed,
// the first k are kept and emitted in their original order.
Corpus MixStages(const Corpus& previous, const Corpus& next, double ratio, uint64_t seed);

}  // namespace ocrkit

#endif  // OCRKIT_CORPUS_H_
