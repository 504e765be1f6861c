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

#include "ocrkit/corpus.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "ocrkit/error.h"
#include "ocrkit/file_util.h"
#include "ocrkit/random.h"
#include "ocrkit/text_metrics.h"

namespace ocrkit {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::pair<TaskKind, std::string_view>, 10> kTaskKinds = {{
    {TaskKind::kPlainDoc, "PlainDoc"},
    {TaskKind::kSceneText, "SceneText"},
    {TaskKind::kFormattedDoc, "FormattedDoc"},
    {TaskKind::kFineGrainedBox, "FineGrainedBox"},
    {TaskKind::kFineGrainedColor, "FineGrainedColor"},
    {TaskKind::kMultiCrop, "MultiCrop"},
    {TaskKind::kMultiPage, "MultiPage"},
    {TaskKind::kSheetMusic, "SheetMusic"},
    {TaskKind::kGeometry, "Geometry"},
    {TaskKind::kChart, "Chart"},
}};

constexpr std::array<std::string_view, 8> kKnownFields = {
    "schema_version", "id", "task_kind", "image_ref", "prompt", "ground_truth", "lang", "meta"};

const std::string& RequireString(const Json& record, const char* field, int line) {
  auto it = record.find(field);
  if (it == record.end()) throw ParseError(line, 0, std::string("missing field '") + field + "'");
  if (!it->is_string()) throw ParseError(line, 0, std::string("field '") + field + "' must be a string");
  return it->get_ref<const std::string&>();
}

}  // namespace

std::string_view TaskKindName(TaskKind kind) {
  for (const auto& [k, name] : kTaskKinds) {
    if (k == kind) return name;
  }
  return "PlainDoc";
}

std::optional<TaskKind> ParseTaskKind(std::string_view name) {
  for (const auto& [k, n] : kTaskKinds) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::string_view LangName(Lang lang) {
  switch (lang) {
    case Lang::kEn:
      return "en";
    case Lang::kZh:
      return "zh";
    case Lang::kOther:
      break;
  }
  return "other";
}

std::optional<Lang> ParseLang(std::string_view name) {
  if (name == "en") return Lang::kEn;
  if (name == "zh") return Lang::kZh;
  if (name == "other") return Lang::kOther;
  return std::nullopt;
}

Sample ParseRecord(std::string_view line, int line_number, int* schema_version,
                   const RecordOptions& options) {
  Json record;
  try {
    record = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw ParseError(line_number, static_cast<int>(e.byte), "malformed record");
  }
  if (!record.is_object()) throw ParseError(line_number, 0, "record is not an object");
  for (const auto& [key, value] : record.items()) {
    if (std::find(kKnownFields.begin(), kKnownFields.end(), key) == kKnownFields.end()) {
      throw ParseError(line_number, 0, "unknown field '" + key + "'");
    }
  }

  int version = kSchemaVersion;
  if (auto it = record.find("schema_version"); it != record.end()) {
    if (!it->is_number_integer()) throw ParseError(line_number, 0, "schema_version must be an integer");
    version = it->get<int>();
    if (version < 1 || version > kSchemaVersion) {
      throw ParseError(line_number, 0, "unsupported schema_version " + std::to_string(version));
    }
  }
  if (schema_version != nullptr) *schema_version = version;

  Sample sample;
  sample.id = RequireString(record, "id", line_number);
  if (sample.id.empty()) throw ParseError(line_number, 0, "empty id");
  const std::string& kind = RequireString(record, "task_kind", line_number);
  const auto task_kind = ParseTaskKind(kind);
  if (!task_kind) throw ParseError(line_number, 0, "unknown task_kind '" + kind + "'");
  sample.task_kind = *task_kind;

  if (auto it = record.find("image_ref"); it != record.end() && !it->is_null()) {
    if (!it->is_string()) throw ParseError(line_number, 0, "field 'image_ref' must be a string");
    sample.image_ref = it->get<std::string>();
  }
  if (record.contains("prompt")) sample.prompt = RequireString(record, "prompt", line_number);
  sample.ground_truth = RequireString(record, "ground_truth", line_number);
  if (options.require_ground_truth && sample.ground_truth.empty()) {
    throw ParseError(line_number, 0, "empty ground_truth");
  }
  if (record.contains("lang")) {
    const std::string& lang = RequireString(record, "lang", line_number);
    const auto parsed = ParseLang(lang);
    if (!parsed) throw ParseError(line_number, 0, "unknown lang '" + lang + "'");
    sample.lang = *parsed;
  }
  if (auto it = record.find("meta"); it != record.end()) {
    if (!it->is_object()) throw ParseError(line_number, 0, "field 'meta' must be an object");
    for (const auto& [key, value] : it->items()) {
      if (!value.is_string()) {
        throw ParseError(line_number, 0, "meta value for '" + key + "' must be a string");
      }
      sample.meta[key] = value.get<std::string>();
    }
  }
  return sample;
}

std::string FormatRecord(const Sample& sample, int schema_version) {
  Json record;
  record["schema_version"] = schema_version;
  record["id"] = sample.id;
  record["task_kind"] = TaskKindName(sample.task_kind);
  if (sample.image_ref) record["image_ref"] = *sample.image_ref;
  record["prompt"] = sample.prompt;
  record["ground_truth"] = sample.ground_truth;
  record["lang"] = LangName(sample.lang);
  Json meta = Json::object();
  for (const auto& [key, value] : sample.meta) meta[key] = value;
  record["meta"] = std::move(meta);
  try {
    return record.dump(-1, ' ', false, Json::error_handler_t::strict);
  } catch (const Json::type_error&) {
    throw Error("sample '" + sample.id + "' contains invalid UTF-8");
  }
}

Corpus ReadRecords(std::istream& in, const RecordOptions& options) {
  Corpus corpus;
  std::set<std::string> ids;
  std::optional<int> version;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    int line_version = kSchemaVersion;
    Sample sample = ParseRecord(line, line_number, &line_version, options);
    if (version && *version != line_version) {
      throw ParseError(line_number, 0, "mixed schema versions in one file");
    }
    version = line_version;
    if (!ids.insert(sample.id).second) {
      throw ParseError(line_number, 0, "duplicate id '" + sample.id + "'");
    }
    corpus.samples.push_back(std::move(sample));
  }
  corpus.schema_version = version.value_or(kSchemaVersion);
  return corpus;
}

void WriteRecords(const Corpus& corpus, std::ostream& out) { out << FormatRecords(corpus); }

std::string FormatRecords(const Corpus& corpus) {
  std::string out;
  for (const Sample& sample : corpus.samples) {
    out += FormatRecord(sample, corpus.schema_version);
    out += '\n';
  }
  return out;
}

Corpus LoadRecords(const std::filesystem::path& path, const RecordOptions& options) {
  std::istringstream in(ReadFile(path));
  try {
    return ReadRecords(in, options);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), path.string() + ": " + std::string(e.what()));
  }
}

void SaveRecords(const Corpus& corpus, const std::filesystem::path& path) {
  ValidateCorpus(corpus, {.require_ground_truth = false});
  WriteFileAtomic(path, FormatRecords(corpus));
}

void ValidateCorpus(const Corpus& corpus, const RecordOptions& options) {
  if (corpus.schema_version < 1 || corpus.schema_version > kSchemaVersion) {
    throw Error("unsupported schema_version " + std::to_string(corpus.schema_version));
  }
  std::set<std::string_view> ids;
  for (const Sample& sample : corpus.samples) {
    if (sample.id.empty()) throw Error("sample with empty id");
    if (!ids.insert(sample.id).second) throw Error("duplicate id '" + sample.id + "'");
    if (options.require_ground_truth && sample.ground_truth.empty()) {
      throw Error("sample '" + sample.id + "' has empty ground_truth");
    }
  }
}

double TextSimilarity(std::string_view a, std::string_view b) {
  return 1.0 - EditDistanceNorm(Tokenize(a, Granularity::kChar), Tokenize(b, Granularity::kChar));
}

Corpus DedupFilter(const Corpus& test, const Corpus& train, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) throw Error("dedup threshold must be in [0, 1]");
  std::vector<TokenSeq> train_tokens;
  train_tokens.reserve(train.samples.size());
  for (const Sample& s : train.samples) train_tokens.push_back(Tokenize(s.ground_truth, Granularity::kChar));

  Corpus kept;
  kept.schema_version = test.schema_version;
  for (const Sample& sample : test.samples) {
    const TokenSeq tokens = Tokenize(sample.ground_truth, Granularity::kChar);
    bool duplicate = false;
    for (const TokenSeq& other : train_tokens) {
      // The length difference bounds the distance from below, hence the
      // similarity from above; skip pairs that cannot reach the threshold.
      const size_t longest = std::max(tokens.size(), other.size());
      if (longest > 0) {
        const size_t shortest = std::min(tokens.size(), other.size());
        const double best_possible = static_cast<double>(shortest) / static_cast<double>(longest);
        if (best_possible < threshold) continue;
      }
      if (1.0 - EditDistanceNorm(tokens, other) >= threshold) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) kept.samples.push_back(sample);
  }
  return kept;
}

size_t MixCount(double ratio, size_t previous_size) {
  if (!(ratio >= 0.0 && ratio <= 1.0)) throw Error("mix ratio must be in [0, 1]");
  const double exact = ratio * static_cast<double>(previous_size);
  const auto count = static_cast<size_t>(std::floor(exact + 1e-9 * std::max(1.0, exact)));
  return std::min(count, previous_size);
}

Corpus MixStages(const Corpus& previous, const Corpus& next, double ratio, uint64_t seed) {
  const size_t count = MixCount(ratio, previous.samples.size());
  std::vector<size_t> order(previous.samples.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(seed);
  rng.Shuffle(order);
  order.resize(count);
  std::sort(order.begin(), order.end());

  Corpus mixed;
  mixed.schema_version = next.schema_version;
  mixed.samples = next.samples;
  std::set<std::string_view> ids;
  for (const Sample& s : next.samples) ids.insert(s.id);
  for (size_t index : order) {
    const Sample& s = previous.samples[index];
    if (!ids.insert(s.id).second) {
      throw Error("id '" + s.id + "' occurs in both stages");
    }
    mixed.samples.push_back(s);
  }
  return mixed;
}

}  // namespace ocrkit
