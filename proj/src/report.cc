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


#include "ocrkit/report.h"

#include <array>
#include <cstdio>

#include "json.hpp"
#include "ocrkit/error.h"

namespace ocrkit {
namespace {

using Json = nlohmann::ordered_json;

struct Column {
  std::string_view name;
  std::string_view arrow;
  double MetricReport::*field;
};

constexpr std::array<Column, 6> kColumns = {{
    {"Edit Distance", "↓", &MetricReport::edit_distance},
    {"F1-score", "↑", &MetricReport::f1},
    {"Precision", "↑", &MetricReport::precision},
    {"Recall", "↑", &MetricReport::recall},
    {"BLEU", "↑", &MetricReport::bleu},
    {"METEOR", "↑", &MetricReport::meteor},
}};

constexpr std::array<std::string_view, 3> kApNames = {"AP@strict", "AP@slight", "AP@high"};
constexpr std::array<std::string_view, 3> kApKeys = {"ap_strict", "ap_slight", "ap_high"};

std::array<double, 3> ApValues(const ApReport& r) { return {r.ap_strict, r.ap_slight, r.ap_high}; }

std::string Pad(std::string_view s, size_t width) {
  std::string out(s);
  // Display width: count scalar values, not bytes.
  size_t shown = 0;
  for (unsigned char c : s) shown += (c & 0xC0) != 0x80;
  if (shown < width) out.append(width - shown, ' ');
  return out;
}

std::string Table(const std::vector<std::string>& headers, const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& h : headers) out += " " + h + " |";
  out += "\n|";
  for (size_t i = 0; i < headers.size(); ++i) out += "---|";
  out += "\n|";
  for (const auto& c : cells) out += " " + c + " |";
  return out + "\n";
}

Json MetricJson(const MetricReport& r) {
  Json j;
  j["edit_distance"] = r.edit_distance;
  j["f1"] = r.f1;
  j["precision"] = r.precision;
  j["recall"] = r.recall;
  j["bleu"] = r.bleu;
  j["meteor"] = r.meteor;
  j["n_samples"] = r.n_samples;
  return j;
}

MetricReport MetricFromJson(const Json& j) {
  MetricReport r;
  r.edit_distance = j.at("edit_distance").get<double>();
  r.f1 = j.at("f1").get<double>();
  r.precision = j.at("precision").get<double>();
  r.recall = j.at("recall").get<double>();
  r.bleu = j.at("bleu").get<double>();
  r.meteor = j.at("meteor").get<double>();
  r.n_samples = j.at("n_samples").get<size_t>();
  return r;
}

template <typename F>
auto ParseJson(std::string_view text, F&& convert) {
  try {
    return convert(Json::parse(text));
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed report JSON: ") + e.what());
  }
}

}  // namespace

ReportStyle ParseReportStyle(std::string_view name) {
  if (name == "text") return ReportStyle::kText;
  if (name == "markdown") return ReportStyle::kMarkdown;
  throw Error("unknown report style '" + std::string(name) + "' (expected text or markdown)");
}

std::string FormatFixed3(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", value);
  std::string out = buf;
  if (out == "-0.000") out = "0.000";
  return out;
}

std::string RenderReport(const MetricReport& report, ReportStyle style) {
  if (style == ReportStyle::kMarkdown) {
    std::vector<std::string> headers, cells;
    for (const Column& c : kColumns) {
      headers.push_back(std::string(c.name) + std::string(c.arrow));
      cells.push_back(FormatFixed3(report.*c.field));
    }
    return Table(headers, cells);
  }
  std::string out;
  for (const Column& c : kColumns) out += Pad(c.name, 14) + FormatFixed3(report.*c.field) + "\n";
  out += Pad("Samples", 14) + std::to_string(report.n_samples) + "\n";
  return out;
}

std::string RenderReport(const ApReport& report, ReportStyle style) {
  const auto values = ApValues(report);
  if (style == ReportStyle::kMarkdown) {
    std::vector<std::string> headers, cells;
    for (size_t i = 0; i < values.size(); ++i) {
      headers.emplace_back(kApNames[i]);
      cells.push_back(FormatFixed3(values[i]));
    }
    return Table(headers, cells);
  }
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) out += std::string(kApNames[i]) + " " + FormatFixed3(values[i]) + "\n";
  out += "Samples " + std::to_string(report.n_samples) + "\n";
  return out;
}

std::string MetricReportToJson(const MetricReport& report) { return MetricJson(report).dump(); }

MetricReport MetricReportFromJson(std::string_view json) {
  return ParseJson(json, [](const Json& j) { return MetricFromJson(j); });
}

std::string ApReportToJson(const ApReport& report) {
  Json j;
  const auto values = ApValues(report);
  for (size_t i = 0; i < values.size(); ++i) j[std::string(kApKeys[i])] = values[i];
  j["n_samples"] = report.n_samples;
  return j.dump();
}

ApReport ApReportFromJson(std::string_view json) {
  return ParseJson(json, [](const Json& j) {
    ApReport r;
    r.ap_strict = j.at("ap_strict").get<double>();
    r.ap_slight = j.at("ap_slight").get<double>();
    r.ap_high = j.at("ap_high").get<double>();
    r.n_samples = j.at("n_samples").get<size_t>();
    return r;
  });
}

std::string CorpusScoreToJson(const CorpusScore& score) {
  Json j;
  j["aggregate"] = MetricJson(score.aggregate);
  Json samples = Json::array();
  for (const SampleScore& s : score.per_sample) {
    Json row;
    row["id"] = s.id;
    row.update(MetricJson(s.report));
    samples.push_back(std::move(row));
  }
  j["samples"] = std::move(samples);
  return j.dump();
}

CorpusScore CorpusScoreFromJson(std::string_view json) {
  return ParseJson(json, [](const Json& j) {
    CorpusScore score;
    score.aggregate = MetricFromJson(j.at("aggregate"));
    for (const Json& row : j.at("samples")) {
      score.per_sample.push_back({row.at("id").get<std::string>(), MetricFromJson(row)});
    }
    return score;
  });
}

}  // namespace ocrkit
