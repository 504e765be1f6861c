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

// Chart structure extraction: parsing the two accepted output forms, value
// matching at relative tolerances, and synthetic chart ground truth.
//
// Dict form (single or double quotes, trailing commas allowed):
//
//   {"title": "Sales", "x_title": "Year", "values": {"north": {"2019": 1.5}}}
//
// Table form (optional header lines, then a pipe table whose first column
// holds the labels and whose header row names the series):
//
//   title: Sales
//   x-title: Year
//   | label | north | south |
//   | --- | --- | --- |
//   | 2019 | 1.5 | 2 |

#ifndef OCRKIT_CHART_H_
#define OCRKIT_CHART_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ocrkit {

struct ChartPoint {
  std::string label;
  double value = 0;

  friend bool operator==(const ChartPoint&, const ChartPoint&) = default;
};

struct ChartSeries {
  std::string name;
  std::vector<ChartPoint> points;

  friend bool operator==(const ChartSeries&, const ChartSeries&) = default;
};

struct ChartStruct {
  std::optional<std::string> title;
  std::optional<std::string> source;
  std::optional<std::string> x_title;
  std::optional<std::string> y_title;
  std::vector<ChartSeries> series;

  size_t ItemCount() const;

  friend bool operator==(const ChartStruct&, const ChartStruct&) = default;
};

// Throws Error on duplicate series names, duplicate labels within a series,
// empty names/labels or non-finite values.
void ValidateChart(const ChartStruct& chart);

// Detects the form from the first non-blank character ('{' means dict).
// Throws ParseError with the line and column of the first problem.
ChartStruct ParseChartOutput(std::string_view text);

std::string SerializeChartDict(const ChartStruct& chart);
// Rows are the union of labels in first-seen order; a series without a
// given label leaves that cell empty. '|' inside text is escaped as "\|".
std::string SerializeChartTable(const ChartStruct& chart);

// Mean per-sample score. Items are (series, label, value) triples; predicted
// items, taken in (series, label) order, match the first unused ground-truth
// item with the same series and label and |pred - gt| <= tolerance *
// max(|gt|, 1e-9). A sample scores matches / max(#pred, #gt), or 1 when both
// are empty. Returns 0 for empty lists.
double ChartAp(std::span<const ChartStruct> preds, std::span<const ChartStruct> gts,
               double tolerance);

struct ApTolerances {
  double strict = 0.0;
  double slight = 0.05;
  double high = 0.10;
};

struct ApReport {
  double ap_strict = 0;
  double ap_slight = 0;
  double ap_high = 0;
  size_t n_samples = 0;

  friend bool operator==(const ApReport&, const ApReport&) = default;
};

// Requires strict <= slight <= high.
ApReport MakeApReport(std::span<const ChartStruct> preds, std::span<const ChartStruct> gts,
                      const ApTolerances& tolerances = {});

struct ChartGenConfig {
  size_t min_series = 1;
  size_t max_series = 3;
  size_t min_points = 3;
  size_t max_points = 8;
  double value_min = 0;
  double value_max = 100;
  int decimals = 2;  // 0..6
  std::vector<std::string> text_pool;
  std::vector<std::string> kinds = {"bar", "line"};  // from {bar, line, pie}
};

// Built-in entity pool used when no pool file is supplied.
std::vector<std::string> DefaultTextPool();

struct GeneratedChart {
  ChartStruct chart;
  std::string kind;
  std::string render_spec;
};

// Deterministic under seed. Series share one label set; labels and names are
// distinct pool entries; values are uniform multiples of 10^-decimals inside
// [value_min, value_max]. Pie charts always get a single series.
GeneratedChart GenChartStruct(uint64_t seed, const ChartGenConfig& config);

// Plain-text plotting instructions, one directive per line:
//
//   render-spec 1
//   kind bar
//   title <text>            (also source / x-title / y-title, when present)
//   series <name>
//   point <label>\t<value>
//   end
std::string FormatRenderSpec(const ChartStruct& chart, std::string_view kind);

}  // namespace ocrkit

#endif  // OCRKIT_CHART_H_
