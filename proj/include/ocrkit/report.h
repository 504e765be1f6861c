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


// Rendering and serialization of metric reports.

#ifndef OCRKIT_REPORT_H_
#define OCRKIT_REPORT_H_

#include <string>
#include <string_view>

#include "ocrkit/chart.h"
#include "ocrkit/text_metrics.h"

namespace ocrkit {

enum class ReportStyle { kText, kMarkdown };

ReportStyle ParseReportStyle(std::string_view name);  // "text" | "markdown"

// printf("%.3f"): rounds the exact binary value, ties to even. Negative zero
// prints as "0.000".
std::string FormatFixed3(double value);

// Columns: Edit Distance, F1-score, Precision, Recall, BLEU, METEOR. The
// markdown style marks direction with arrows (Edit Distance↓, the rest ↑).
std::string RenderReport(const MetricReport& report, ReportStyle style);
// AP@strict, AP@slight, AP@high.
std::string RenderReport(const ApReport& report, ReportStyle style);

// JSON objects with full-precision numbers; parsing returns the same values.
std::string MetricReportToJson(const MetricReport& report);
MetricReport MetricReportFromJson(std::string_view json);
std::string ApReportToJson(const ApReport& report);
ApReport ApReportFromJson(std::string_view json);

// Report plus per-sample rows: {"aggregate": {...}, "samples": [{"id": ..., ...}]}.
std::string CorpusScoreToJson(const CorpusScore& score);
CorpusScore CorpusScoreFromJson(std::string_view json);

}  // namespace ocrkit

#endif  // OCRKIT_REPORT_H_
