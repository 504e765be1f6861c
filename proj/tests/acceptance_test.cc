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


// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ocrkit/chart.h"
#include "ocrkit/cli.h"
#include "ocrkit/corpus.h"
#include "ocrkit/file_util.h"
#include "ocrkit/finegrained.h"
#include "ocrkit/geometry.h"
#include "ocrkit/page_composer.h"
#include "ocrkit/random.h"
#include "ocrkit/report.h"
#include "ocrkit/text_metrics.h"
#include "ocrkit/tiling.h"
#include "ocrkit/utf8.h"
#include "ocrkit/validation.h"

namespace ocrkit {
namespace {

namespace fs = std::filesystem;

// A criterion returns an empty string on success, otherwise the first failure.
struct Criterion {
  int number;
  std::string title;
  double time_limit_s;  // 0: no limit
  std::function<std::string()> check;
};

// Plain exponential recursion, sharing nothing with the DP.
size_t NaiveLevenshtein(const std::string& a, size_t i, const std::string& b, size_t j) {
  if (i == a.size()) return b.size() - j;
  if (j == b.size()) return a.size() - i;
  const size_t sub = NaiveLevenshtein(a, i + 1, b, j + 1) + (a[i] == b[j] ? 0 : 1);
  const size_t del = NaiveLevenshtein(a, i + 1, b, j) + 1;
  const size_t ins = NaiveLevenshtein(a, i, b, j + 1) + 1;
  return std::min({sub, del, ins});
}

std::vector<std::string> CharTokens(const std::string& s) {
  std::vector<std::string> out;
  for (char c : s) out.emplace_back(1, c);
  return out;
}

std::string EditDistanceOracle() {
  std::vector<std::string> strings = {""};
  for (size_t len = 1; len <= 6; ++len) {
    for (size_t bits = 0; bits < (size_t{1} << len); ++bits) {
      std::string s;
      for (size_t k = 0; k < len; ++k) s += (bits >> k & 1) ? 'b' : 'a';
      strings.push_back(s);
    }
  }
  size_t pairs = 0;
  for (const std::string& a : strings) {
    const auto ta = CharTokens(a);
    for (const std::string& b : strings) {
      const auto tb = CharTokens(b);
      ++pairs;
      const size_t expected = NaiveLevenshtein(a, 0, b, 0);
      if (LevenshteinDistance(ta, tb) != expected) return "mismatch on '" + a + "' / '" + b + "'";
    }
  }
  if (pairs != 127 * 127) return "unexpected pair count " + std::to_string(pairs);
  return "";
}

TokenSeq RandomSeq(Rng& rng, size_t min_len, size_t max_len) {
  static const std::vector<std::string> vocab = {"the", "a", "cat", "sat", "on", "mat", "of", "中", "文", "x", "y", "z"};
  std::vector<std::string> tokens(rng.UniformInt(min_len, max_len));
  for (auto& t : tokens) t = vocab[rng.UniformInt(0, vocab.size() - 1)];
  return TokenSeq(std::move(tokens), Granularity::kWord);
}

std::string MetricIdentities() {
  Rng rng(101);
  for (int i = 0; i < 500; ++i) {
    const TokenSeq x = RandomSeq(rng, 1, 60);
    if (Bleu(x, x) != 1.0) return "bleu(x,x) != 1 for length " + std::to_string(x.size());
    const double n = static_cast<double>(x.size());
    if (std::abs(Meteor(x, x) - (1.0 - 0.5 / (n * n * n))) > 1e-12) {
      return "meteor(x,x) off for length " + std::to_string(x.size());
    }
    const PrecisionRecall prf = Prf(x, x);
    if (prf.precision != 1 || prf.recall != 1 || prf.f1 != 1) return "prf(x,x) != (1,1,1)";
    if (EditDistanceNorm(x, x) != 0 || LevenshteinDistance(x.tokens(), x.tokens()) != 0) return "edit(x,x) != 0";
  }
  return "";
}

// METEOR(x, x) = 1 - 0.5 / n^3 only prints as 1.000 once n >= 10, so smoke
// samples use at least 12 tokens.
std::string ScoringSmoke() {
  Rng rng(202);
  Corpus gt;
  for (int i = 0; i < 20; ++i) {
    Sample s;
    s.id = "smoke-" + std::to_string(i);
    std::string text;
    const TokenSeq seq = RandomSeq(rng, 12, 30);
    for (const std::string& t : seq.tokens()) text += (text.empty() ? "" : " ") + t;
    s.ground_truth = text;
    gt.samples.push_back(s);
  }
  const CorpusScore perfect = ScoreCorpus(gt, gt);
  const std::string row = RenderReport(perfect.aggregate, ReportStyle::kMarkdown);
  if (row.find("| 0.000 | 1.000 | 1.000 | 1.000 | 1.000 | 1.000 |") == std::string::npos) {
    return "perfect corpus renders as:\n" + row;
  }
  Corpus corrupted = gt;
  corrupted.samples[7].ground_truth = "corrupted " + corrupted.samples[7].ground_truth.substr(
                                                        corrupted.samples[7].ground_truth.find(' ') + 1);
  const MetricReport a = perfect.aggregate;
  const MetricReport b = ScoreCorpus(gt, corrupted).aggregate;
  if (!(b.edit_distance > a.edit_distance)) return "edit distance did not increase";
  if (!(b.f1 < a.f1)) return "F1 did not decrease";
  if (!(b.precision < a.precision)) return "precision did not decrease";
  if (!(b.recall < a.recall)) return "recall did not decrease";
  if (!(b.bleu < a.bleu)) return "BLEU did not decrease";
  if (!(b.meteor < a.meteor)) return "METEOR did not decrease";
  return "";
}

std::string TilingOracle() {
  Rng rng(303);
  for (int trial = 0; trial < 10000; ++trial) {
    const ImageDims dims{static_cast<int64_t>(rng.UniformInt(1, 8192)), static_cast<int64_t>(rng.UniformInt(1, 8192))};
    const TilePlan plan = PlanTiles(dims);
    // Brute force: minimize |w/h - c/r| exactly, then fewer tiles, then fewer columns.
    int best_c = 1, best_r = 1;
    for (int c = 1; c <= kDefaultMaxTiles; ++c) {
      for (int r = 1; c * r <= kDefaultMaxTiles; ++r) {
        const __int128 d = static_cast<__int128>(dims.width) * r - static_cast<__int128>(c) * dims.height;
        const __int128 bd = static_cast<__int128>(dims.width) * best_r - static_cast<__int128>(best_c) * dims.height;
        const __int128 lhs = (d < 0 ? -d : d) * best_r;
        const __int128 rhs = (bd < 0 ? -bd : bd) * r;
        if (lhs < rhs || (lhs == rhs && (c * r < best_c * best_r || (c * r == best_c * best_r && c < best_c)))) {
          best_c = c;
          best_r = r;
        }
      }
    }
    if (plan.grid_cols != best_c || plan.grid_rows != best_r) {
      return FormatDims(dims) + ": planned " + DescribePlan(plan) + ", oracle " + std::to_string(best_c) + "x" +
             std::to_string(best_r);
    }
    __int128 area = 0;
    std::vector<int64_t> xs, ys;
    for (const PixelRect& r : plan.tile_rects) {
      if (r.w <= 0 || r.h <= 0 || r.x < 0 || r.y < 0 || r.x + r.w > dims.width || r.y + r.h > dims.height) {
        return FormatDims(dims) + ": tile outside the image";
      }
      area += static_cast<__int128>(r.w) * r.h;
    }
    // Row-major grid cells: column edges shared by every row, row edges by every column.
    for (int row = 0; row < plan.grid_rows; ++row) {
      int64_t x = 0;
      for (int col = 0; col < plan.grid_cols; ++col) {
        const PixelRect& r = plan.tile_rects[static_cast<size_t>(row * plan.grid_cols + col)];
        if (r.x != x) return FormatDims(dims) + ": gap or overlap between columns";
        x += r.w;
      }
      if (x != dims.width) return FormatDims(dims) + ": row does not span the width";
    }
    for (int col = 0; col < plan.grid_cols; ++col) {
      int64_t y = 0;
      for (int row = 0; row < plan.grid_rows; ++row) {
        const PixelRect& r = plan.tile_rects[static_cast<size_t>(row * plan.grid_cols + col)];
        if (r.y != y) return FormatDims(dims) + ": gap or overlap between rows";
        y += r.h;
      }
      if (y != dims.height) return FormatDims(dims) + ": column does not span the height";
    }
    if (area != static_cast<__int128>(dims.width) * dims.height) return FormatDims(dims) + ": area mismatch";
  }
  return "";
}

std::string Quantization() {
  Rng rng(404);
  for (int trial = 0; trial < 10000; ++trial) {
    const ImageDims dims{static_cast<int64_t>(rng.UniformInt(1, 10000)), static_cast<int64_t>(rng.UniformInt(1, 10000))};
    const double w = static_cast<double>(dims.width), h = static_cast<double>(dims.height);
    const double a = rng.UniformDouble() * w, b = rng.UniformDouble() * w;
    const double c = rng.UniformDouble() * h, d = rng.UniformDouble() * h;
    if (a == b || c == d) continue;
    const BBox box{std::min(a, b), std::min(c, d), std::max(a, b), std::max(c, d)};
    const BBox back = DenormalizeBox(NormalizeBox(box, dims), dims);
    const double bx = std::ceil(w / 2000.0), by = std::ceil(h / 2000.0);
    if (std::abs(back.x1 - box.x1) > bx || std::abs(back.x2 - box.x2) > bx || std::abs(back.y1 - box.y1) > by ||
        std::abs(back.y2 - box.y2) > by) {
      return "deviation beyond bound on " + FormatDims(dims);
    }
    if (NormalizeBox({0, 0, w, h}, dims) != NormBox{0, 0, 1000, 1000}) {
      return "full box of " + FormatDims(dims) + " is not (0,0,1000,1000)";
    }
  }
  return "";
}

std::string ComposerBudget() {
  Rng pool_rng(505);
  std::vector<PageSpec> pool;
  for (int i = 0; i < 120; ++i) {
    const size_t n = pool_rng.UniformInt(1, 900);
    std::string text;
    for (size_t k = 0; k < n; ++k) text += (k ? " w" : "w") + std::to_string(k % 13);
    pool.push_back(MakePageSpec("p" + std::to_string(i), text, "p" + std::to_string(i) + ".png"));
  }
  ComposeOptions options;
  for (uint64_t run = 0; run < 10000; ++run) {
    Rng rng(DeriveSeed(606, run));
    const size_t n = rng.UniformInt(options.min_pages, options.max_pages);
    const MultiPageSample s = ComposeMultipage(pool, n, DeriveSeed(707, run), options);
    if (s.pages.size() < 2 || s.pages.size() > 8 || s.pages.size() != n) return "page count out of range";
    for (const PageSpec& p : s.pages) {
      if (p.token_count >= 650 || TokenCount(p.text) >= 650) return "page " + p.page_id + " has >= 650 tokens";
    }
    if (s.total_tokens > 8192 || TokenCount(s.joined_text) != s.total_tokens) return "budget exceeded";
  }
  return "";
}

std::string GeometryRoundTrip() {
  for (uint64_t seed = 0; seed < 10000; ++seed) {
    const GeomScene scene = GenScene(seed);
    if (ParseTikzSubset(EmitTikz(scene)) != scene) return "round trip failed for seed " + std::to_string(seed);
  }
  return "";
}

std::string ChartApBounds() {
  Rng rng(808);
  ChartGenConfig config;
  config.text_pool = DefaultTextPool();
  std::vector<ChartStruct> preds, gts;
  for (int i = 0; i < 1000; ++i) {
    const ChartStruct gt = GenChartStruct(DeriveSeed(909, i), config).chart;
    ChartStruct pred;
    for (const ChartSeries& s : gt.series) {
      ChartSeries ps{s.name, {}};
      for (const ChartPoint& p : s.points) {
        if (rng.UniformInt(0, 9) == 0) continue;
        ps.points.push_back({p.label, p.value * (1 + (rng.UniformDouble() - 0.5) * 0.3)});
      }
      pred.series.push_back(ps);
    }
    const std::vector<ChartStruct> one_pred = {pred}, one_gt = {gt};
    const ApReport r = MakeApReport(one_pred, one_gt);
    if (!(0 <= r.ap_strict && r.ap_strict <= r.ap_slight && r.ap_slight <= r.ap_high && r.ap_high <= 1)) {
      return "ordering or bounds violated on pair " + std::to_string(i);
    }
    preds.push_back(pred);
    gts.push_back(gt);
  }
  const ApReport all = MakeApReport(preds, gts);
  if (!(all.ap_strict <= all.ap_slight && all.ap_slight <= all.ap_high)) return "aggregate ordering violated";
  if (MakeApReport(gts, gts) != ApReport{1, 1, 1, gts.size()}) return "identical pred/gt is not (1,1,1)";
  return "";
}

std::string ValidatorFuzz() {
  Rng rng(1001);
  const std::string alphabet = "()[]{}\\$|`~*!=-_^:;,.% \t\n\r0123456789abcdefgCNOSPcnos@+#/rkw";
  for (int trial = 0; trial < 10000; ++trial) {
    std::string text;
    const size_t len = rng.UniformInt(0, 80);
    for (size_t i = 0; i < len; ++i) {
      switch (rng.UniformInt(0, 3)) {
        case 0: AppendUtf8(text, static_cast<char32_t>(rng.UniformInt(1, 0x7f))); break;
        case 1: {
          char32_t c = static_cast<char32_t>(rng.UniformInt(0x80, 0x10ffff));
          if (c >= 0xd800 && c <= 0xdfff) c = 0xe9;
          AppendUtf8(text, c);
          break;
        }
        default: text += alphabet[rng.UniformInt(0, alphabet.size() - 1)];
      }
    }
    std::vector<size_t> line_lengths = {0};
    for (char32_t c : DecodeUtf8(text)) {
      if (c == U'\n') {
        line_lengths.push_back(0);
      } else {
        ++line_lengths.back();
      }
    }
    for (FormatKind kind : {FormatKind::kMarkdown, FormatKind::kTikz, FormatKind::kSmiles, FormatKind::kKern}) {
      ValidationReport report;
      try {
        report = ValidateFormat(kind, text);
      } catch (const std::exception& e) {
        return std::string(FormatKindName(kind)) + " threw: " + e.what();
      }
      if (report.ok != report.issues.empty()) return "ok flag disagrees with issues";
      for (const ValidationIssue& issue : report.issues) {
        if (issue.line < 1 || static_cast<size_t>(issue.line) > line_lengths.size() || issue.column < 1 ||
            static_cast<size_t>(issue.column) > line_lengths[issue.line - 1] + 1) {
          return std::string(FormatKindName(kind)) + " issue outside input: " + FormatIssue(issue);
        }
      }
    }
  }
  return "";
}

std::string EndToEndDeterminism() {
  const fs::path dir = fs::temp_directory_path() / "ocrkit_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto p = [&](const std::string& name) { return (dir / name).string(); };

  Corpus pages;
  for (int i = 0; i < 12; ++i) {
    Sample s;
    s.id = "page-" + std::to_string(i);
    s.image_ref = "page-" + std::to_string(i) + ".png";
    s.ground_truth = "page " + std::to_string(i) + " text with a few words";
    s.meta = {{"width", std::to_string(800 + 10 * i)}, {"height", "1100"}};
    pages.samples.push_back(s);
  }
  SaveRecords(pages, p("pages.jsonl"));
  WriteFileAtomic(p("regions.jsonl"),
                  R"({"id": "pg", "image_ref": "pg.png", "width": 2000, "height": 1000, "lang": "en", )"
                  R"("regions": [{"box": [500, 250, 1500, 750], "text": "hello"}, )"
                  R"({"box": [10.5, 10, 300, 90], "text": "title"}]})"
                  "\n");

  using Args = std::vector<std::string>;
  const std::vector<std::pair<std::string, std::function<Args(const std::string&)>>> commands = {
      {"gen-geometry", [&](const std::string& out) { return Args{"gen-geometry", "--seed", "7", "--n", "10", "--out", out}; }},
      {"gen-chart", [&](const std::string& out) { return Args{"gen-chart", "--seed", "7", "--n", "10", "--out", out}; }},
      {"compose-pages", [&](const std::string& out) {
         return Args{"compose-pages", "--pages", p("pages.jsonl"), "--n", "5", "--seed", "7", "--out", out};
       }},
      {"make-finegrained", [&](const std::string& out) {
         return Args{"make-finegrained", "--pages", p("regions.jsonl"), "--mode", "both", "--seed", "7", "--out", out};
       }},
      {"paste-layout", [&](const std::string& out) {
         return Args{"paste-layout", "--slices", "900x70,880x60,1000x80,700x75,950x66,990x72,800x80",
                     "--canvas", "1240x1754", "--seed", "7", "--out", out};
       }},
      {"stitch", [&](const std::string& out) {
         return Args{"stitch", "--pages", p("pages.jsonl"), "--orientation", "vertical", "--out", out};
       }},
      {"mix", [&](const std::string& out) {
         return Args{"mix", "--previous", p("pages.jsonl"), "--next", p("pages_next.jsonl"), "--ratio", "0.5",
                     "--seed", "7", "--out", out};
       }},
  };
  Corpus next;
  Sample extra;
  extra.id = "next-0";
  extra.ground_truth = "fresh stage";
  next.samples.push_back(extra);
  SaveRecords(next, p("pages_next.jsonl"));

  std::string failure;
  for (const auto& [name, make_args] : commands) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const std::string out = p(name + "_" + std::to_string(run) + ".out");
      std::ostringstream sout, serr;
      if (RunCli(make_args(out), sout, serr) != 0) {
        failure = name + " failed: " + serr.str();
        break;
      }
      outputs[run] = ReadFile(out);
    }
    if (!failure.empty()) break;
    if (outputs[0].empty() || outputs[0] != outputs[1]) {
      failure = name + " output differs between runs";
      break;
    }
  }
  fs::remove_all(dir);
  return failure;
}

}  // namespace
}  // namespace ocrkit

int main() {
  using ocrkit::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "edit distance equals naive recursion on all {a,b} pairs up to length 6", 10, ocrkit::EditDistanceOracle},
      {2, "metric identities on 500 random sequences", 0, ocrkit::MetricIdentities},
      {3, "scoring smoke test: perfect row, corruption worsens every metric", 5, ocrkit::ScoringSmoke},
      {4, "tiling matches brute force on 10,000 sizes and partitions exactly", 0, ocrkit::TilingOracle},
      {5, "box quantization within ceil(dim/2000) px on 10,000 boxes", 0, ocrkit::Quantization},
      {6, "composer budget invariants over 10,000 runs", 30, ocrkit::ComposerBudget},
      {7, "geometry round trip over 10,000 seeds", 30, ocrkit::GeometryRoundTrip},
      {8, "chart AP ordering and bounds on 1,000 pairs", 0, ocrkit::ChartApBounds},
      {9, "validators total on 10,000 random UTF-8 strings", 0, ocrkit::ValidatorFuzz},
      {10, "every generator subcommand is byte-identical across runs", 0, ocrkit::EndToEndDeterminism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && c.time_limit_s > 0 && seconds >= c.time_limit_s) {
      problem = "took longer than the " + std::to_string(static_cast<int>(c.time_limit_s)) + " s limit";
    }
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", problem.empty() ? "PASS" : "FAIL", c.number, c.title.c_str(),
                seconds, problem.empty() ? "" : " - ", problem.c_str());
    if (!problem.empty()) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
