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


#include "ocrkit/cli.h"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ocrkit/chart.h"
#include "ocrkit/corpus.h"
#include "ocrkit/error.h"
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

constexpr std::string_view kFormattedPrompt = "OCR with format:";

std::string PaddedId(const std::string& prefix, size_t index) {
  std::string digits = std::to_string(index);
  if (digits.size() < 6) digits.insert(0, 6 - digits.size(), '0');
  return prefix + "-" + digits;
}

std::vector<std::string> SplitList(const std::string& text, char separator) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, separator)) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

int DefaultWorkers() {
  const char* env = std::getenv(kWorkersEnv);
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 1 || value > 1024) {
    throw Error(std::string(kWorkersEnv) + " must be an integer in [1, 1024], got '" + env + "'");
  }
  return static_cast<int>(value);
}

// Records go to --out atomically, or to stdout.
void EmitRecords(const Corpus& corpus, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    ValidateCorpus(corpus);
    WriteRecords(corpus, out);
  } else {
    SaveRecords(corpus, path);
  }
}

void EmitText(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    WriteFileAtomic(path, text);
  }
}

std::string ReadInput(const std::string& path) {
  if (!path.empty() && path != "-") return ReadFile(path);
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

// Pairs every ground-truth id with exactly one prediction.
std::vector<const Sample*> PairById(const Corpus& gt, const Corpus& pred) {
  std::map<std::string_view, const Sample*> by_id;
  for (const Sample& s : pred.samples) by_id[s.id] = &s;
  std::vector<const Sample*> paired;
  for (const Sample& s : gt.samples) {
    auto it = by_id.find(s.id);
    if (it == by_id.end()) throw Error("no prediction for id '" + s.id + "'");
    paired.push_back(it->second);
    by_id.erase(it);
  }
  if (!by_id.empty()) throw Error("prediction id '" + std::string(by_id.begin()->first) + "' has no ground truth");
  return paired;
}

RegionPage ParseRegionPage(const std::string& line, int line_number) {
  using Json = nlohmann::json;
  try {
    const Json j = Json::parse(line);
    RegionPage page;
    page.id = j.at("id").get<std::string>();
    page.image_ref = j.value("image_ref", "");
    page.dims = {j.at("width").get<int64_t>(), j.at("height").get<int64_t>()};
    if (j.contains("lang")) {
      const auto lang = ParseLang(j.at("lang").get<std::string>());
      if (!lang) throw Error("unknown lang");
      page.lang = *lang;
    }
    for (const Json& r : j.at("regions")) {
      const auto& b = r.at("box");
      if (!b.is_array() || b.size() != 4) throw Error("box must be [x1, y1, x2, y2]");
      page.regions.push_back({{b[0].get<double>(), b[1].get<double>(), b[2].get<double>(), b[3].get<double>()},
                              r.at("text").get<std::string>()});
    }
    return page;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(line_number, 0, e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(line_number, 0, e.what());
  }
}

std::vector<RegionPage> LoadRegionPages(const std::string& path) {
  std::vector<RegionPage> pages;
  const std::string text = ReadFile(path);
  const auto lines = SplitLines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].find_first_not_of(" \t") == std::string_view::npos) continue;
    try {
      pages.push_back(ParseRegionPage(std::string(lines[i]), static_cast<int>(i) + 1));
    } catch (const Error& e) {
      throw Error(path + ": " + e.what());
    }
  }
  return pages;
}

struct Options {
  // shared
  uint64_t seed = kDefaultSeed;
  std::string out_path;
  std::string json_out;
  std::string style = "text";
  // score / chart-score
  std::string gt_path;
  std::string pred_path;
  std::string granularity = "word";
  int workers = 1;
  ApTolerances tolerances;
  // tile-plan / stitch
  int64_t width = 0;
  int64_t height = 0;
  int max_tiles = kDefaultMaxTiles;
  bool no_thumbnail = false;
  bool show_rects = false;
  std::string pages_path;
  std::string orientation = "horizontal";
  std::string id = "multicrop-000000";
  // make-finegrained
  std::string mode = "both";
  int thickness = 2;
  // compose-pages
  size_t n = 10;
  size_t min_pages = 2;
  size_t max_pages = 8;
  size_t page_token_limit = 650;
  size_t budget = 8192;
  std::string id_prefix;
  // paste-layout
  std::string slices;
  std::string canvas;
  PasteOptions paste;
  // gen-geometry
  GeomGenConfig geom;
  int digits = 1;
  std::string geom_kinds = "all";
  bool no_styles = false;
  // gen-chart
  ChartGenConfig chart;
  std::string chart_kinds = "bar,line";
  std::string pool_path;
  std::string chart_format = "dict";
  // validate-format
  std::string kind;
  std::string input_path;
  bool single_dollar = false;
  // dedup / mix
  std::string test_path;
  std::string train_path;
  double threshold = 0.9;
  std::string previous_path;
  std::string next_path;
  double ratio = 0.0;
};

int RunScore(const Options& o, std::ostream& out) {
  ScoreOptions so;
  so.granularity = ParseGranularity(o.granularity);
  so.workers = o.workers;
  const Corpus gt = LoadRecords(o.gt_path);
  const Corpus pred = LoadRecords(o.pred_path, {.require_ground_truth = false});
  const CorpusScore score = ScoreCorpus(gt, pred, so);
  const std::string rendered = RenderReport(score.aggregate, ParseReportStyle(o.style));
  if (!o.json_out.empty()) WriteFileAtomic(o.json_out, CorpusScoreToJson(score) + "\n");
  out << rendered;
  return 0;
}

int RunChartScore(const Options& o, std::ostream& out, std::ostream& err) {
  const ReportStyle style = ParseReportStyle(o.style);
  const Corpus gt = LoadRecords(o.gt_path);
  const Corpus pred = LoadRecords(o.pred_path, {.require_ground_truth = false});
  const auto paired = PairById(gt, pred);
  std::vector<ChartStruct> gts, preds;
  for (size_t i = 0; i < gt.samples.size(); ++i) {
    try {
      gts.push_back(ParseChartOutput(gt.samples[i].ground_truth));
    } catch (const Error& e) {
      throw Error("ground truth '" + gt.samples[i].id + "': " + e.what());
    }
    try {
      preds.push_back(ParseChartOutput(paired[i]->ground_truth));
    } catch (const Error& e) {
      err << "warning: prediction '" << paired[i]->id << "' is not a chart (" << e.what()
          << "); scored as empty\n";
      preds.emplace_back();
    }
  }
  const ApReport report = MakeApReport(preds, gts, o.tolerances);
  const std::string rendered = RenderReport(report, style);
  if (!o.json_out.empty()) WriteFileAtomic(o.json_out, ApReportToJson(report) + "\n");
  out << rendered;
  return 0;
}

int RunTilePlan(const Options& o, std::ostream& out) {
  const TilePlan plan = PlanTiles({o.width, o.height}, {o.max_tiles, !o.no_thumbnail});
  out << DescribePlan(plan) << "\n";
  if (o.show_rects) {
    for (const PixelRect& r : plan.tile_rects) {
      out << r.x << "," << r.y << "," << r.w << "," << r.h << "\n";
    }
  }
  return 0;
}

int RunStitch(const Options& o, std::ostream& out) {
  const Corpus pages = LoadRecords(o.pages_path);
  const Sample sample =
      MakeMultiCropSample(o.id, pages.samples, ParseOrientation(o.orientation), {o.max_tiles, !o.no_thumbnail});
  Corpus corpus;
  corpus.samples.push_back(sample);
  EmitRecords(corpus, o.out_path, out);
  return 0;
}

int RunMakeFineGrained(const Options& o, std::ostream& out) {
  const FineGrainedMode mode = ParseFineGrainedMode(o.mode);
  Corpus corpus;
  const auto pages = LoadRegionPages(o.pages_path);
  for (size_t i = 0; i < pages.size(); ++i) {
    auto samples = MakeFineGrainedSamples(pages[i], mode, DeriveSeed(o.seed, i), o.thickness);
    std::move(samples.begin(), samples.end(), std::back_inserter(corpus.samples));
  }
  EmitRecords(corpus, o.out_path, out);
  return 0;
}

int RunComposePages(const Options& o, std::ostream& out) {
  const Corpus pages = LoadRecords(o.pages_path);
  std::vector<PageSpec> pool;
  for (const Sample& s : pages.samples) pool.push_back(MakePageSpec(s.id, s.ground_truth, s.image_ref.value_or("")));
  ComposeOptions co;
  co.min_pages = o.min_pages;
  co.max_pages = o.max_pages;
  co.page_token_limit = o.page_token_limit;
  co.total_token_budget = o.budget;
  if (o.min_pages > o.max_pages) throw Error("--min-pages exceeds --max-pages");
  Corpus corpus;
  for (size_t i = 0; i < o.n; ++i) {
    Rng rng(DeriveSeed(o.seed, 2 * i));
    const auto n_pages = static_cast<size_t>(
        rng.UniformInt(static_cast<int64_t>(o.min_pages), static_cast<int64_t>(o.max_pages)));
    const MultiPageSample composed = ComposeMultipage(pool, n_pages, DeriveSeed(o.seed, 2 * i + 1), co);
    corpus.samples.push_back(MultiPageToSample(composed, PaddedId(o.id_prefix.empty() ? "multipage" : o.id_prefix, i), co));
  }
  EmitRecords(corpus, o.out_path, out);
  return 0;
}

int RunPasteLayout(const Options& o, std::ostream& out) {
  std::vector<ImageDims> slices;
  for (const std::string& item : SplitList(o.slices, ',')) slices.push_back(ParseDims(item));
  const PasteLayout layout = PasteHandwritingLines(slices, ParseDims(o.canvas), o.seed, o.paste);
  EmitText(FormatPasteLayout(layout), o.out_path, out);
  return 0;
}

int RunGenGeometry(const Options& o, std::ostream& out) {
  GeomGenConfig config = o.geom;
  config.fraction_digits = o.digits;
  config.styles = !o.no_styles;
  if (o.geom_kinds != "all") {
    config.kinds.clear();
    for (const std::string& name : SplitList(o.geom_kinds, ',')) config.kinds.push_back(ParseElementKind(name));
  }
  Corpus corpus;
  for (size_t i = 0; i < o.n; ++i) {
    const GeomScene scene = GenScene(DeriveSeed(o.seed, i), config);
    Sample s;
    s.id = PaddedId(o.id_prefix.empty() ? "geometry" : o.id_prefix, i);
    s.task_kind = TaskKind::kGeometry;
    s.prompt = std::string(kFormattedPrompt);
    s.ground_truth = EmitTikz(scene).source;
    s.meta["n_elements"] = std::to_string(scene.elements.size());
    s.meta["format"] = "tikz";
    corpus.samples.push_back(std::move(s));
  }
  EmitRecords(corpus, o.out_path, out);
  return 0;
}

int RunGenChart(const Options& o, std::ostream& out) {
  ChartGenConfig config = o.chart;
  config.kinds = SplitList(o.chart_kinds, ',');
  config.text_pool = DefaultTextPool();
  if (!o.pool_path.empty()) {
    config.text_pool.clear();
    for (std::string_view line : SplitLines(ReadFile(o.pool_path))) config.text_pool.emplace_back(line);
  }
  if (o.chart_format != "dict" && o.chart_format != "table") {
    throw Error("--format must be dict or table, got '" + o.chart_format + "'");
  }
  Corpus corpus;
  for (size_t i = 0; i < o.n; ++i) {
    const GeneratedChart chart = GenChartStruct(DeriveSeed(o.seed, i), config);
    Sample s;
    s.id = PaddedId(o.id_prefix.empty() ? "chart" : o.id_prefix, i);
    s.task_kind = TaskKind::kChart;
    s.prompt = std::string(kFormattedPrompt);
    s.ground_truth = o.chart_format == "dict" ? SerializeChartDict(chart.chart) : SerializeChartTable(chart.chart);
    s.meta["chart_kind"] = chart.kind;
    s.meta["format"] = o.chart_format;
    s.meta["render_spec"] = chart.render_spec;
    corpus.samples.push_back(std::move(s));
  }
  EmitRecords(corpus, o.out_path, out);
  return 0;
}

int RunValidateFormat(const Options& o, std::ostream& out) {
  const FormatKind kind = ParseFormatKind(o.kind);
  const std::string text = ReadInput(o.input_path);
  ValidationReport report;
  if (kind == FormatKind::kMarkdown) {
    MarkdownOptions mo;
    if (o.single_dollar) mo.delimiters.push_back({"$", "$"});
    report = ValidateMathpixMarkdown(text, mo);
  } else {
    report = ValidateFormat(kind, text);
  }
  for (const ValidationIssue& issue : report.issues) out << FormatIssue(issue) << "\n";
  return report.ok ? 0 : 1;
}

int RunDedup(const Options& o, std::ostream& out, std::ostream& err) {
  const Corpus test = LoadRecords(o.test_path);
  const Corpus train = LoadRecords(o.train_path);
  const Corpus kept = DedupFilter(test, train, o.threshold);
  err << "dedup: kept " << kept.samples.size() << " of " << test.samples.size() << " samples\n";
  EmitRecords(kept, o.out_path, out);
  return 0;
}

int RunMix(const Options& o, std::ostream& out) {
  const Corpus previous = LoadRecords(o.previous_path);
  const Corpus next = LoadRecords(o.next_path);
  EmitRecords(MixStages(previous, next, o.ratio, o.seed), o.out_path, out);
  return 0;
}

void AddSeed(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "Random seed (never derived from the clock)");
}

void AddOut(CLI::App* sub, Options& o, const std::string& what) {
  sub->add_option("--out", o.out_path, what + "; written atomically, stdout when omitted");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Deterministic OCR benchmark scoring and synthetic data toolkit", "ocrkit");
  app.option_defaults()->always_capture_default(true);
  app.require_subcommand(1);
  app.set_version_flag("--version", "ocrkit 1.0.0");

  Options o;
  std::string workers_env_error;
  try {
    o.workers = DefaultWorkers();
  } catch (const Error& e) {
    workers_env_error = e.what();
  }

  auto* score = app.add_subcommand("score", "Score text predictions against ground truth");
  score->add_option("--gt", o.gt_path, "Ground-truth record file")->required()->check(CLI::ExistingFile);
  score->add_option("--pred", o.pred_path, "Prediction record file (same ids)")->required()->check(CLI::ExistingFile);
  score->add_option("--granularity", o.granularity, "Token granularity")->check(CLI::IsMember({"word", "char"}));
  score->add_option("--workers", o.workers, std::string("Scoring threads (default from ") + kWorkersEnv + ", else 1)")
      ->check(CLI::Range(1, 1024));
  score->add_option("--style", o.style, "Report style")->check(CLI::IsMember({"text", "markdown"}));
  score->add_option("--json-out", o.json_out, "Also write aggregate and per-sample scores as JSON");

  auto* chart_score = app.add_subcommand("chart-score", "Score chart predictions with AP at three tolerances");
  chart_score->add_option("--gt", o.gt_path, "Ground-truth record file")->required()->check(CLI::ExistingFile);
  chart_score->add_option("--pred", o.pred_path, "Prediction record file")->required()->check(CLI::ExistingFile);
  chart_score->add_option("--tol-strict", o.tolerances.strict, "Relative tolerance for AP@strict")
      ->check(CLI::NonNegativeNumber);
  chart_score->add_option("--tol-slight", o.tolerances.slight, "Relative tolerance for AP@slight")
      ->check(CLI::NonNegativeNumber);
  chart_score->add_option("--tol-high", o.tolerances.high, "Relative tolerance for AP@high")
      ->check(CLI::NonNegativeNumber);
  chart_score->add_option("--style", o.style, "Report style")->check(CLI::IsMember({"text", "markdown"}));
  chart_score->add_option("--json-out", o.json_out, "Also write the report as JSON");

  auto* tile = app.add_subcommand("tile-plan", "Plan dynamic-resolution tiles for an image size");
  tile->add_option("--width", o.width, "Image width in px")->required()->check(CLI::PositiveNumber);
  tile->add_option("--height", o.height, "Image height in px")->required()->check(CLI::PositiveNumber);
  tile->add_option("--max-tiles", o.max_tiles, "Upper bound on cols * rows")->check(CLI::Range(1, 1024));
  tile->add_flag("--no-thumbnail", o.no_thumbnail, "Omit the global thumbnail");
  tile->add_flag("--rects", o.show_rects, "Also print the tile rectangles as x,y,w,h");

  auto* stitch = app.add_subcommand("stitch", "Stitch page records into one multi-crop sample");
  stitch->add_option("--pages", o.pages_path, "Page records with meta width/height")
      ->required()
      ->check(CLI::ExistingFile);
  stitch->add_option("--orientation", o.orientation, "Stitch direction")
      ->check(CLI::IsMember({"horizontal", "vertical"}));
  stitch->add_option("--id", o.id, "Id of the stitched sample");
  stitch->add_option("--max-tiles", o.max_tiles, "Upper bound on cols * rows")->check(CLI::Range(1, 1024));
  stitch->add_flag("--no-thumbnail", o.no_thumbnail, "Omit the global thumbnail");
  AddOut(stitch, o, "Output record file");

  auto* fine = app.add_subcommand("make-finegrained", "Box- and color-guided samples from region-annotated pages");
  fine->add_option("--pages", o.pages_path, "Region page file (JSON lines, see docs/formats.md)")
      ->required()
      ->check(CLI::ExistingFile);
  fine->add_option("--mode", o.mode, "Prompt kind")->check(CLI::IsMember({"box", "color", "both"}));
  fine->add_option("--thickness", o.thickness, "Frame thickness in px")->check(CLI::Range(1, 64));
  AddSeed(fine, o);
  AddOut(fine, o, "Output record file");

  auto* compose = app.add_subcommand("compose-pages", "Multi-page samples under a token budget");
  compose->add_option("--pages", o.pages_path, "Page records (ground_truth is the page text)")
      ->required()
      ->check(CLI::ExistingFile);
  compose->add_option("--n", o.n, "Number of samples");
  compose->add_option("--min-pages", o.min_pages, "Fewest pages per sample")->check(CLI::Range(1, 1000));
  compose->add_option("--max-pages", o.max_pages, "Most pages per sample")->check(CLI::Range(1, 1000));
  compose->add_option("--page-token-limit", o.page_token_limit, "Pages need strictly fewer tokens");
  compose->add_option("--budget", o.budget, "Token budget of the joined text");
  compose->add_option("--id-prefix", o.id_prefix, "Sample id prefix (default multipage)");
  AddSeed(compose, o);
  AddOut(compose, o, "Output record file");

  auto* paste = app.add_subcommand("paste-layout", "Lay out handwriting line slices on a canvas");
  paste->add_option("--slices", o.slices, "Comma-separated slice sizes, e.g. 800x60,760x58")->required();
  paste->add_option("--canvas", o.canvas, "Canvas size WxH")->required();
  paste->add_option("--margin", o.paste.margin, "Canvas margin in px")->check(CLI::NonNegativeNumber);
  paste->add_option("--gap-min", o.paste.gap_min, "Smallest vertical gap in px")->check(CLI::NonNegativeNumber);
  paste->add_option("--gap-max", o.paste.gap_max, "Largest vertical gap in px")->check(CLI::NonNegativeNumber);
  paste->add_option("--min-slices", o.paste.min_slices, "Fewest slices per canvas");
  paste->add_option("--max-slices", o.paste.max_slices, "Most slices per canvas");
  AddSeed(paste, o);
  AddOut(paste, o, "Output layout file");

  auto* geom = app.add_subcommand("gen-geometry", "Random geometry scenes as TikZ ground truth");
  geom->add_option("--n", o.n, "Number of samples");
  geom->add_option("--min-elements", o.geom.min_elements, "Fewest elements per scene")->check(CLI::Range(1, 1000));
  geom->add_option("--max-elements", o.geom.max_elements, "Most elements per scene")->check(CLI::Range(1, 1000));
  geom->add_option("--digits", o.digits, "Fraction digits of coordinates")->check(CLI::Range(0, 2));
  geom->add_option("--kinds", o.geom_kinds,
                   "Comma-separated element kinds (point, segment, circle, rectangle, triangle, line, "
                   "parabola, ellipse, hyperbola, combined) or all");
  geom->add_flag("--no-styles", o.no_styles, "Draw every element solid");
  geom->add_option("--id-prefix", o.id_prefix, "Sample id prefix (default geometry)");
  AddSeed(geom, o);
  AddOut(geom, o, "Output record file");

  auto* chart = app.add_subcommand("gen-chart", "Random chart ground truth with render specs");
  chart->add_option("--n", o.n, "Number of samples");
  chart->add_option("--kinds", o.chart_kinds, "Comma-separated chart kinds from bar, line, pie");
  chart->add_option("--min-series", o.chart.min_series, "Fewest series");
  chart->add_option("--max-series", o.chart.max_series, "Most series");
  chart->add_option("--min-points", o.chart.min_points, "Fewest points per series");
  chart->add_option("--max-points", o.chart.max_points, "Most points per series");
  chart->add_option("--value-min", o.chart.value_min, "Smallest value");
  chart->add_option("--value-max", o.chart.value_max, "Largest value");
  chart->add_option("--decimals", o.chart.decimals, "Fraction digits of values")->check(CLI::Range(0, 6));
  chart->add_option("--pool", o.pool_path, "Entity text pool, one entry per line (built-in pool when omitted)")
      ->check(CLI::ExistingFile);
  chart->add_option("--format", o.chart_format, "Ground-truth form")->check(CLI::IsMember({"dict", "table"}));
  chart->add_option("--id-prefix", o.id_prefix, "Sample id prefix (default chart)");
  AddSeed(chart, o);
  AddOut(chart, o, "Output record file");

  auto* validate = app.add_subcommand("validate-format", "Check markdown, TikZ, SMILES or kern syntax");
  validate->add_option("--kind", o.kind, "Format")
      ->required()
      ->check(CLI::IsMember({"markdown", "tikz", "smiles", "kern"}));
  validate->add_option("--input", o.input_path, "Input file (stdin when omitted or -)");
  validate->add_flag("--single-dollar", o.single_dollar, "Also accept $...$ inline math (markdown)");

  auto* dedup = app.add_subcommand("dedup", "Drop test samples too similar to any training sample");
  dedup->add_option("--test", o.test_path, "Test record file")->required()->check(CLI::ExistingFile);
  dedup->add_option("--train", o.train_path, "Training record file")->required()->check(CLI::ExistingFile);
  dedup->add_option("--threshold", o.threshold, "Keep samples whose best similarity is below this")
      ->check(CLI::Range(0.0, 1.0));
  AddOut(dedup, o, "Output record file");

  auto* mix = app.add_subcommand("mix", "Replay a fraction of an earlier stage's data into the next");
  mix->add_option("--previous", o.previous_path, "Earlier stage records")->required()->check(CLI::ExistingFile);
  mix->add_option("--next", o.next_path, "Next stage records")->required()->check(CLI::ExistingFile);
  mix->add_option("--ratio", o.ratio, "Fraction of the earlier stage to keep")->required()->check(CLI::Range(0.0, 1.0));
  AddSeed(mix, o);
  AddOut(mix, o, "Output record file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (score->parsed()) {
      if (!workers_env_error.empty() && score->count("--workers") == 0) throw Error(workers_env_error);
      return RunScore(o, out);
    }
    if (chart_score->parsed()) return RunChartScore(o, out, err);
    if (tile->parsed()) return RunTilePlan(o, out);
    if (stitch->parsed()) return RunStitch(o, out);
    if (fine->parsed()) return RunMakeFineGrained(o, out);
    if (compose->parsed()) return RunComposePages(o, out);
    if (paste->parsed()) return RunPasteLayout(o, out);
    if (geom->parsed()) return RunGenGeometry(o, out);
    if (chart->parsed()) return RunGenChart(o, out);
    if (validate->parsed()) return RunValidateFormat(o, out);
    if (dedup->parsed()) return RunDedup(o, out, err);
    if (mix->parsed()) return RunMix(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace ocrkit
