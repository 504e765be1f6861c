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

#include "ocrkit/chart.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "ocrkit/error.h"
#include "ocrkit/random.h"
#include "ocrkit/utf8.h"

namespace ocrkit {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string FormatNumber(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

// Plain, signed or scientific decimal. Returns nullopt unless the whole of
// text is one number.
std::optional<double> ParseDecimal(std::string_view text) {
  size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  const size_t mantissa = i;
  size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
  }
  if (digits == 0) return std::nullopt;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    size_t exp_digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++exp_digits;
    if (exp_digits == 0) return std::nullopt;
  }
  if (i != text.size()) return std::nullopt;
  std::string_view body = text;
  if (!body.empty() && body[0] == '+') body.remove_prefix(1);
  (void)mantissa;
  double value = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc() || ptr != body.data() + body.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

class DictParser {
 public:
  explicit DictParser(std::string_view text) : text_(text) {}

  ChartStruct Parse() {
    ChartStruct chart;
    SkipSpace();
    ParseObject([&](const std::string& raw_key, size_t key_pos) {
      const std::string key = Lower(raw_key);
      auto text_field = [&](std::optional<std::string>& field) {
        if (field) FailAt(key_pos, "duplicate key '" + raw_key + "'");
        field = std::string(Trim(ParseString()));
      };
      if (key == "title") {
        text_field(chart.title);
      } else if (key == "source") {
        text_field(chart.source);
      } else if (key == "x_title" || key == "x-title") {
        text_field(chart.x_title);
      } else if (key == "y_title" || key == "y-title") {
        text_field(chart.y_title);
      } else if (key == "values") {
        if (seen_values_) FailAt(key_pos, "duplicate key 'values'");
        seen_values_ = true;
        ParseValues(chart);
      } else {
        FailAt(key_pos, "unknown key '" + raw_key + "'");
      }
    });
    SkipSpace();
    if (pos_ != text_.size()) Fail("trailing characters after the closing brace");
    return chart;
  }

 private:
  void ParseValues(ChartStruct& chart) {
    ParseObject([&](const std::string& raw_name, size_t name_pos) {
      ChartSeries series;
      series.name = std::string(Trim(raw_name));
      if (series.name.empty()) FailAt(name_pos, "empty series name");
      for (const ChartSeries& s : chart.series) {
        if (s.name == series.name) FailAt(name_pos, "duplicate series name '" + series.name + "'");
      }
      ParseObject([&](const std::string& raw_label, size_t label_pos) {
        ChartPoint point;
        point.label = std::string(Trim(raw_label));
        if (point.label.empty()) FailAt(label_pos, "empty label");
        for (const ChartPoint& p : series.points) {
          if (p.label == point.label) FailAt(label_pos, "duplicate label '" + point.label + "'");
        }
        point.value = ParseNumber();
        series.points.push_back(std::move(point));
      });
      chart.series.push_back(std::move(series));
    });
  }

  template <typename OnMember>
  void ParseObject(OnMember&& on_member) {
    Expect('{');
    while (true) {
      SkipSpace();
      if (Peek() == '}') {
        ++pos_;
        return;
      }
      const size_t key_pos = pos_;
      const std::string key = ParseString();
      SkipSpace();
      Expect(':');
      SkipSpace();
      on_member(key, key_pos);
      SkipSpace();
      if (Peek() == ',') {
        ++pos_;
        continue;
      }
      if (Peek() == '}') {
        ++pos_;
        return;
      }
      Fail(AtEnd() ? "unbalanced braces: missing '}'" : "expected ',' or '}'");
    }
  }

  std::string ParseString() {
    const char quote = Peek();
    if (quote != '"' && quote != '\'') Fail(AtEnd() ? "unexpected end of input" : "expected a quoted string");
    const size_t start = pos_;
    ++pos_;
    std::string out;
    while (true) {
      if (AtEnd()) FailAt(start, "unterminated string");
      const char c = text_[pos_++];
      if (c == quote) return out;
      if (c == '\n') FailAt(start, "unterminated string");
      if (c != '\\') {
        out += c;
        continue;
      }
      if (AtEnd()) FailAt(start, "unterminated string");
      const char e = text_[pos_++];
      switch (e) {
        case 'n':
          out += '\n';
          break;
        case 't':
          out += '\t';
          break;
        case '\\':
        case '"':
        case '\'':
        case '/':
          out += e;
          break;
        default:
          FailAt(pos_ - 2, std::string("unknown escape '\\") + e + "'");
      }
    }
  }

  double ParseNumber() {
    const size_t start = pos_;
    while (!AtEnd() && (std::isalnum(static_cast<unsigned char>(Peek())) || Peek() == '.' ||
                        Peek() == '+' || Peek() == '-')) {
      ++pos_;
    }
    if (start == pos_ && (Peek() == '"' || Peek() == '\'')) {
      FailAt(start, "non-numeric value: quoted strings are not numbers");
    }
    const auto value = ParseDecimal(text_.substr(start, pos_ - start));
    if (!value) FailAt(start, "non-numeric value '" + std::string(text_.substr(start, pos_ - start)) + "'");
    return *value;
  }

  void SkipSpace() {
    while (!AtEnd() && std::isspace(static_cast<unsigned char>(Peek()))) ++pos_;
  }

  void Expect(char c) {
    if (Peek() != c) {
      Fail(AtEnd() ? std::string("unexpected end of input, expected '") + c + "'"
                   : std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return AtEnd() ? '\0' : text_[pos_]; }

  [[noreturn]] void Fail(const std::string& message) const { FailAt(pos_, message); }

  [[noreturn]] void FailAt(size_t pos, const std::string& message) const {
    int line = 1;
    size_t line_start = 0;
    for (size_t i = 0; i < pos && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    }
    const size_t end = std::min(pos, text_.size());
    const int column = static_cast<int>(CodePointCount(text_.substr(line_start, end - line_start))) + 1;
    throw ParseError(line, column, message);
  }

  std::string_view text_;
  size_t pos_ = 0;
  bool seen_values_ = false;
};

struct Cell {
  std::string text;
  int column = 1;
};

std::vector<Cell> SplitRow(std::string_view line) {
  std::vector<Cell> cells;
  size_t i = line.find('|') + 1;
  std::string current;
  size_t cell_start = i;
  auto column_of = [&](size_t byte) {
    return static_cast<int>(CodePointCount(line.substr(0, byte))) + 1;
  };
  for (; i < line.size(); ++i) {
    if (line[i] == '\\' && i + 1 < line.size() && line[i + 1] == '|') {
      current += '|';
      ++i;
      continue;
    }
    if (line[i] == '|') {
      cells.push_back({std::string(Trim(current)), column_of(cell_start)});
      current.clear();
      cell_start = i + 1;
      continue;
    }
    current += line[i];
  }
  if (!Trim(current).empty()) cells.push_back({std::string(Trim(current)), column_of(cell_start)});
  return cells;
}

bool IsDelimiterRow(const std::vector<Cell>& cells) {
  if (cells.empty()) return false;
  for (const Cell& cell : cells) {
    std::string_view t = cell.text;
    if (!t.empty() && t.front() == ':') t.remove_prefix(1);
    if (!t.empty() && t.back() == ':') t.remove_suffix(1);
    if (t.empty() || t.find_first_not_of('-') != std::string_view::npos) return false;
  }
  return true;
}

ChartStruct ParseTable(std::string_view text) {
  ChartStruct chart;
  const auto lines = SplitLines(text);
  bool in_table = false;
  bool expect_delimiter = false;
  size_t arity = 0;
  for (size_t n = 0; n < lines.size(); ++n) {
    const int line_no = static_cast<int>(n) + 1;
    const std::string_view line = lines[n];
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty()) {
      if (in_table) in_table = false, expect_delimiter = false;
      continue;
    }
    if (trimmed.front() != '|') {
      if (!chart.series.empty() || arity > 0) {
        throw ParseError(line_no, 1, "unexpected text after the table");
      }
      const size_t colon = trimmed.find(':');
      if (colon == std::string_view::npos) throw ParseError(line_no, 1, "expected 'key: value' or a table row");
      const std::string key = Lower(Trim(trimmed.substr(0, colon)));
      std::string value(Trim(trimmed.substr(colon + 1)));
      std::optional<std::string>* field = nullptr;
      if (key == "title") field = &chart.title;
      else if (key == "source") field = &chart.source;
      else if (key == "x-title" || key == "x_title") field = &chart.x_title;
      else if (key == "y-title" || key == "y_title") field = &chart.y_title;
      if (field == nullptr) throw ParseError(line_no, 1, "unknown header key '" + key + "'");
      if (*field) throw ParseError(line_no, 1, "duplicate header key '" + key + "'");
      *field = std::move(value);
      continue;
    }

    const std::vector<Cell> cells = SplitRow(line);
    if (arity == 0) {
      if (cells.empty()) throw ParseError(line_no, 1, "empty table header");
      arity = cells.size();
      for (size_t c = 1; c < cells.size(); ++c) {
        if (cells[c].text.empty()) throw ParseError(line_no, cells[c].column, "empty series name");
        for (const ChartSeries& s : chart.series) {
          if (s.name == cells[c].text) {
            throw ParseError(line_no, cells[c].column, "duplicate series name '" + cells[c].text + "'");
          }
        }
        chart.series.push_back({cells[c].text, {}});
      }
      in_table = true;
      expect_delimiter = true;
      continue;
    }
    if (!in_table) throw ParseError(line_no, 1, "second table in chart output");
    if (expect_delimiter) {
      expect_delimiter = false;
      if (IsDelimiterRow(cells)) {
        if (cells.size() != arity) throw ParseError(line_no, 1, "delimiter row arity mismatch");
        continue;
      }
    }
    if (cells.size() != arity) {
      throw ParseError(line_no, 1, "row has " + std::to_string(cells.size()) + " cells, header has " +
                                       std::to_string(arity));
    }
    const std::string& label = cells[0].text;
    if (label.empty()) throw ParseError(line_no, cells[0].column, "empty label");
    for (size_t c = 1; c < cells.size(); ++c) {
      if (cells[c].text.empty()) continue;
      const auto value = ParseDecimal(cells[c].text);
      if (!value) {
        throw ParseError(line_no, cells[c].column, "non-numeric value cell '" + cells[c].text + "'");
      }
      ChartSeries& series = chart.series[c - 1];
      for (const ChartPoint& p : series.points) {
        if (p.label == label) throw ParseError(line_no, cells[0].column, "duplicate label '" + label + "'");
      }
      series.points.push_back({label, *value});
    }
  }
  if (arity == 0) throw ParseError(static_cast<int>(std::max<size_t>(lines.size(), 1)), 1, "no table found");
  return chart;
}

std::string QuoteDict(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out += c;
    }
  }
  return out + "\"";
}

std::string EscapeCell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

void CheckSingleLine(const std::optional<std::string>& s, const char* what) {
  if (s && s->find('\n') != std::string::npos) {
    throw Error(std::string(what) + " contains a newline; table form needs single-line text");
  }
}

double SampleScore(const ChartStruct& pred, const ChartStruct& gt, double tolerance) {
  struct GtItem {
    double value;
    bool used = false;
  };
  std::multimap<std::pair<std::string_view, std::string_view>, GtItem> gt_items;
  for (const ChartSeries& s : gt.series) {
    for (const ChartPoint& p : s.points) gt_items.emplace(std::pair{std::string_view(s.name), std::string_view(p.label)}, GtItem{p.value});
  }
  std::vector<std::tuple<std::string_view, std::string_view, double>> pred_items;
  for (const ChartSeries& s : pred.series) {
    for (const ChartPoint& p : s.points) pred_items.emplace_back(s.name, p.label, p.value);
  }
  std::sort(pred_items.begin(), pred_items.end());
  const size_t denominator = std::max(pred_items.size(), gt_items.size());
  if (denominator == 0) return 1.0;

  size_t matches = 0;
  for (const auto& [name, label, value] : pred_items) {
    auto [first, last] = gt_items.equal_range({name, label});
    for (auto it = first; it != last; ++it) {
      GtItem& item = it->second;
      if (item.used) continue;
      if (std::fabs(value - item.value) <= tolerance * std::max(std::fabs(item.value), 1e-9)) {
        item.used = true;
        ++matches;
        break;
      }
    }
  }
  return static_cast<double>(matches) / static_cast<double>(denominator);
}

std::vector<std::string> CleanPool(const std::vector<std::string>& pool) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const std::string& entry : pool) {
    const std::string trimmed(Trim(entry));
    if (trimmed.empty()) continue;
    if (trimmed.find_first_of("\n\t") != std::string::npos) {
      throw Error("text pool entry contains a newline or tab: '" + trimmed + "'");
    }
    if (seen.insert(trimmed).second) out.push_back(trimmed);
  }
  return out;
}

int64_t ScaledBound(double bound, double scale, bool upper) {
  const double scaled = bound * scale;
  const double nearest = std::round(scaled);
  if (std::fabs(scaled - nearest) <= 1e-9 * std::max(1.0, std::fabs(scaled))) {
    return static_cast<int64_t>(nearest);
  }
  return static_cast<int64_t>(upper ? std::floor(scaled) : std::ceil(scaled));
}

}  // namespace

size_t ChartStruct::ItemCount() const {
  size_t n = 0;
  for (const ChartSeries& s : series) n += s.points.size();
  return n;
}

void ValidateChart(const ChartStruct& chart) {
  std::set<std::string_view> names;
  for (const ChartSeries& s : chart.series) {
    if (s.name.empty()) throw Error("empty series name");
    if (!names.insert(s.name).second) throw Error("duplicate series name '" + s.name + "'");
    std::set<std::string_view> labels;
    for (const ChartPoint& p : s.points) {
      if (p.label.empty()) throw Error("empty label in series '" + s.name + "'");
      if (!labels.insert(p.label).second) {
        throw Error("duplicate label '" + p.label + "' in series '" + s.name + "'");
      }
      if (!std::isfinite(p.value)) throw Error("non-finite value in series '" + s.name + "'");
    }
  }
}

ChartStruct ParseChartOutput(std::string_view text) {
  const std::string_view trimmed = Trim(text);
  if (trimmed.empty()) throw ParseError(1, 1, "empty chart output");
  if (trimmed.front() == '{') return DictParser(text).Parse();
  return ParseTable(text);
}

std::string SerializeChartDict(const ChartStruct& chart) {
  ValidateChart(chart);
  std::string out = "{";
  auto field = [&](const char* key, const std::optional<std::string>& value) {
    if (!value) return;
    out += QuoteDict(key) + ": " + QuoteDict(*value) + ", ";
  };
  field("title", chart.title);
  field("source", chart.source);
  field("x_title", chart.x_title);
  field("y_title", chart.y_title);
  out += "\"values\": {";
  for (size_t i = 0; i < chart.series.size(); ++i) {
    if (i > 0) out += ", ";
    out += QuoteDict(chart.series[i].name) + ": {";
    const auto& points = chart.series[i].points;
    for (size_t j = 0; j < points.size(); ++j) {
      if (j > 0) out += ", ";
      out += QuoteDict(points[j].label) + ": " + FormatNumber(points[j].value);
    }
    out += "}";
  }
  out += "}}";
  return out;
}

std::string SerializeChartTable(const ChartStruct& chart) {
  ValidateChart(chart);
  CheckSingleLine(chart.title, "title");
  CheckSingleLine(chart.source, "source");
  CheckSingleLine(chart.x_title, "x-title");
  CheckSingleLine(chart.y_title, "y-title");
  std::string out;
  auto header = [&](const char* key, const std::optional<std::string>& value) {
    if (value) out += std::string(key) + ": " + *value + "\n";
  };
  header("title", chart.title);
  header("source", chart.source);
  header("x-title", chart.x_title);
  header("y-title", chart.y_title);

  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const ChartSeries& s : chart.series) {
    if (s.name.find('\n') != std::string::npos) throw Error("series name contains a newline");
    for (const ChartPoint& p : s.points) {
      if (p.label.find('\n') != std::string::npos) throw Error("label contains a newline");
      if (seen.insert(p.label).second) labels.push_back(p.label);
    }
  }
  out += "| label |";
  for (const ChartSeries& s : chart.series) out += " " + EscapeCell(s.name) + " |";
  out += "\n|---|";
  for (size_t i = 0; i < chart.series.size(); ++i) out += "---|";
  out += "\n";
  for (const std::string& label : labels) {
    out += "| " + EscapeCell(label) + " |";
    for (const ChartSeries& s : chart.series) {
      auto it = std::find_if(s.points.begin(), s.points.end(),
                             [&](const ChartPoint& p) { return p.label == label; });
      out += it == s.points.end() ? " |" : " " + FormatNumber(it->value) + " |";
    }
    out += "\n";
  }
  return out;
}

double ChartAp(std::span<const ChartStruct> preds, std::span<const ChartStruct> gts,
               double tolerance) {
  if (preds.size() != gts.size()) {
    throw Error("prediction count " + std::to_string(preds.size()) + " != ground truth count " +
                std::to_string(gts.size()));
  }
  if (!(tolerance >= 0)) throw Error("tolerance must be non-negative");
  if (preds.empty()) return 0.0;
  double sum = 0;
  for (size_t i = 0; i < preds.size(); ++i) sum += SampleScore(preds[i], gts[i], tolerance);
  return sum / static_cast<double>(preds.size());
}

ApReport MakeApReport(std::span<const ChartStruct> preds, std::span<const ChartStruct> gts,
                      const ApTolerances& tolerances) {
  if (!(tolerances.strict <= tolerances.slight && tolerances.slight <= tolerances.high)) {
    throw Error("AP tolerances must satisfy strict <= slight <= high");
  }
  ApReport report;
  report.ap_strict = ChartAp(preds, gts, tolerances.strict);
  report.ap_slight = ChartAp(preds, gts, tolerances.slight);
  report.ap_high = ChartAp(preds, gts, tolerances.high);
  report.n_samples = preds.size();
  return report;
}

std::vector<std::string> DefaultTextPool() {
  return {"Revenue",    "Exports",     "Imports",   "Rainfall",   "Population", "Output",
          "Sales",      "Profit",      "Budget",    "Enrollment", "Visitors",   "Emissions",
          "Harvest",    "Shipments",   "Downloads", "Subscribers", "Energy use", "Turnover",
          "Asia",       "Europe",      "Africa",    "Oceania",    "Americas",   "North",
          "South",      "East",        "West",      "Central",    "Q1",         "Q2",
          "Q3",         "Q4",          "2015",      "2016",       "2017",       "2018",
          "2019",       "2020",        "2021",      "2022",       "2023",       "Retail",
          "Wholesale",  "Online",      "Services",  "Mining",     "Tourism",    "Fisheries",
          "Solar",      "Wind",        "Hydro",     "Coal",       "Natural gas", "Nuclear",
          "Open data portal", "National survey", "Annual report", "Field study", "Census office",
          "Year",       "Region",      "Sector",    "Units (k)",  "Share (%)",  "Index"};
}

GeneratedChart GenChartStruct(uint64_t seed, const ChartGenConfig& config) {
  if (config.min_series < 1 || config.min_series > config.max_series) throw Error("invalid series range");
  if (config.min_points < 1 || config.min_points > config.max_points) throw Error("invalid point range");
  if (!(config.value_min <= config.value_max) || !std::isfinite(config.value_min) ||
      !std::isfinite(config.value_max)) {
    throw Error("invalid value bounds");
  }
  if (config.decimals < 0 || config.decimals > 6) throw Error("decimals must be in [0, 6]");
  if (config.kinds.empty()) throw Error("no chart kinds configured");
  for (const std::string& kind : config.kinds) {
    if (kind != "bar" && kind != "line" && kind != "pie") throw Error("unknown chart kind '" + kind + "'");
  }
  const std::vector<std::string> pool = CleanPool(config.text_pool);
  if (pool.empty()) throw Error("empty text pool");

  const double scale = std::pow(10.0, config.decimals);
  const int64_t lo = ScaledBound(config.value_min, scale, false);
  const int64_t hi = ScaledBound(config.value_max, scale, true);
  if (lo > hi) throw Error("value bounds contain no multiple of 10^-decimals");

  Rng rng(seed);
  auto pick = [&](size_t lo_n, size_t hi_n) {
    return static_cast<size_t>(rng.UniformInt(static_cast<int64_t>(lo_n), static_cast<int64_t>(hi_n)));
  };
  auto draw_text = [&] { return pool[static_cast<size_t>(rng.UniformInt(0, static_cast<int64_t>(pool.size()) - 1))]; };

  GeneratedChart out;
  out.kind = config.kinds[static_cast<size_t>(rng.UniformInt(0, static_cast<int64_t>(config.kinds.size()) - 1))];
  size_t n_series = pick(config.min_series, config.max_series);
  if (out.kind == "pie") n_series = 1;
  const size_t n_points = pick(config.min_points, config.max_points);
  if (pool.size() < n_points || pool.size() < n_series) {
    throw Error("text pool has " + std::to_string(pool.size()) + " distinct entries, need " +
                std::to_string(std::max(n_points, n_series)));
  }

  ChartStruct& chart = out.chart;
  chart.title = draw_text();
  if (rng.UniformInt(0, 1) == 1) chart.source = draw_text();
  if (out.kind != "pie") {
    if (rng.UniformInt(0, 3) > 0) chart.x_title = draw_text();
    if (rng.UniformInt(0, 3) > 0) chart.y_title = draw_text();
  }

  std::vector<size_t> order(pool.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.Shuffle(order);
  std::vector<std::string> labels;
  for (size_t i = 0; i < n_points; ++i) labels.push_back(pool[order[i]]);
  rng.Shuffle(order);
  for (size_t s = 0; s < n_series; ++s) {
    ChartSeries series;
    series.name = pool[order[s]];
    for (const std::string& label : labels) {
      series.points.push_back({label, static_cast<double>(rng.UniformInt(lo, hi)) / scale});
    }
    chart.series.push_back(std::move(series));
  }
  out.render_spec = FormatRenderSpec(chart, out.kind);
  return out;
}

std::string FormatRenderSpec(const ChartStruct& chart, std::string_view kind) {
  ValidateChart(chart);
  std::string out = "render-spec 1\nkind " + std::string(kind) + "\n";
  auto line = [&](const char* key, const std::optional<std::string>& value) {
    if (value) out += std::string(key) + " " + *value + "\n";
  };
  line("title", chart.title);
  line("source", chart.source);
  line("x-title", chart.x_title);
  line("y-title", chart.y_title);
  for (const ChartSeries& s : chart.series) {
    out += "series " + s.name + "\n";
    for (const ChartPoint& p : s.points) out += "point " + p.label + "\t" + FormatNumber(p.value) + "\n";
  }
  out += "end\n";
  return out;
}

}  // namespace ocrkit
