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

#include "ocrkit/geometry.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>

#include "ocrkit/error.h"
#include "ocrkit/random.h"
#include "ocrkit/utf8.h"

namespace ocrkit {
namespace {

using Wide = __int128;

constexpr std::array<std::pair<ElementKind, std::string_view>, 10> kKindNames = {{
    {ElementKind::kPoint, "point"},
    {ElementKind::kSegment, "segment"},
    {ElementKind::kCircle, "circle"},
    {ElementKind::kRectangle, "rectangle"},
    {ElementKind::kTriangle, "triangle"},
    {ElementKind::kLine, "line"},
    {ElementKind::kParabola, "parabola"},
    {ElementKind::kEllipse, "ellipse"},
    {ElementKind::kHyperbola, "hyperbola"},
    {ElementKind::kCombined, "combined"},
}};

bool Collinear(const Vec2& a, const Vec2& b, const Vec2& c) {
  const Wide abx = b.x.hundredths() - a.x.hundredths();
  const Wide aby = b.y.hundredths() - a.y.hundredths();
  const Wide acx = c.x.hundredths() - a.x.hundredths();
  const Wide acy = c.y.hundredths() - a.y.hundredths();
  return abx * acy - aby * acx == 0;
}

Decimal2 Negate(Decimal2 d) { return Decimal2::FromHundredths(-d.hundredths()); }

// ---------------------------------------------------------------------------
// Emission

std::string Coord(const Vec2& v) { return "(" + v.x.ToString() + "," + v.y.ToString() + ")"; }

// A coefficient that follows '+': negatives are parenthesized.
std::string Term(Decimal2 d) {
  return d.hundredths() < 0 ? "(" + d.ToString() + ")" : d.ToString();
}

std::string_view StyleName(LineStyle style) {
  switch (style) {
    case LineStyle::kThick:
      return "thick";
    case LineStyle::kDashed:
      return "dashed";
    case LineStyle::kDotted:
      return "dotted";
    case LineStyle::kSolid:
      break;
  }
  return "";
}

std::string Options(LineStyle style, const std::string& domain) {
  std::vector<std::string> parts;
  if (style != LineStyle::kSolid) parts.emplace_back(StyleName(style));
  if (!domain.empty()) parts.push_back("domain=" + domain);
  if (parts.empty()) return "";
  std::string out = "[";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ", ";
    out += parts[i];
  }
  return out + "]";
}

std::string EmitElement(const Element& element) {
  const LineStyle style = element.style;
  struct Visitor {
    LineStyle style;
    std::string operator()(const PointShape& p) const {
      return "\\draw[fill] " + Coord(p.at) + " circle (1pt);";
    }
    std::string operator()(const SegmentShape& s) const {
      return "\\draw" + Options(style, "") + " " + Coord(s.from) + " -- " + Coord(s.to) + ";";
    }
    std::string operator()(const CircleShape& c) const {
      return "\\draw" + Options(style, "") + " " + Coord(c.center) + " circle (" + c.radius.ToString() + ");";
    }
    std::string operator()(const RectangleShape& r) const {
      return "\\draw" + Options(style, "") + " " + Coord(r.corner1) + " rectangle " + Coord(r.corner2) + ";";
    }
    std::string operator()(const TriangleShape& t) const {
      return "\\draw" + Options(style, "") + " " + Coord(t.a) + " -- " + Coord(t.b) + " -- " + Coord(t.c) +
             " -- cycle;";
    }
    std::string operator()(const CurveShape& c) const {
      const auto& p = c.params;
      switch (c.kind) {
        case CurveKind::kLine:
          return "\\draw" + Options(style, p[2].ToString() + ":" + p[3].ToString()) + " plot (\\x, {" +
                 p[0].ToString() + "*\\x + " + Term(p[1]) + "});";
        case CurveKind::kParabola:
          return "\\draw" + Options(style, p[3].ToString() + ":" + p[4].ToString()) + " plot (\\x, {" +
                 p[0].ToString() + "*\\x*\\x + " + Term(p[1]) + "*\\x + " + Term(p[2]) + "});";
        case CurveKind::kEllipse:
          return "\\draw" + Options(style, "") + " " + Coord({p[0], p[1]}) + " ellipse (" + p[2].ToString() +
                 " and " + p[3].ToString() + ");";
        case CurveKind::kHyperbola: {
          const std::string y = "{" + p[1].ToString() + " + " + p[3].ToString() + "*sinh(\\x)}";
          return "\\draw" + Options(style, Negate(p[4]).ToString() + ":" + p[4].ToString()) + " plot ({" +
                 p[0].ToString() + " + " + p[2].ToString() + "*cosh(\\x)}, " + y + ") plot ({" +
                 p[0].ToString() + " - " + p[2].ToString() + "*cosh(\\x)}, " + y + ");";
        }
      }
      return "";
    }
  };
  return std::visit(Visitor{style}, element.shape);
}

// ---------------------------------------------------------------------------
// Parsing

enum class TokKind { kCommand, kWord, kNumber, kPunct, kDash2, kEnd };

struct Token {
  TokKind kind = TokKind::kEnd;
  std::string text;
  int column = 1;
};

class LineParser {
 public:
  LineParser(std::string_view line, int line_no) : line_(line), line_no_(line_no) { Lex(); }

  Element Parse() {
    const Token& head = Next();
    if (head.kind != TokKind::kCommand || head.text != "\\draw") {
      if (head.kind == TokKind::kCommand) Fail(head, "unknown command '" + head.text + "'");
      Fail(head, "expected \\draw");
    }
    bool fill = false;
    LineStyle style = LineStyle::kSolid;
    std::optional<std::pair<Decimal2, Decimal2>> domain;
    if (IsPunct(Peek(), '[')) ParseOptions(fill, style, domain);

    Element element;
    element.style = style;
    if (Peek().kind == TokKind::kWord && Peek().text == "plot") {
      if (fill) Fail(Peek(), "fill is only valid for points");
      if (!domain) Fail(Peek(), "plot needs a domain option");
      element.shape = ParsePlot(*domain);
    } else {
      if (domain) Fail(Peek(), "domain is only valid for plots");
      element.shape = ParsePath(fill);
    }
    const Token& semi = Next();
    if (!IsPunct(semi, ';')) Fail(semi, semi.kind == TokKind::kEnd ? "missing ';'" : "expected ';'");
    if (Peek().kind != TokKind::kEnd) Fail(Peek(), "text after ';'");
    try {
      ValidateElement(element);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line_no_, start_column_, e.what());
    }
    return element;
  }

 private:
  void ParseOptions(bool& fill, LineStyle& style, std::optional<std::pair<Decimal2, Decimal2>>& domain) {
    Next();  // '['
    while (true) {
      const Token& option = Next();
      if (option.kind != TokKind::kWord) Fail(option, "expected an option");
      if (option.text == "fill") {
        fill = true;
      } else if (option.text == "thick" || option.text == "dashed" || option.text == "dotted") {
        if (style != LineStyle::kSolid) Fail(option, "more than one line style");
        style = option.text == "thick" ? LineStyle::kThick
                : option.text == "dashed" ? LineStyle::kDashed
                                          : LineStyle::kDotted;
      } else if (option.text == "domain") {
        ExpectPunct('=');
        const Decimal2 lo = Number();
        ExpectPunct(':');
        const Decimal2 hi = Number();
        domain.emplace(lo, hi);
      } else {
        Fail(option, "unsupported option '" + option.text + "'");
      }
      const Token& sep = Next();
      if (IsPunct(sep, ']')) return;
      if (!IsPunct(sep, ',')) Fail(sep, "expected ',' or ']'");
    }
  }

  Shape ParsePath(bool fill) {
    const Vec2 first = Coordinate();
    const Token& op = Next();
    if (op.kind == TokKind::kWord && op.text == "circle") {
      ExpectPunct('(');
      const Decimal2 radius = Number();
      bool point_radius = false;
      if (Peek().kind == TokKind::kWord && Peek().text == "pt") {
        Next();
        point_radius = true;
      }
      ExpectPunct(')');
      if (fill || point_radius) {
        if (!fill || !point_radius || radius != Decimal2::FromInt(1)) {
          Fail(op, "points are written \\draw[fill] (x,y) circle (1pt)");
        }
        return PointShape{first};
      }
      return CircleShape{first, radius};
    }
    if (fill) Fail(op, "fill is only valid for points");
    if (op.kind == TokKind::kWord && op.text == "rectangle") return RectangleShape{first, Coordinate()};
    if (op.kind == TokKind::kWord && op.text == "ellipse") {
      ExpectPunct('(');
      const Decimal2 rx = Number();
      ExpectWord("and");
      const Decimal2 ry = Number();
      ExpectPunct(')');
      return CurveShape{CurveKind::kEllipse, {first.x, first.y, rx, ry}};
    }
    if (op.kind == TokKind::kDash2) {
      const Vec2 second = Coordinate();
      if (Peek().kind != TokKind::kDash2) return SegmentShape{first, second};
      Next();
      const Vec2 third = Coordinate();
      if (Peek().kind != TokKind::kDash2) Fail(Peek(), "polylines are not supported; close the triangle with -- cycle");
      Next();
      ExpectWord("cycle");
      return TriangleShape{first, second, third};
    }
    Fail(op, "expected circle, rectangle, ellipse or --");
  }

  Shape ParsePlot(const std::pair<Decimal2, Decimal2>& domain) {
    Next();  // plot
    ExpectPunct('(');
    if (Peek().kind == TokKind::kCommand) {
      ExpectCommand("\\x");
      ExpectPunct(',');
      ExpectPunct('{');
      const Decimal2 lead = Number();
      ExpectPunct('*');
      ExpectCommand("\\x");
      CurveShape curve;
      if (IsPunct(Peek(), '*')) {
        Next();
        ExpectCommand("\\x");
        ExpectPunct('+');
        const Decimal2 b = Coefficient();
        ExpectPunct('*');
        ExpectCommand("\\x");
        ExpectPunct('+');
        const Decimal2 c = Coefficient();
        curve = {CurveKind::kParabola, {lead, b, c, domain.first, domain.second}};
      } else {
        ExpectPunct('+');
        const Decimal2 b = Coefficient();
        curve = {CurveKind::kLine, {lead, b, domain.first, domain.second}};
      }
      ExpectPunct('}');
      ExpectPunct(')');
      return curve;
    }

    const Token& start = Peek();
    const auto [cx, a] = HyperbolaX('+');
    ExpectPunct(',');
    const auto [cy, b] = HyperbolaY();
    ExpectPunct(')');
    ExpectWord("plot");
    ExpectPunct('(');
    const auto [cx2, a2] = HyperbolaX('-');
    ExpectPunct(',');
    const auto [cy2, b2] = HyperbolaY();
    ExpectPunct(')');
    if (cx2 != cx || a2 != a || cy2 != cy || b2 != b) Fail(start, "hyperbola branches disagree");
    if (domain.first != Negate(domain.second)) Fail(start, "hyperbola domain must be -t:t");
    return CurveShape{CurveKind::kHyperbola, {cx, cy, a, b, domain.second}};
  }

  std::pair<Decimal2, Decimal2> HyperbolaX(char sign) {
    ExpectPunct('{');
    const Decimal2 center = Number();
    ExpectPunct(sign);
    const Decimal2 scale = Number();
    ExpectPunct('*');
    ExpectWord("cosh");
    ExpectPunct('(');
    ExpectCommand("\\x");
    ExpectPunct(')');
    ExpectPunct('}');
    return {center, scale};
  }

  std::pair<Decimal2, Decimal2> HyperbolaY() {
    ExpectPunct('{');
    const Decimal2 center = Number();
    ExpectPunct('+');
    const Decimal2 scale = Number();
    ExpectPunct('*');
    ExpectWord("sinh");
    ExpectPunct('(');
    ExpectCommand("\\x");
    ExpectPunct(')');
    ExpectPunct('}');
    return {center, scale};
  }

  Decimal2 Coefficient() {
    if (!IsPunct(Peek(), '(')) return Number();
    Next();
    const Decimal2 value = Number();
    ExpectPunct(')');
    return value;
  }

  Vec2 Coordinate() {
    ExpectPunct('(');
    const Decimal2 x = Number();
    ExpectPunct(',');
    const Decimal2 y = Number();
    ExpectPunct(')');
    return {x, y};
  }

  Decimal2 Number() {
    const Token& t = Next();
    if (t.kind != TokKind::kNumber) Fail(t, "expected a number");
    const auto value = Decimal2::Parse(t.text);
    if (!value) Fail(t, "number '" + t.text + "' needs at most two fraction digits");
    return *value;
  }

  void ExpectPunct(char c) {
    const Token& t = Next();
    if (!IsPunct(t, c)) Fail(t, std::string("expected '") + c + "'");
  }

  void ExpectWord(std::string_view word) {
    const Token& t = Next();
    if (t.kind != TokKind::kWord || t.text != word) Fail(t, "expected '" + std::string(word) + "'");
  }

  void ExpectCommand(std::string_view command) {
    const Token& t = Next();
    if (t.kind != TokKind::kCommand || t.text != command) Fail(t, "expected '" + std::string(command) + "'");
  }

  static bool IsPunct(const Token& t, char c) { return t.kind == TokKind::kPunct && t.text[0] == c; }

  const Token& Peek() const { return tokens_[std::min(pos_, tokens_.size() - 1)]; }
  const Token& Next() {
    const Token& t = Peek();
    if (pos_ < tokens_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void Fail(const Token& at, const std::string& message) const {
    throw ParseError(line_no_, at.column, message);
  }

  void Lex() {
    size_t i = 0;
    auto column = [&](size_t byte) { return static_cast<int>(CodePointCount(line_.substr(0, byte))) + 1; };
    while (i < line_.size()) {
      const unsigned char c = static_cast<unsigned char>(line_[i]);
      if (std::isspace(c)) {
        ++i;
        continue;
      }
      Token t;
      t.column = column(i);
      const size_t start = i;
      const bool sign_allowed =
          tokens_.empty() || (tokens_.back().kind == TokKind::kPunct &&
                              std::string_view("(,=:{[").find(tokens_.back().text[0]) != std::string_view::npos);
      if (c == '\\') {
        ++i;
        while (i < line_.size() && std::isalpha(static_cast<unsigned char>(line_[i]))) ++i;
        t.kind = TokKind::kCommand;
      } else if (std::isalpha(c)) {
        while (i < line_.size() && std::isalpha(static_cast<unsigned char>(line_[i]))) ++i;
        t.kind = TokKind::kWord;
      } else if (c == '-' && i + 1 < line_.size() && line_[i + 1] == '-') {
        i += 2;
        t.kind = TokKind::kDash2;
      } else if (std::isdigit(c) || c == '.' ||
                 (c == '-' && sign_allowed && i + 1 < line_.size() &&
                  (std::isdigit(static_cast<unsigned char>(line_[i + 1])) || line_[i + 1] == '.'))) {
        ++i;
        while (i < line_.size() && (std::isdigit(static_cast<unsigned char>(line_[i])) || line_[i] == '.')) ++i;
        t.kind = TokKind::kNumber;
      } else {
        // One scalar value, so columns stay meaningful for non-ASCII junk.
        ++i;
        while (i < line_.size() && (static_cast<unsigned char>(line_[i]) & 0xC0) == 0x80) ++i;
        t.kind = TokKind::kPunct;
      }
      t.text = std::string(line_.substr(start, i - start));
      tokens_.push_back(std::move(t));
    }
    Token end;
    end.kind = TokKind::kEnd;
    end.column = column(line_.size());
    tokens_.push_back(end);
    start_column_ = tokens_.front().column;
  }

  std::string_view line_;
  int line_no_;
  std::vector<Token> tokens_;
  size_t pos_ = 0;
  int start_column_ = 1;
};

// ---------------------------------------------------------------------------
// Generation

class SceneGenerator {
 public:
  SceneGenerator(uint64_t seed, const GeomGenConfig& config) : rng_(seed), config_(config) {
    if (config.fraction_digits < 0 || config.fraction_digits > 2) {
      throw Error("fraction_digits must be in [0, 2]");
    }
    quantum_ = config.fraction_digits == 0 ? 100 : config.fraction_digits == 1 ? 10 : 1;
    if (config.x_max.hundredths() - config.x_min.hundredths() < 4 * quantum_ ||
        config.y_max.hundredths() - config.y_min.hundredths() < 4 * quantum_) {
      throw Error("coordinate bounds too narrow for the configured precision");
    }
    if (config.kinds.empty()) throw Error("no element kinds configured");
    if (config.min_elements > config.max_elements) throw Error("invalid element range");
  }

  GeomScene Generate() {
    GeomScene scene;
    const auto target = static_cast<size_t>(rng_.UniformInt(static_cast<int64_t>(config_.min_elements),
                                                            static_cast<int64_t>(config_.max_elements)));
    while (scene.elements.size() < target) {
      const size_t remaining = target - scene.elements.size();
      std::vector<ElementKind> usable;
      for (ElementKind kind : config_.kinds) {
        if (kind != ElementKind::kCombined || remaining >= 2) usable.push_back(kind);
      }
      if (usable.empty()) usable.push_back(ElementKind::kCombined);
      const ElementKind kind = usable[static_cast<size_t>(rng_.UniformInt(0, static_cast<int64_t>(usable.size()) - 1))];
      if (kind == ElementKind::kCombined) {
        AddCombined(scene, remaining);
      } else {
        scene.elements.push_back(Make(kind));
      }
    }
    return scene;
  }

 private:
  // Multiple of the quantum in [lo, hi] (hundredths, inclusive).
  Decimal2 Draw(int64_t lo, int64_t hi) {
    const int64_t first = CeilDiv(lo, quantum_);
    const int64_t last = FloorDiv(hi, quantum_);
    if (first > last) throw Error("no representable value in range");
    return Decimal2::FromHundredths(rng_.UniformInt(first, last) * quantum_);
  }

  static int64_t FloorDiv(int64_t a, int64_t b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
  static int64_t CeilDiv(int64_t a, int64_t b) { return -FloorDiv(-a, b); }

  Decimal2 X() { return Draw(config_.x_min.hundredths(), config_.x_max.hundredths()); }
  Decimal2 Y() { return Draw(config_.y_min.hundredths(), config_.y_max.hundredths()); }
  Vec2 Point() { return {X(), Y()}; }

  LineStyle Style() {
    if (!config_.styles || rng_.UniformInt(0, 1) == 0) return LineStyle::kSolid;
    return static_cast<LineStyle>(rng_.UniformInt(1, 3));
  }

  // Center and radius with the whole disc (or ellipse box) inside the bounds.
  std::pair<Vec2, std::pair<Decimal2, Decimal2>> Disc(bool round) {
    const int64_t x0 = config_.x_min.hundredths(), x1 = config_.x_max.hundredths();
    const int64_t y0 = config_.y_min.hundredths(), y1 = config_.y_max.hundredths();
    const Vec2 c{Draw(x0 + quantum_, x1 - quantum_), Draw(y0 + quantum_, y1 - quantum_)};
    const int64_t room_x = std::min(c.x.hundredths() - x0, x1 - c.x.hundredths());
    const int64_t room_y = std::min(c.y.hundredths() - y0, y1 - c.y.hundredths());
    if (round) {
      const Decimal2 r = Draw(quantum_, std::min(room_x, room_y));
      return {c, {r, r}};
    }
    return {c, {Draw(quantum_, room_x), Draw(quantum_, room_y)}};
  }

  Element Make(ElementKind kind) {
    switch (kind) {
      case ElementKind::kPoint:
        return {PointShape{Point()}, LineStyle::kSolid};
      case ElementKind::kSegment: {
        const Vec2 a = Point();
        Vec2 b = Point();
        while (b == a) b = Point();
        return {SegmentShape{a, b}, Style()};
      }
      case ElementKind::kCircle: {
        const auto [c, r] = Disc(true);
        return {CircleShape{c, r.first}, Style()};
      }
      case ElementKind::kRectangle: {
        const Decimal2 xa = X();
        Decimal2 xb = X();
        while (xb == xa) xb = X();
        const Decimal2 ya = Y();
        Decimal2 yb = Y();
        while (yb == ya) yb = Y();
        return {RectangleShape{{xa, ya}, {xb, yb}}, Style()};
      }
      case ElementKind::kTriangle:
        return {Triangle(), Style()};
      case ElementKind::kLine: {
        const auto [lo, hi] = Domain();
        return {CurveShape{CurveKind::kLine, {Coef(-300, 300), Coef(-300, 300), lo, hi}}, Style()};
      }
      case ElementKind::kParabola: {
        const auto [lo, hi] = Domain();
        Decimal2 a = Coef(-200, 200);
        while (a.hundredths() == 0) a = Coef(-200, 200);
        return {CurveShape{CurveKind::kParabola, {a, Coef(-300, 300), Coef(-300, 300), lo, hi}}, Style()};
      }
      case ElementKind::kEllipse: {
        const auto [c, r] = Disc(false);
        return {CurveShape{CurveKind::kEllipse, {c.x, c.y, r.first, r.second}}, Style()};
      }
      case ElementKind::kHyperbola: {
        const Vec2 c = Point();
        return {CurveShape{CurveKind::kHyperbola,
                           {c.x, c.y, Coef(quantum_, 200), Coef(quantum_, 200), Coef(quantum_, 200)}},
                Style()};
      }
      case ElementKind::kCombined:
        break;
    }
    throw Error("unreachable element kind");
  }

  Decimal2 Coef(int64_t lo, int64_t hi) { return Draw(lo, hi); }

  std::pair<Decimal2, Decimal2> Domain() {
    Decimal2 lo = X();
    Decimal2 hi = X();
    while (hi == lo) hi = X();
    if (hi < lo) std::swap(lo, hi);
    return {lo, hi};
  }

  TriangleShape Triangle() {
    for (int attempt = 0; attempt < 64; ++attempt) {
      TriangleShape t{Point(), Point(), Point()};
      if (!Collinear(t.a, t.b, t.c)) return t;
    }
    // Lower-left right triangle; always valid since bounds span >= 4 quanta.
    const Decimal2 x = config_.x_min, y = config_.y_min;
    const Decimal2 x2 = Decimal2::FromHundredths(x.hundredths() + quantum_);
    const Decimal2 y2 = Decimal2::FromHundredths(y.hundredths() + quantum_);
    return {{x, y}, {x2, y}, {x, y2}};
  }

  void AddCombined(GeomScene& scene, size_t remaining) {
    const LineStyle style = Style();
    std::vector<int> groups = {0, 1};  // circle+center+radius (3), rectangle+diagonal (2)
    if (remaining >= 4) groups.push_back(2);  // triangle+vertices (4)
    int group = groups[static_cast<size_t>(rng_.UniformInt(0, static_cast<int64_t>(groups.size()) - 1))];
    if (group == 0 && remaining < 3) group = 1;
    switch (group) {
      case 0: {
        const auto [c, r] = Disc(true);
        scene.elements.push_back({CircleShape{c, r.first}, style});
        scene.elements.push_back({PointShape{c}, LineStyle::kSolid});
        scene.elements.push_back(
            {SegmentShape{c, {Decimal2::FromHundredths(c.x.hundredths() + r.first.hundredths()), c.y}}, style});
        break;
      }
      case 1: {
        const Element rect = Make(ElementKind::kRectangle);
        const auto& r = std::get<RectangleShape>(rect.shape);
        scene.elements.push_back({r, style});
        scene.elements.push_back({SegmentShape{r.corner1, r.corner2}, style});
        break;
      }
      default: {
        const TriangleShape t = Triangle();
        scene.elements.push_back({t, style});
        for (const Vec2& v : {t.a, t.b, t.c}) scene.elements.push_back({PointShape{v}, LineStyle::kSolid});
        break;
      }
    }
  }

  Rng rng_;
  const GeomGenConfig& config_;
  int64_t quantum_ = 10;
};

}  // namespace

std::optional<Decimal2> Decimal2::Parse(std::string_view text) {
  size_t i = 0;
  bool negative = false;
  if (i < text.size() && text[i] == '-') {
    negative = true;
    ++i;
  }
  int64_t whole = 0;
  size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    if (whole > 1'000'000'000'000LL) return std::nullopt;
    whole = whole * 10 + (text[i] - '0');
    ++i;
    ++digits;
  }
  if (digits == 0) return std::nullopt;
  int64_t fraction = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    size_t places = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      const int digit = text[i] - '0';
      if (places < 2) {
        fraction = fraction * 10 + digit;
      } else if (digit != 0) {
        return std::nullopt;
      }
      ++places;
      ++i;
    }
    if (places == 0) return std::nullopt;
    if (places == 1) fraction *= 10;
  }
  if (i != text.size()) return std::nullopt;
  const int64_t h = whole * 100 + fraction;
  return FromHundredths(negative ? -h : h);
}

std::string Decimal2::ToString() const {
  const int64_t magnitude = hundredths_ < 0 ? -hundredths_ : hundredths_;
  std::string out = hundredths_ < 0 ? "-" : "";
  out += std::to_string(magnitude / 100);
  const int64_t fraction = magnitude % 100;
  if (fraction == 0) return out;
  out += '.';
  out += static_cast<char>('0' + fraction / 10);
  if (fraction % 10 != 0) out += static_cast<char>('0' + fraction % 10);
  return out;
}

size_t CurveArity(CurveKind kind) {
  switch (kind) {
    case CurveKind::kLine:
    case CurveKind::kEllipse:
      return 4;
    case CurveKind::kParabola:
    case CurveKind::kHyperbola:
      return 5;
  }
  return 0;
}

void ValidateElement(const Element& element) {
  struct Visitor {
    LineStyle style;
    void operator()(const PointShape&) const {
      if (style != LineStyle::kSolid) throw Error("points carry no line style");
    }
    void operator()(const SegmentShape& s) const {
      if (s.from == s.to) throw Error("segment endpoints coincide");
    }
    void operator()(const CircleShape& c) const {
      if (c.radius.hundredths() <= 0) throw Error("circle radius must be positive");
    }
    void operator()(const RectangleShape& r) const {
      if (r.corner1.x == r.corner2.x || r.corner1.y == r.corner2.y) {
        throw Error("rectangle corners must differ on both axes");
      }
    }
    void operator()(const TriangleShape& t) const {
      if (Collinear(t.a, t.b, t.c)) throw Error("triangle vertices are collinear");
    }
    void operator()(const CurveShape& c) const {
      if (c.params.size() != CurveArity(c.kind)) throw Error("wrong number of curve parameters");
      const auto& p = c.params;
      switch (c.kind) {
        case CurveKind::kLine:
          if (!(p[2] < p[3])) throw Error("plot domain must be non-empty");
          break;
        case CurveKind::kParabola:
          if (p[0].hundredths() == 0) throw Error("parabola needs a != 0");
          if (!(p[3] < p[4])) throw Error("plot domain must be non-empty");
          break;
        case CurveKind::kEllipse:
          if (p[2].hundredths() <= 0 || p[3].hundredths() <= 0) throw Error("ellipse semi-axes must be positive");
          break;
        case CurveKind::kHyperbola:
          if (p[2].hundredths() <= 0 || p[3].hundredths() <= 0) throw Error("hyperbola semi-axes must be positive");
          if (p[4].hundredths() <= 0) throw Error("hyperbola parameter range must be positive");
          break;
      }
    }
  };
  std::visit(Visitor{element.style}, element.shape);
}

void ValidateScene(const GeomScene& scene) {
  for (const Element& e : scene.elements) ValidateElement(e);
}

std::string_view ElementKindName(ElementKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "point";
}

ElementKind ParseElementKind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw Error("unknown element kind '" + std::string(name) + "'");
}

std::vector<ElementKind> AllElementKinds() {
  std::vector<ElementKind> kinds;
  for (const auto& [k, name] : kKindNames) kinds.push_back(k);
  return kinds;
}

GeomScene GenScene(uint64_t seed, const GeomGenConfig& config) {
  return SceneGenerator(seed, config).Generate();
}

TikzDoc EmitTikz(const GeomScene& scene) {
  TikzDoc doc;
  for (const Element& element : scene.elements) {
    ValidateElement(element);
    doc.source += EmitElement(element);
    doc.source += '\n';
  }
  return doc;
}

GeomScene ParseTikzSubset(const TikzDoc& doc) {
  GeomScene scene;
  const auto lines = SplitLines(doc.source);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].find_first_not_of(" \t") == std::string_view::npos) continue;
    scene.elements.push_back(ParseTikzLine(lines[i], static_cast<int>(i) + 1));
  }
  return scene;
}

Element ParseTikzLine(std::string_view line, int line_number) {
  return LineParser(line, line_number).Parse();
}

std::string WrapTikzStandalone(const TikzDoc& doc) {
  return "\\documentclass[tikz]{standalone}\n\\begin{document}\n\\begin{tikzpicture}\n" + doc.source +
         "\\end{tikzpicture}\n\\end{document}\n";
}

}  // namespace ocrkit
