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

// Random basic geometry scenes and a closed TikZ subset that round-trips.
//
// Every element is one line of the form `\draw[options] path;`:
//
//   point       \draw[fill] (x,y) circle (1pt);
//   segment     \draw (x1,y1) -- (x2,y2);
//   circle      \draw (x,y) circle (r);
//   rectangle   \draw (x1,y1) rectangle (x2,y2);
//   triangle    \draw (x1,y1) -- (x2,y2) -- (x3,y3) -- cycle;
//   ellipse     \draw (cx,cy) ellipse (rx and ry);
//   line        \draw[domain=x0:x1] plot (\x, {m*\x + b});
//   parabola    \draw[domain=x0:x1] plot (\x, {a*\x*\x + b*\x + c});
//   hyperbola   \draw[domain=-t:t] plot ({cx + a*cosh(\x)}, {cy + b*sinh(\x)})
//                   plot ({cx - a*cosh(\x)}, {cy + b*sinh(\x)});
//
// Options are an optional line style (thick, dashed, dotted) followed by the
// domain for plots. Negative coefficients after '+' are parenthesized. All
// numbers carry at most two fraction digits and print with minimal digits.

#ifndef OCRKIT_GEOMETRY_H_
#define OCRKIT_GEOMETRY_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ocrkit {

// Fixed-point decimal with two fraction digits.
class Decimal2 {
 public:
  constexpr Decimal2() = default;
  static constexpr Decimal2 FromHundredths(int64_t h) {
    Decimal2 d;
    d.hundredths_ = h;
    return d;
  }
  static constexpr Decimal2 FromInt(int64_t v) { return FromHundredths(v * 100); }

  // Accepts [-]digits[.digits] whose value is an exact multiple of 0.01.
  static std::optional<Decimal2> Parse(std::string_view text);

  constexpr int64_t hundredths() const { return hundredths_; }
  double ToDouble() const { return static_cast<double>(hundredths_) / 100.0; }
  std::string ToString() const;

  friend constexpr auto operator<=>(const Decimal2&, const Decimal2&) = default;

 private:
  int64_t hundredths_ = 0;
};

struct Vec2 {
  Decimal2 x;
  Decimal2 y;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct PointShape {
  Vec2 at;
  friend bool operator==(const PointShape&, const PointShape&) = default;
};

struct SegmentShape {
  Vec2 from;
  Vec2 to;
  friend bool operator==(const SegmentShape&, const SegmentShape&) = default;
};

struct CircleShape {
  Vec2 center;
  Decimal2 radius;
  friend bool operator==(const CircleShape&, const CircleShape&) = default;
};

struct RectangleShape {
  Vec2 corner1;
  Vec2 corner2;
  friend bool operator==(const RectangleShape&, const RectangleShape&) = default;
};

struct TriangleShape {
  Vec2 a;
  Vec2 b;
  Vec2 c;
  friend bool operator==(const TriangleShape&, const TriangleShape&) = default;
};

enum class CurveKind { kLine, kParabola, kEllipse, kHyperbola };

// Parameter layout per kind:
//   line       (m, b, x0, x1)        y = m x + b on [x0, x1]
//   parabola   (a, b, c, x0, x1)     y = a x^2 + b x + c on [x0, x1]
//   ellipse    (cx, cy, rx, ry)
//   hyperbola  (cx, cy, a, b, t)     both branches of (x-cx)^2/a^2 - (y-cy)^2/b^2 = 1,
//                                    parameter range [-t, t]
struct CurveShape {
  CurveKind kind = CurveKind::kLine;
  std::vector<Decimal2> params;
  friend bool operator==(const CurveShape&, const CurveShape&) = default;
};

size_t CurveArity(CurveKind kind);

using Shape = std::variant<PointShape, SegmentShape, CircleShape, RectangleShape, TriangleShape,
                           CurveShape>;

enum class LineStyle { kSolid, kThick, kDashed, kDotted };

struct Element {
  Shape shape;
  LineStyle style = LineStyle::kSolid;

  friend bool operator==(const Element&, const Element&) = default;
};

struct GeomScene {
  std::vector<Element> elements;

  friend bool operator==(const GeomScene&, const GeomScene&) = default;
};

// Throws Error when an element breaks its invariant: radius and semi-axes
// positive, rectangle corners distinct on both axes, triangle vertices not
// collinear (exact cross product), segment endpoints distinct, plot domains
// non-empty, parabola a != 0, points unstyled.
void ValidateElement(const Element& element);
void ValidateScene(const GeomScene& scene);

enum class ElementKind {
  kPoint,
  kSegment,
  kCircle,
  kRectangle,
  kTriangle,
  kLine,
  kParabola,
  kEllipse,
  kHyperbola,
  kCombined,  // several elements sharing points
};

std::string_view ElementKindName(ElementKind kind);
ElementKind ParseElementKind(std::string_view name);
std::vector<ElementKind> AllElementKinds();

struct GeomGenConfig {
  size_t min_elements = 1;
  size_t max_elements = 6;
  Decimal2 x_min = Decimal2::FromInt(-5);
  Decimal2 x_max = Decimal2::FromInt(5);
  Decimal2 y_min = Decimal2::FromInt(-5);
  Decimal2 y_max = Decimal2::FromInt(5);
  int fraction_digits = 1;  // 0..2; coordinates are multiples of 10^-digits
  std::vector<ElementKind> kinds = AllElementKinds();
  bool styles = true;
};

// Deterministic under seed; every element satisfies ValidateElement and all
// coordinates (points, corners, centers, plot domains) lie inside the bounds,
// as do whole circles and ellipses. The element count is drawn from
// [min_elements, max_elements]. A combined group (circle with its center and
// a radius, rectangle with a diagonal, triangle with its vertices) adds
// several elements and is only drawn while it fits; when it is the only
// allowed kind the smallest group may overrun the count by one.
GeomScene GenScene(uint64_t seed, const GeomGenConfig& config = {});

struct TikzDoc {
  std::string source;

  friend bool operator==(const TikzDoc&, const TikzDoc&) = default;
};

TikzDoc EmitTikz(const GeomScene& scene);

// Inverse of EmitTikz on canonical documents; tolerant of extra whitespace.
// Throws ParseError (line, column) for unknown commands, malformed numbers or
// coordinates, missing semicolons and invariant violations.
GeomScene ParseTikzSubset(const TikzDoc& doc);

// One non-blank line of a document; line_number only labels errors.
Element ParseTikzLine(std::string_view line, int line_number);

// A standalone LaTeX file around the document body.
std::string WrapTikzStandalone(const TikzDoc& doc);

}  // namespace ocrkit

#endif  // OCRKIT_GEOMETRY_H_
