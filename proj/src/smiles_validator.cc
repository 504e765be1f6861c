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


#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include "ocrkit/validation.h"
#include "validator_util.h"

namespace ocrkit {
namespace {

constexpr std::array<std::u32string_view, 118> kElements = {
    U"H",  U"He", U"Li", U"Be", U"B",  U"C",  U"N",  U"O",  U"F",  U"Ne", U"Na", U"Mg", U"Al", U"Si", U"P",
    U"S",  U"Cl", U"Ar", U"K",  U"Ca", U"Sc", U"Ti", U"V",  U"Cr", U"Mn", U"Fe", U"Co", U"Ni", U"Cu", U"Zn",
    U"Ga", U"Ge", U"As", U"Se", U"Br", U"Kr", U"Rb", U"Sr", U"Y",  U"Zr", U"Nb", U"Mo", U"Tc", U"Ru", U"Rh",
    U"Pd", U"Ag", U"Cd", U"In", U"Sn", U"Sb", U"Te", U"I",  U"Xe", U"Cs", U"Ba", U"La", U"Ce", U"Pr", U"Nd",
    U"Pm", U"Sm", U"Eu", U"Gd", U"Tb", U"Dy", U"Ho", U"Er", U"Tm", U"Yb", U"Lu", U"Hf", U"Ta", U"W",  U"Re",
    U"Os", U"Ir", U"Pt", U"Au", U"Hg", U"Tl", U"Pb", U"Bi", U"Po", U"At", U"Rn", U"Fr", U"Ra", U"Ac", U"Th",
    U"Pa", U"U",  U"Np", U"Pu", U"Am", U"Cm", U"Bk", U"Cf", U"Es", U"Fm", U"Md", U"No", U"Lr", U"Rf", U"Db",
    U"Sg", U"Bh", U"Hs", U"Mt", U"Ds", U"Rg", U"Cn", U"Nh", U"Fl", U"Mc", U"Lv", U"Ts", U"Og",
};

constexpr std::array<std::u32string_view, 9> kAromaticBracket = {U"b",  U"c",  U"n",  U"o", U"p",
                                                                 U"s",  U"se", U"as", U"te"};

bool IsElement(std::u32string_view s) { return std::find(kElements.begin(), kElements.end(), s) != kElements.end(); }

bool IsAromaticBracket(std::u32string_view s) {
  return std::find(kAromaticBracket.begin(), kAromaticBracket.end(), s) != kAromaticBracket.end();
}

bool IsDigit(char32_t c) { return c >= U'0' && c <= U'9'; }
bool IsBond(char32_t c) { return std::u32string_view(U"-=#$:/\\").find(c) != std::u32string_view::npos; }

size_t Digits(std::u32string_view s, size_t i, size_t max_digits = SIZE_MAX) {
  size_t n = 0;
  while (i + n < s.size() && n < max_digits && IsDigit(s[i + n])) ++n;
  return n;
}

// Contents between '[' and ']':
//   isotope? symbol chiral? hcount? charge? class?
bool ValidBracket(std::u32string_view s) {
  size_t i = Digits(s, 0);
  if (i >= s.size()) return false;
  if (s[i] == U'*') {
    ++i;
  } else if (s[i] >= U'A' && s[i] <= U'Z') {
    if (i + 1 < s.size() && s[i + 1] >= U'a' && s[i + 1] <= U'z' && IsElement(s.substr(i, 2))) {
      i += 2;
    } else if (IsElement(s.substr(i, 1))) {
      i += 1;
    } else {
      return false;
    }
  } else if (s.size() - i >= 2 && IsAromaticBracket(s.substr(i, 2))) {
    i += 2;
  } else if (IsAromaticBracket(s.substr(i, 1))) {
    i += 1;
  } else {
    return false;
  }

  if (i < s.size() && s[i] == U'@') {
    ++i;
    auto tagged = [&](std::u32string_view tag, int lo, int hi) {
      if (s.substr(i, tag.size()) != tag) return false;
      const size_t n = Digits(s, i + tag.size(), 2);
      if (n == 0) return false;
      int value = 0;
      for (size_t k = 0; k < n; ++k) value = value * 10 + static_cast<int>(s[i + tag.size() + k] - U'0');
      if (value < lo || value > hi) return false;
      i += tag.size() + n;
      return true;
    };
    if (i < s.size() && s[i] == U'@') {
      ++i;
    } else {
      // A bare '@' is fine when no tag follows.
      (void)(tagged(U"TH", 1, 2) || tagged(U"AL", 1, 2) || tagged(U"SP", 1, 3) || tagged(U"TB", 1, 20) ||
             tagged(U"OH", 1, 30));
    }
  }
  if (i < s.size() && s[i] == U'H') {
    ++i;
    i += Digits(s, i, 1);
  }
  if (i < s.size() && (s[i] == U'+' || s[i] == U'-')) {
    const char32_t sign = s[i];
    ++i;
    if (i < s.size() && s[i] == sign) {
      ++i;
    } else {
      i += Digits(s, i, 2);
    }
  }
  if (i < s.size() && s[i] == U':') {
    ++i;
    const size_t n = Digits(s, i);
    if (n == 0) return false;
    i += n;
  }
  return i == s.size();
}

enum class Prev { kStart, kAtom, kRing, kBond, kDot, kOpen, kClose };

class SmilesChecker {
 public:
  SmilesChecker(std::u32string_view line, ValidationReport& report) : line_(line), report_(report) {}

  void Run() {
    size_t i = 0;
    bool any_atom = false;
    while (i < line_.size()) {
      const char32_t c = line_[i];
      const int column = static_cast<int>(i) + 1;
      if (c == U' ' || c == U'\t') break;

      if (c == U'[') {
        const size_t close = line_.find(U']', i + 1);
        if (close == std::u32string_view::npos) {
          report_.Add(1, column, "BRACKET_UNCLOSED", "'[' is never closed");
          prev_ = Prev::kAtom;
          any_atom = true;
          i = line_.size();
          break;
        }
        if (!ValidBracket(line_.substr(i + 1, close - i - 1))) {
          report_.Add(1, column, "BRACKET_INVALID",
                      "bracket atom '" + internal::ToUtf8(line_.substr(i, close - i + 1)) + "' is malformed");
        }
        Atom();
        any_atom = true;
        i = close + 1;
        continue;
      }
      if (const size_t n = OrganicAt(i)) {
        Atom();
        any_atom = true;
        i += n;
        continue;
      }
      if (IsBond(c)) {
        if (prev_ == Prev::kStart || prev_ == Prev::kBond || prev_ == Prev::kDot) {
          report_.Add(1, column, "BOND_INVALID", "bond '" + internal::ToUtf8(line_.substr(i, 1)) + "' has no atom before it");
        }
        bond_before_ring_ok_ = prev_ == Prev::kAtom || prev_ == Prev::kRing;
        prev_ = Prev::kBond;
        bond_ = c;
        bond_column_ = column;
        ++i;
        continue;
      }
      if (c == U'.') {
        if (prev_ != Prev::kAtom && prev_ != Prev::kRing && prev_ != Prev::kClose && prev_ != Prev::kOpen) {
          report_.Add(1, column, "BOND_INVALID", "'.' must separate two components");
        }
        prev_ = Prev::kDot;
        bond_column_ = column;
        ++i;
        continue;
      }
      if (IsDigit(c) || c == U'%') {
        size_t n = 1;
        std::u32string label(1, c);
        if (c == U'%') {
          if (Digits(line_, i + 1, 2) != 2) {
            report_.Add(1, column, "RING_INVALID", "'%' needs two digits");
            i += 1 + Digits(line_, i + 1, 2);
            continue;
          }
          label = line_.substr(i, 3);
          n = 3;
        }
        Ring(label, column);
        i += n;
        continue;
      }
      if (c == U'(') {
        if (prev_ != Prev::kAtom && prev_ != Prev::kRing && prev_ != Prev::kClose) {
          report_.Add(1, column, "BRANCH_INVALID", "branch must follow an atom");
        }
        parens_.push_back(column);
        prev_ = Prev::kOpen;
        ++i;
        continue;
      }
      if (c == U')') {
        if (parens_.empty()) {
          report_.Add(1, column, "PAREN_UNBALANCED", "')' without a matching '('");
        } else {
          if (prev_ == Prev::kOpen) report_.Add(1, parens_.back(), "BRANCH_EMPTY", "empty branch");
          parens_.pop_back();
        }
        if (prev_ == Prev::kBond || prev_ == Prev::kDot) {
          report_.Add(1, bond_column_, "BOND_INVALID", "bond has no atom after it");
        }
        prev_ = Prev::kClose;
        ++i;
        continue;
      }
      report_.Add(1, column, "ATOM_INVALID", "unexpected character '" + internal::ToUtf8(line_.substr(i, 1)) + "'");
      prev_ = Prev::kAtom;
      ++i;
    }

    if (!any_atom) {
      report_.Add(1, 1, "EMPTY", "no atoms");
      return;
    }
    if (prev_ == Prev::kBond || prev_ == Prev::kDot) {
      report_.Add(1, bond_column_, "BOND_INVALID", "bond has no atom after it");
    }
    for (int column : parens_) report_.Add(1, column, "PAREN_UNBALANCED", "'(' is never closed");
    std::vector<std::pair<int, std::u32string>> open;
    for (const auto& [label, ring] : rings_) open.emplace_back(ring.column, label);
    std::sort(open.begin(), open.end());
    for (const auto& [column, label] : open) {
      report_.Add(1, column, "RING_UNPAIRED", "ring-closure " + internal::ToUtf8(label) + " is never closed");
    }
  }

 private:
  struct OpenRing {
    int column = 0;
    char32_t bond = 0;
  };

  size_t OrganicAt(size_t i) const {
    const std::u32string_view rest = line_.substr(i);
    if (rest.starts_with(U"Cl") || rest.starts_with(U"Br")) return 2;
    return std::u32string_view(U"BCNOPSFIbcnops*").find(rest[0]) != std::u32string_view::npos ? 1 : 0;
  }

  void Atom() {
    if (prev_ == Prev::kBond || prev_ == Prev::kDot) bond_ = 0;
    prev_ = Prev::kAtom;
  }

  void Ring(const std::u32string& label, int column) {
    char32_t bond = 0;
    if (prev_ == Prev::kBond && bond_before_ring_ok_) {
      bond = bond_;
    } else if (prev_ != Prev::kAtom && prev_ != Prev::kRing) {
      report_.Add(1, column, "RING_INVALID", "ring-closure " + internal::ToUtf8(label) + " must follow an atom");
      return;
    }
    auto it = rings_.find(label);
    if (it == rings_.end()) {
      rings_[label] = {column, bond};
    } else {
      if (bond != 0 && it->second.bond != 0 && bond != it->second.bond) {
        report_.Add(1, column, "BOND_INVALID", "ring-closure " + internal::ToUtf8(label) + " has conflicting bonds");
      }
      rings_.erase(it);
    }
    prev_ = Prev::kRing;
  }

  std::u32string_view line_;
  ValidationReport& report_;
  Prev prev_ = Prev::kStart;
  char32_t bond_ = 0;
  int bond_column_ = 1;
  bool bond_before_ring_ok_ = false;
  std::vector<int> parens_;
  std::map<std::u32string, OpenRing> rings_;
};

}  // namespace

ValidationReport ValidateSmiles(std::string_view text) {
  ValidationReport report;
  const auto lines = internal::ValidatorLines(text);
  if (lines.empty()) {
    report.Add(1, 1, "EMPTY", "no atoms");
    return report;
  }
  SmilesChecker(lines[0], report).Run();
  if (lines.size() > 1) report.Add(2, 1, "MULTILINE", "a SMILES string is a single line");
  return report;
}

}  // namespace ocrkit
