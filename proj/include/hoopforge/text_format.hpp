// Copyright 2026 The hoopforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hoopforge/error.hpp"
#include "hoopforge/hoop.hpp"

// Plain-text algebra files:
//
//   hoop L3
//   elements 3
//   unit 2
//   bottom 0        # optional
//   mul
//   0 0 0
//   ...
//   imp
//   ...
//
// '#' starts a comment anywhere on a line.

namespace hoopforge {

namespace detail {

struct Word {
  std::string_view text;
  std::size_t col;
};

inline std::vector<Word> split_words(std::string_view line) {
  std::vector<Word> out;
  auto hash = line.find('#');
  if (hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) {
      out.push_back({line.substr(i, j - i), i + 1});
    }
    i = j;
  }
  return out;
}

inline std::size_t parse_index(const Word& w, std::size_t line) {
  std::size_t v = 0;
  auto const* b = w.text.data();
  auto const* e = b + w.text.size();
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc{} || ptr != e) {
    throw SyntaxError(line, w.col,
                      "expected a non-negative integer, got '" +
                          std::string(w.text) + "'");
  }
  return v;
}

}  // namespace detail

// Reads the tables without checking the hoop axioms.
inline HoopTables parse_algebra_tables(std::string_view text) {
  struct Line {
    std::size_t no;
    std::vector<detail::Word> words;
    std::size_t end_col;
  };
  std::vector<Line> lines;
  {
    std::size_t no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      ++no;
      auto raw = text.substr(start, end - start);
      auto words = detail::split_words(raw);
      if (!words.empty()) {
        lines.push_back({no, std::move(words), raw.size() + 1});
      }
      start = end + 1;
    }
  }

  HoopTables t;
  std::size_t li = 0;
  auto at_end = [&] { return li >= lines.size(); };
  auto last_line = [&] { return lines.empty() ? 1 : lines.back().no + 1; };
  auto keyword = [&](std::string_view kw, std::size_t nargs) -> const Line& {
    if (at_end()) {
      throw SyntaxError(last_line(), 1,
                        "expected '" + std::string(kw) + "' line");
    }
    const Line& l = lines[li];
    if (l.words[0].text != kw) {
      throw SyntaxError(l.no, l.words[0].col,
                        "expected '" + std::string(kw) + "'");
    }
    if (l.words.size() != nargs + 1) {
      throw SyntaxError(l.no, l.words.size() > nargs + 1
                                  ? l.words[nargs + 1].col
                                  : l.end_col,
                        "'" + std::string(kw) + "' takes " +
                            std::to_string(nargs) + " argument(s)");
    }
    ++li;
    return l;
  };

  const Line& header = keyword("hoop", 1);
  t.name = std::string(header.words[1].text);
  const Line& elems = keyword("elements", 1);
  t.order = detail::parse_index(elems.words[1], elems.no);
  if (t.order == 0) {
    throw SyntaxError(elems.no, elems.words[1].col, "order must be positive");
  }
  const Line& unit = keyword("unit", 1);
  t.unit = static_cast<Element>(detail::parse_index(unit.words[1], unit.no));
  if (!at_end() && lines[li].words[0].text == "bottom") {
    const Line& b = keyword("bottom", 1);
    t.bottom = static_cast<Element>(detail::parse_index(b.words[1], b.no));
  }

  auto read_table = [&](std::string_view kw) {
    keyword(kw, 0);
    Table tab(t.order, t.order);
    for (std::size_t r = 0; r < t.order; ++r) {
      if (at_end()) {
        throw SyntaxError(last_line(), 1,
                          "missing row " + std::to_string(r) + " of '" +
                              std::string(kw) + "'");
      }
      const Line& l = lines[li++];
      if (l.words.size() != t.order) {
        throw SyntaxError(
            l.no, l.words.size() > t.order ? l.words[t.order].col : l.end_col,
            "row has " + std::to_string(l.words.size()) + " entries, expected " +
                std::to_string(t.order));
      }
      for (std::size_t c = 0; c < t.order; ++c) {
        tab(r, c) =
            static_cast<Element>(detail::parse_index(l.words[c], l.no));
      }
    }
    return tab;
  };
  t.mul = read_table("mul");
  t.imp = read_table("imp");
  if (!at_end()) {
    throw SyntaxError(lines[li].no, lines[li].words[0].col,
                      "unexpected trailing content");
  }
  return t;
}

inline FiniteHoop parse_algebra(std::string_view text) {
  return validate_hoop(parse_algebra_tables(text));
}

inline std::string format_algebra(const FiniteHoop& h) {
  std::ostringstream os;
  os << "hoop " << (h.name().empty() ? "H" : h.name()) << '\n';
  os << "elements " << h.order() << '\n';
  os << "unit " << h.unit() << '\n';
  if (h.bottom()) {
    os << "bottom " << *h.bottom() << '\n';
  }
  auto dump = [&](const char* kw, const Table& t) {
    os << kw << '\n';
    for (std::size_t r = 0; r < t.rows(); ++r) {
      for (std::size_t c = 0; c < t.cols(); ++c) {
        os << (c ? " " : "") << t(r, c);
      }
      os << '\n';
    }
  };
  dump("mul", h.mul_table());
  dump("imp", h.imp_table());
  return os.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline FiniteHoop load_algebra(const std::string& path) {
  return parse_algebra(read_file(path));
}

}  // namespace hoopforge
