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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hoopforge {

// Elements of a finite algebra are dense indices 0..n-1.
using Element = std::uint32_t;

// Dense row-major matrix of element indices. Used for the binary operation
// tables of an algebra (n x n) as well as for action tables (|B| x |X|).
class Table {
 public:
  Table() = default;
  Table(std::size_t rows, std::size_t cols, Element fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Table from_rows(const std::vector<std::vector<Element>>& rows) {
    Table t(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < t.cols_; ++c) {
        t(r, c) = c < rows[r].size() ? rows[r][c] : 0;
      }
    }
    return t;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  Element operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  const std::vector<Element>& data() const noexcept { return data_; }

  std::vector<std::vector<Element>> to_rows() const {
    std::vector<std::vector<Element>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      out[r].assign(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                    data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }
    return out;
  }

  friend bool operator==(const Table&, const Table&) = default;
  friend auto operator<=>(const Table& a, const Table& b) {
    return a.data_ <=> b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

// A named rule together with the variable assignment under which it fails.
struct Witness {
  std::string rule;
  std::vector<std::pair<std::string, Element>> bindings;

  std::string str() const {
    std::ostringstream os;
    os << rule;
    for (auto const& [name, value] : bindings) {
      os << ' ' << name << '=' << value;
    }
    return os.str();
  }

  Element at(const std::string& name) const {
    for (auto const& [n, v] : bindings) {
      if (n == name) {
        return v;
      }
    }
    return static_cast<Element>(-1);
  }

  friend bool operator==(const Witness&, const Witness&) = default;
};

inline Witness make_witness(
    std::string rule,
    std::initializer_list<std::pair<const char*, std::size_t>> bindings) {
  Witness w{std::move(rule), {}};
  for (auto const& [name, value] : bindings) {
    w.bindings.emplace_back(name, static_cast<Element>(value));
  }
  return w;
}

}  // namespace hoopforge
