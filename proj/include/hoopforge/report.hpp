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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hoopforge/table.hpp"

namespace hoopforge {

// Outcome of an exhaustive property check. Only the first few failures are
// kept; `checked` counts the instances that were looked at.
struct PropertyReport {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<Witness> failures;

  static constexpr std::size_t kMaxFailures = 8;

  void fail(Witness w) {
    ok = false;
    if (failures.size() < kMaxFailures) {
      failures.push_back(std::move(w));
    }
  }

  void merge(const PropertyReport& other) {
    checked += other.checked;
    for (auto const& w : other.failures) {
      fail(w);
    }
    ok = ok && other.ok;
  }

  explicit operator bool() const noexcept { return ok; }
};

}  // namespace hoopforge
