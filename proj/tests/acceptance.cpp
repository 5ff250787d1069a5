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


// Acceptance run: every suite once, each criterion judged from its suite
// report, then the whole thing again to compare reports (timing aside).
// Prints one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "hoopforge/suite.hpp"

using namespace hoopforge;

namespace {

// wall-clock limits, seconds
constexpr double kAxiomLimit = 10.0;
constexpr double kFilterLimit = 120.0;
constexpr double kBijectionLimit = 600.0;

struct Criterion {
  int id;
  const char* title;
  const char* suite;
  double limit;  // 0: none
};

constexpr Criterion kCriteria[] = {
    {1, "axioms and DSL agreement, chains up to 16", "axioms", kAxiomLimit},
    {2, "filter/congruence duality, order <= 5", "filters", kFilterLimit},
    {3, "general semidirect bijection, pairs <= 3", "general", 0},
    {4, "strong correspondence, pairs <= 3", "bijection", kBijectionLimit},
    {5, "meet/join formulas vs inf/sup", "lattice", 0},
    {6, "double-negation decomposition", "double-negation", 0},
    {7, "Goedel closure", "godel", 0},
    {8, "naturality", "naturality", 0},
    {9, "L-algebra layer", "lalgebra", 0},
};

const SuiteReport& find(const std::vector<SuiteReport>& rs, const char* name) {
  return *std::find_if(rs.begin(), rs.end(),
                       [&](const SuiteReport& r) { return r.suite == name; });
}

std::size_t sum(const SuiteReport& r, const char* key) {
  std::size_t n = 0;
  for (auto const& c : r.checks) {
    if (c.detail.contains(key) && c.detail[key].is_number()) {
      n += c.detail[key].get<std::size_t>();
    }
  }
  return n;
}

}  // namespace

int main() {
  SuiteOptions opt;
  opt.jobs = std::max(1u, std::thread::hardware_concurrency());
  opt.oracle = true;
  opt.corpus_dir = corpus_dir_from_env();

  auto const first = run_all_suites(opt);
  bool all = true;
  for (auto const& c : kCriteria) {
    auto const& r = find(first, c.suite);
    bool ok = r.ok() && !r.checks.empty();
    std::string note = std::to_string(r.checks.size()) + " checks";
    if (c.limit > 0) {
      ok = ok && r.seconds < c.limit;
      char buf[64];
      std::snprintf(buf, sizeof buf, ", %.2fs of %.0fs", r.seconds, c.limit);
      note += buf;
    }
    if (c.id == 4) {
      // counts must match on both sides, the oracle included
      std::size_t const acts = sum(r, "actions");
      ok = ok && acts == sum(r, "extensions") &&
           acts == sum(r, "oracle_extensions");
      note += ", " + std::to_string(acts) + " actions";
    }
    if (c.id == 5) {
      ok = ok && sum(r, "basic_actions") > 0;
      note += ", " + std::to_string(sum(r, "basic_actions")) + " basic actions";
    }
    if (c.id == 3) {
      note += ", " + std::to_string(sum(r, "extensions")) + " extensions";
    }
    if (c.id == 9) {
      ok = ok && sum(r, "extensions_order_le_4") > 0;
    }
    for (auto const& chk : r.checks) {
      if (!chk.pass) {
        note += "; first failure " + chk.name +
                (chk.witness ? " " + chk.witness->str() : "") +
                (chk.error.empty() ? "" : " (" + chk.error + ")");
        break;
      }
    }
    std::printf("criterion %2d %-44s %s  (%s)\n", c.id, c.title,
                ok ? "PASS" : "FAIL", note.c_str());
    all = all && ok;
  }

  // determinism: a second full run, single-threaded this time
  SuiteOptions again = opt;
  again.jobs = 1;
  auto const second = run_all_suites(again);
  bool same = first.size() == second.size();
  for (std::size_t i = 0; same && i < first.size(); ++i) {
    same = first[i].to_json(false).dump() == second[i].to_json(false).dump();
  }
  std::printf("criterion 10 %-44s %s  (%zu suite reports compared)\n",
              "identical reports across runs", same ? "PASS" : "FAIL",
              first.size());
  all = all && same;
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
