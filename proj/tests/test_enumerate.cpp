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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "hoopforge/enumerate.hpp"
#include "hoopforge/term.hpp"

using namespace hoopforge;

namespace {

bool same_up_to_perm(const FiniteHoop& a, const FiniteHoop& b) {
  auto const n = a.order();
  if (n != b.order()) return false;
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = p[a.unit()] == b.unit();
    for (Element x = 0; x < n && ok; ++x)
      for (Element y = 0; y < n && ok; ++y)
        ok = p[a.mul(x, y)] == b.mul(p[x], p[y]) &&
             p[a.imp(x, y)] == b.imp(p[x], p[y]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Generate-and-test over every mul table with the unit row fixed; the
// implication comes from the residuation law w*x <= y iff w <= x->y, with
// <= taken as divisibility. Survivors must also pass the identity oracle.
std::vector<FiniteHoop> naive_hoops(std::size_t n) {
  auto const u = static_cast<Element>(n - 1);
  std::vector<std::pair<Element, Element>> free;
  for (Element i = 0; i < u; ++i)
    for (Element j = 0; j < u; ++j) free.emplace_back(i, j);
  std::vector<Element> vals(free.size(), 0);
  std::vector<FiniteHoop> reps;
  while (true) {
    Table m(n, n);
    for (Element x = 0; x < n; ++x) m(x, u) = m(u, x) = x;
    for (std::size_t k = 0; k < free.size(); ++k) m(free[k].first, free[k].second) = vals[k];
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      for (Element y = 0; y < n && ok; ++y) {
        ok = m(x, y) == m(y, x);
        for (Element z = 0; z < n && ok; ++z) ok = m(m(x, y), z) == m(x, m(y, z));
      }
    if (ok) {
      auto le = [&](Element x, Element y) {
        for (Element z = 0; z < n; ++z)
          if (m(z, y) == x) return true;
        return false;
      };
      Table imp(n, n);
      for (Element x = 0; x < n && ok; ++x)
        for (Element y = 0; y < n && ok; ++y) {
          int hits = 0;
          for (Element z = 0; z < n; ++z) {
            bool galois = true;
            for (Element w = 0; w < n && galois; ++w)
              galois = le(m(w, x), y) == le(w, z);
            if (galois) {
              imp(x, y) = z;
              ++hits;
            }
          }
          ok = hits == 1;
        }
      if (ok && !check_hoop_axioms(HoopTables{n, u, m, imp, std::nullopt, ""})) {
        auto h = validate_hoop(HoopTables{n, u, m, imp, std::nullopt, ""});
        for (auto const& ni : kHoopAxioms) EXPECT_TRUE(holds(h, named_identity(ni)));
        bool fresh = true;
        for (auto const& r : reps)
          if (same_up_to_perm(r, h)) fresh = false;
        if (fresh) reps.push_back(h);
      }
    }
    std::size_t k = 0;
    while (k < vals.size() && ++vals[k] == n) vals[k++] = 0;
    if (k == vals.size()) break;
  }
  return reps;
}

}  // namespace

TEST(Enumerate, SmallOrders) {
  EXPECT_EQ(enumerate_hoops(1).size(), 1u);
  EXPECT_EQ(enumerate_hoops(1)[0], terminal_hoop().renamed("x"));
  auto two = enumerate_hoops(2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_TRUE(iso(two[0], lukasiewicz_chain(2)));
  auto three = enumerate_hoops(3);
  ASSERT_EQ(three.size(), 2u);
  EXPECT_TRUE(iso(three[0], lukasiewicz_chain(3)) || iso(three[1], lukasiewicz_chain(3)));
  EXPECT_TRUE(iso(three[0], godel_chain(3)) || iso(three[1], godel_chain(3)));
}

TEST(Enumerate, MatchesNaiveOracle) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto fast = enumerate_hoops(n);
    auto slow = naive_hoops(n);
    EXPECT_EQ(fast.size(), slow.size()) << "order " << n;
    for (auto const& h : slow) {
      auto c = canonical_form(h);
      EXPECT_TRUE(std::any_of(fast.begin(), fast.end(),
                              [&](const FiniteHoop& f) { return f == with_bottom(c, least_element(c)); }))
          << "order " << n;
    }
  }
}

TEST(Enumerate, CanonicalSortedAndPairwiseDistinct) {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto hs = enumerate_hoops(n);
    for (std::size_t i = 0; i < hs.size(); ++i) {
      EXPECT_EQ(canonical_form(hs[i]).mul_table(), hs[i].mul_table());
      EXPECT_TRUE(hs[i].bounded());
      EXPECT_EQ(hs[i].unit(), n - 1);
      for (std::size_t j = i + 1; j < hs.size(); ++j) {
        EXPECT_FALSE(iso(hs[i], hs[j]));
        EXPECT_LT(hs[i].mul_table().data(), hs[j].mul_table().data() ) ;
      }
    }
  }
}

TEST(Enumerate, VarietyFilter) {
  auto all = enumerate_hoops(4);
  for (auto v : {Variety::basic, Variety::wajsberg, Variety::godel, Variety::product}) {
    auto some = enumerate_hoops(4, v);
    std::size_t expect = std::count_if(all.begin(), all.end(),
                                       [&](const FiniteHoop& h) { return h.in(v); });
    EXPECT_EQ(some.size(), expect);
    for (auto const& h : some) EXPECT_TRUE(h.in(v));
  }
  // the 4-element Goedel and Lukasiewicz chains are there
  auto g = enumerate_hoops(4, Variety::godel);
  EXPECT_TRUE(std::any_of(g.begin(), g.end(), [](auto& h) { return bool(iso(h, godel_chain(4))); }));
}

TEST(Enumerate, JobsDoNotChangeOutput) {
  EnumerateOptions one, many;
  many.jobs = 3;
  auto a = enumerate_hoops(5, one);
  auto b = enumerate_hoops(5, many);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i], b[i]);
    EXPECT_EQ(a[i].name(), b[i].name());
  }
}

TEST(Enumerate, Budget) {
  EnumerateOptions opt;
  opt.budget = 10;
  EXPECT_THROW(enumerate_hoops(5, opt), BudgetExceeded);
}

TEST(Enumerate, NonBasicHoopsExistAtOrderFive) {
  auto hs = enumerate_hoops(5);
  auto it = std::find_if(hs.begin(), hs.end(), [](auto& h) { return !h.in(Variety::basic); });
  ASSERT_NE(it, hs.end());
  EXPECT_THROW(join(*it, 0, 0), NotBasic);
  EXPECT_FALSE(holds(*it, named_identity(kVarietyIdentities[0])));
}
