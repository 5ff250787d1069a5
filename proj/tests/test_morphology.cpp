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

#include <random>
#include <vector>

#include "hoopforge/hoop.hpp"
#include "hoopforge/morphology.hpp"

using namespace hoopforge;

namespace {

using V = std::vector<Element>;

std::vector<FiniteHoop> sample() {
  auto l2 = lukasiewicz_chain(2);
  return {terminal_hoop(),
          l2,
          lukasiewicz_chain(3),
          godel_chain(3),
          godel_chain(4),
          lukasiewicz_chain(5),
          direct_product(l2, l2),
          direct_product(godel_chain(3), l2),
          direct_product(lukasiewicz_chain(3), l2),
          direct_product(direct_product(l2, l2), l2)};
}

// Plain scan over every map, unit-preserving or not.
std::size_t count_homs_naive(const FiniteHoop& a, const FiniteHoop& b) {
  std::size_t count = 0;
  V map(a.order(), 0);
  while (true) {
    if (is_homomorphism(a, b, map)) ++count;
    std::size_t i = 0;
    while (i < map.size() && ++map[i] == b.order()) map[i++] = 0;
    if (i == map.size()) return count;
  }
}

}  // namespace

TEST(Hom, Examples) {
  auto l3 = lukasiewicz_chain(3);
  auto g3 = godel_chain(3);
  EXPECT_TRUE(is_homomorphism(l3, l3, {0, 1, 2}));
  // double negation on G3: 0 -> 0, a -> 1, 1 -> 1
  V nn{negation(g3, negation(g3, 0)), negation(g3, negation(g3, 1)),
       negation(g3, negation(g3, 2))};
  EXPECT_EQ(nn, (V{0, 2, 2}));
  EXPECT_TRUE(is_homomorphism(g3, g3, nn, true));

  auto bad = is_homomorphism(l3, l3, {0, 2, 2});
  EXPECT_FALSE(bad);
  EXPECT_EQ(bad.witness->rule, "mul");
  EXPECT_EQ(bad.witness->at("x"), 1u);
  EXPECT_EQ(bad.witness->at("y"), 1u);

  EXPECT_THROW(is_homomorphism(l3, l3, {0, 1}), IndexOutOfRange);
  EXPECT_THROW(is_homomorphism(l3, l3, {0, 1, 3}), IndexOutOfRange);
}

TEST(Hom, BottomFlag) {
  auto l2 = lukasiewicz_chain(2);
  // constant map to the unit preserves everything except the bottom
  EXPECT_TRUE(is_homomorphism(l2, l2, {1, 1}));
  EXPECT_FALSE(is_homomorphism(l2, l2, {1, 1}, true));
}

TEST(Kernel, Examples) {
  auto g3 = godel_chain(3);
  EXPECT_EQ(kernel(identity_hom(g3)).members, (V{2}));
  auto nn = make_homomorphism(g3, g3, {0, 2, 2});
  EXPECT_EQ(kernel(nn).members, (V{1, 2}));
  auto to_t = make_homomorphism(g3, terminal_hoop(), {0, 0, 0});
  EXPECT_EQ(kernel(to_t).members, (V{0, 1, 2}));
}

TEST(Filters, Examples) {
  EXPECT_EQ(filters(terminal_hoop()), (std::vector<Filter>{{{0}}}));
  EXPECT_EQ(filters(lukasiewicz_chain(3)),
            (std::vector<Filter>{{{2}}, {{0, 1, 2}}}));
  EXPECT_EQ(filters(godel_chain(3)),
            (std::vector<Filter>{{{2}}, {{1, 2}}, {{0, 1, 2}}}));
}

TEST(Filters, BothStrategiesAgree) {
  for (auto const& h : sample())
    EXPECT_EQ(filters_by_subsets(h), filters_by_closure(h)) << h.name();
}

TEST(Filters, Validation) {
  auto l3 = lukasiewicz_chain(3);
  EXPECT_THROW(make_filter(l3, {1, 2}), NotAFilter);
  EXPECT_THROW(make_filter(l3, {0}), NotAFilter);
  EXPECT_EQ(make_filter(l3, {2, 0, 1, 1}).members, (V{0, 1, 2}));
}

TEST(Congruence, Examples) {
  auto g3 = godel_chain(3);
  auto id = congruence_of_filter(g3, Filter{{2}});
  EXPECT_EQ(id.class_count(), 3u);
  auto c = congruence_of_filter(g3, Filter{{1, 2}});
  EXPECT_EQ(c.classes(), (std::vector<V>{{0}, {1, 2}}));
  EXPECT_THROW(congruence_of_filter(g3, Filter{{0, 2}}), NotAFilter);
  EXPECT_THROW(filter_of_congruence(g3, Congruence{{0, 0, 1}}), NotACongruence);
}

TEST(Congruence, RoundTripAndOrder) {
  for (auto const& h : sample()) {
    auto fs = filters(h);
    for (auto const& f : fs) {
      auto c = congruence_of_filter(h, f);
      EXPECT_EQ(filter_of_congruence(h, c), f);
    }
    // inclusion of filters matches refinement of partitions
    for (auto const& f : fs)
      for (auto const& g : fs) {
        bool sub = std::includes(g.members.begin(), g.members.end(),
                                 f.members.begin(), f.members.end());
        auto cf = congruence_of_filter(h, f), cg = congruence_of_filter(h, g);
        bool finer = true;
        for (Element x = 0; x < h.order(); ++x)
          for (Element y = 0; y < h.order(); ++y)
            if (cf.class_of[x] == cf.class_of[y] && cg.class_of[x] != cg.class_of[y])
              finer = false;
        EXPECT_EQ(sub, finer);
      }
  }
}

TEST(Quotient, Examples) {
  auto g3 = godel_chain(3);
  auto q = quotient(g3, Filter{{1, 2}});
  EXPECT_TRUE(iso(q.hoop, lukasiewicz_chain(2)));
  EXPECT_EQ(q.projection.map, (V{0, 1, 1}));
  for (auto const& h : sample()) {
    auto triv = quotient(h, Filter{{h.unit()}});
    EXPECT_TRUE(iso(triv.hoop, h));
    for (auto const& f : filters(h)) EXPECT_EQ(kernel(quotient(h, f).projection), f);
  }
}

TEST(Iso, Examples) {
  for (auto const& h : sample()) {
    auto i = iso(h, h);
    ASSERT_TRUE(i);
  }
  EXPECT_FALSE(iso(lukasiewicz_chain(3), godel_chain(3)));
  auto l2 = lukasiewicz_chain(2);
  EXPECT_TRUE(iso(direct_product(godel_chain(3), l2), direct_product(l2, godel_chain(3))));
}

TEST(Homs, CountAgainstNaiveScan) {
  auto l2 = lukasiewicz_chain(2);
  auto l3 = lukasiewicz_chain(3);
  EXPECT_EQ(all_homs(l2, l3).size(), count_homs_naive(l2, l3));
  EXPECT_EQ(all_homs(l2, l3).size(), 2u);
  auto hs = sample();
  for (auto const& a : hs)
    for (auto const& b : hs) {
      if (a.order() > 6 || b.order() > 6) continue;
      EXPECT_EQ(all_homs(a, b).size(), count_homs_naive(a, b))
          << a.name() << " -> " << b.name();
    }
}

TEST(CanonicalForm, IsomorphicAndIdempotent) {
  std::mt19937 rng(11);
  for (auto const& h : sample()) {
    auto c = canonical_form(h);
    EXPECT_EQ(c.unit(), h.order() - 1);
    EXPECT_TRUE(iso(c, h));
    EXPECT_EQ(canonical_form(c), c);
    V perm(h.order());
    for (Element i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_form(relabel(h, perm)), c);
  }
}
