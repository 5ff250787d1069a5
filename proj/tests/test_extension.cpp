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

#include <vector>

#include "hoopforge/action.hpp"
#include "hoopforge/correspondence.hpp"
#include "hoopforge/enumerate.hpp"
#include "hoopforge/extension.hpp"

using namespace hoopforge;

namespace {

using V = std::vector<Element>;

// G3 = {0 < a < 1} as indices {0, 1, 2}; B = {0, 1}, X = {a, 1}.
SplitExtension g3_ext() { return regular_dense_decomposition(godel_chain(3)); }

// (ss) checked straight from the tables
bool strong_by_scan(const SplitExtension& e) {
  for (Element a = 0; a < e.A.order(); ++a)
    for (Element b = 0; b < e.B.order(); ++b)
      if (e.A.imp(a, e.s(b)) != e.A.imp(e.sp(a), e.s(b))) return false;
  return true;
}

}  // namespace

TEST(SplitExt, Trivial) {
  auto e = trivial_extension(lukasiewicz_chain(3));
  EXPECT_TRUE(e.strong);
  EXPECT_EQ(e.X.order(), 1u);
  EXPECT_EQ(e.p.map, (V{0, 1, 2}));
}

TEST(SplitExt, DirectProduct) {
  auto l2 = lukasiewicz_chain(2);
  auto e = product_extension(l2, l2);
  EXPECT_TRUE(e.strong);
  EXPECT_TRUE(strong_by_scan(e));
  // imp((x,c),(1,b)) = (1, c->b)
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 2; ++b) {
      Element const r = e.A.imp(a, e.s(b));
      EXPECT_EQ(r / 2, 1u);
      EXPECT_EQ(r % 2, l2.imp(a % 2, b));
    }
}

TEST(SplitExt, G3DoubleNegation) {
  auto e = g3_ext();
  EXPECT_TRUE(e.strong);
  EXPECT_TRUE(strong_by_scan(e));
  EXPECT_EQ(e.k.map, (V{1, 2}));
  EXPECT_EQ(e.s.map, (V{0, 2}));
  EXPECT_EQ(e.p.map, (V{0, 1, 1}));
  EXPECT_TRUE(has_strong_section(e));
}

TEST(SplitExt, TwistedSectionIsNotStrong) {
  auto l2 = lukasiewicz_chain(2);
  auto A = direct_product(l2, l2);  // (x, b) at 2x + b
  auto e = validate_split_extension(l2, A, l2, {1, 3}, {0, 1, 0, 1}, {0, 3});
  EXPECT_FALSE(e.strong);
  EXPECT_FALSE(strong_by_scan(e));
  auto c = has_strong_section(e);
  ASSERT_FALSE(c);
  ASSERT_TRUE(c.witness);
  EXPECT_EQ(c.witness->at("a"), 1u);
  EXPECT_EQ(c.witness->at("b"), 0u);
}

TEST(SplitExt, RejectsBadData) {
  auto l2 = lukasiewicz_chain(2);
  auto A = direct_product(l2, l2);
  // p o s != id
  EXPECT_THROW(validate_split_extension(l2, A, l2, {1, 3}, {0, 1, 0, 1}, {1, 3}),
               Error);
  // k misses part of the kernel
  EXPECT_THROW(validate_split_extension(l2, A, l2, {3, 3}, {0, 1, 0, 1}, {2, 3}),
               Error);
}

TEST(SplitExt, IsoExtensions) {
  auto l2 = lukasiewicz_chain(2);
  auto prod = product_extension(l2, l2);
  auto self = iso_extensions(prod, prod);
  ASSERT_TRUE(self);
  EXPECT_EQ(self->map, (V{0, 1, 2, 3}));
  EXPECT_TRUE(iso_extensions(prod, mu(tau(prod))));
  // two actions, two non-isomorphic middle algebras
  auto acts = enumerate_actions(l2, l2);
  ASSERT_EQ(acts.size(), 2u);
  auto e0 = mu(acts[0]), e1 = mu(acts[1]);
  EXPECT_NE(e0.A.order(), e1.A.order());
  EXPECT_FALSE(iso_extensions(e0, e1));
}

TEST(SplitExt, Pullback) {
  auto g = g3_ext();
  auto id = identity_hom(g.B);
  EXPECT_TRUE(iso_extensions(pullback(g, id), g));

  auto t = terminal_hoop();
  auto pt = pullback(g, Homomorphism{t, g.B, {g.B.unit()}});
  EXPECT_EQ(pt.A.order(), g.X.order());
  EXPECT_TRUE(iso(pt.A, g.X));

  auto l2 = lukasiewicz_chain(2);
  auto l3 = lukasiewicz_chain(3);
  auto prod = product_extension(l2, l3);
  for (auto const& phi : all_homs(l2, l3)) {
    auto pb = pullback(prod, phi);
    EXPECT_TRUE(iso_extensions(pb, product_extension(l2, l2)));
  }
}

TEST(SplitExt, EnumerateStrong) {
  auto l2 = lukasiewicz_chain(2);
  for (auto const& X : enumerate_corpus(3)) {
    EXPECT_EQ(enumerate_splext_ss(terminal_hoop(), X).size(), 1u);
  }
  auto ss = enumerate_splext_ss(l2, l2);
  EXPECT_EQ(ss.size(), enumerate_actions(l2, l2).size());
  // direct search over every middle algebra of order <= 4
  RawSearchOptions ro;
  ro.max_order = 4;
  ro.strong_only = true;
  EXPECT_EQ(raw_split_extensions(l2, l2, ro).size(), ss.size());

  auto g = g3_ext();
  bool found = false;
  for (auto const& e : enumerate_splext_ss(g.B, g.X)) {
    found = found || (e.A.order() == 3 && iso_extensions(e, g));
  }
  EXPECT_TRUE(found);
}

TEST(SplitExt, RawSearchFindsNonStrong) {
  auto l2 = lukasiewicz_chain(2);
  RawSearchOptions ro;
  ro.max_order = 4;
  auto all = raw_split_extensions(l2, l2, ro);
  std::size_t strong = 0;
  for (auto const& e : all) {
    EXPECT_EQ(e.strong, strong_by_scan(e));
    strong += e.strong;
  }
  EXPECT_EQ(all.size(), 3u);
  EXPECT_EQ(strong, 2u);
}

TEST(GeneralSemidirect, Examples) {
  auto l2 = lukasiewicz_chain(2);
  for (auto const& B : enumerate_corpus(3)) {
    auto y = general_semidirect(trivial_extension(B));
    EXPECT_EQ(y.carrier.size(), B.order());
  }
  // terminal base: Y is in bijection with X
  auto l3 = lukasiewicz_chain(3);
  auto y3 = general_semidirect(product_extension(l3, terminal_hoop()));
  EXPECT_EQ(y3.carrier.size(), 3u);

  auto yp = general_semidirect(product_extension(l2, l2));
  EXPECT_EQ(yp.carrier.size(), 4u);
  EXPECT_TRUE(iso(yp.hoop, direct_product(l2, l2)));
}

TEST(GeneralSemidirect, StrongCaseShape) {
  auto e = g3_ext();
  auto y = general_semidirect(e);
  ASSERT_EQ(y.carrier.size(), 3u);
  for (auto const& t : y.carrier) {
    EXPECT_EQ(t[0], e.X.unit());
    Element const sb = e.s(t[2]);
    Element const xp = e.k(t[1]);
    EXPECT_EQ(e.A.imp(sb, e.A.mul(sb, xp)), xp);
  }
  for (Element a = 0; a < 3; ++a) EXPECT_EQ(y.phi[y.psi[a]], a);
  for (Element i = 0; i < 3; ++i) EXPECT_EQ(y.psi[y.phi[i]], i);
  EXPECT_EQ(y.explicit_mul, y.generic_mul);
  EXPECT_EQ(y.explicit_imp, y.generic_imp);
}

TEST(GeneralSemidirect, NonStrongRoundTrip) {
  auto l2 = lukasiewicz_chain(2);
  RawSearchOptions ro;
  ro.max_order = 4;
  for (auto const& e : raw_split_extensions(l2, l2, ro)) {
    auto y = general_semidirect(e);
    ASSERT_EQ(y.carrier.size(), e.A.order());
    for (Element i = 0; i < y.carrier.size(); ++i)
      for (Element j = 0; j < y.carrier.size(); ++j) {
        EXPECT_EQ(y.phi[y.explicit_mul(i, j)], e.A.mul(y.phi[i], y.phi[j]));
        EXPECT_EQ(y.phi[y.explicit_imp(i, j)], e.A.imp(y.phi[i], y.phi[j]));
      }
  }
}

TEST(StrongSemidirect, MatchesA) {
  auto e = g3_ext();
  auto s = strong_semidirect(e);
  ASSERT_EQ(s.carrier.size(), 3u);
  EXPECT_TRUE(iso(s.hoop, e.A));
  EXPECT_THROW(strong_semidirect(validate_split_extension(
                   lukasiewicz_chain(2), direct_product(lukasiewicz_chain(2),
                                                        lukasiewicz_chain(2)),
                   lukasiewicz_chain(2), {1, 3}, {0, 1, 0, 1}, {0, 3})),
               Error);
}

TEST(RegularDense, Chains) {
  auto l3 = regular_dense_decomposition(lukasiewicz_chain(3));
  EXPECT_EQ(l3.B.order(), 3u);
  EXPECT_EQ(l3.X.order(), 1u);
  EXPECT_EQ(l3.p.map, (V{0, 1, 2}));

  auto g3 = g3_ext();
  EXPECT_EQ(g3.B.order(), 2u);
  EXPECT_EQ(g3.X.order(), 2u);

  // G3 x L2: MV = {0,1} x L2, D = {a,1} x {1}
  auto gl = regular_dense_decomposition(
      direct_product(godel_chain(3), lukasiewicz_chain(2)));
  EXPECT_TRUE(gl.strong);
  EXPECT_EQ(gl.B.order(), 4u);
  EXPECT_EQ(gl.X.order(), 2u);
  EXPECT_EQ(gl.k.map, (V{3, 5}));
  EXPECT_EQ(gl.s.map, (V{0, 1, 4, 5}));

  EXPECT_THROW(regular_dense_decomposition(
                   with_bottom(godel_chain(3), std::nullopt)),
               NotBounded);
}
