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
#include <optional>
#include <string>
#include <vector>

#include "hoopforge/action.hpp"
#include "hoopforge/extension.hpp"
#include "hoopforge/report.hpp"

namespace hoopforge {

// Strong split extensions of B by X, one per iso_extensions class, built
// as mu of every action. Distinct actions never collide (tau o mu = id);
// the dedupe pass is there to catch it if they did.
inline std::vector<SplitExtension> enumerate_splext_ss(
    const FiniteHoop& B, const FiniteHoop& X, Variety variety = Variety::hoop,
    ActionSearchOptions opt = {}) {
  std::vector<SplitExtension> out;
  for (auto const& a : enumerate_actions(B, X, variety, opt)) {
    auto e = mu(a);
    bool dup = false;
    for (auto const& o : out) {
      if (o.A.order() == e.A.order() && iso_extensions(o, e)) {
        dup = true;
        break;
      }
    }
    if (dup) {
      throw ValidationFailure("two actions gave isomorphic extensions");
    }
    out.push_back(std::move(e));
  }
  return out;
}

struct BijectionOptions {
  bool oracle = false;  // also run the direct extension search
  ActionSearchOptions search;
};

struct BijectionReport {
  std::string B;
  std::string X;
  Variety variety = Variety::hoop;
  std::size_t actions = 0;
  std::size_t extensions = 0;
  std::optional<std::size_t> oracle_extensions;
  std::size_t basic_actions = 0;
  PropertyReport checks;

  bool ok() const {
    return checks.ok && actions == extensions &&
           (!oracle_extensions || *oracle_extensions == actions);
  }
};

inline BijectionReport verify_bijection(const FiniteHoop& B,
                                        const FiniteHoop& X,
                                        Variety variety = Variety::hoop,
                                        BijectionOptions opt = {}) {
  BijectionReport r;
  r.B = B.name();
  r.X = X.name();
  r.variety = variety;
  auto const acts = enumerate_actions(B, X, variety, opt.search);
  r.actions = acts.size();
  std::vector<SplitExtension> exts;
  for (std::size_t i = 0; i < acts.size(); ++i) {
    auto const& a = acts[i];
    r.basic_actions += a.cert.basic;
    auto const m = mu_model(a);
    auto const t = tau(m.ext);
    ++r.checks.checked;
    if (!(t.f == a.f) || !(t.g == a.g)) {
      r.checks.fail(make_witness("tau.mu", {{"action", i}}));
    }
    r.checks.merge(check_semidirect_formulas(m));
    auto const back = mu(t);
    ++r.checks.checked;
    if (!iso_extensions(back, m.ext)) {
      r.checks.fail(make_witness("mu.tau", {{"action", i}}));
    }
    exts.push_back(m.ext);
  }
  r.extensions = enumerate_splext_ss(B, X, variety, opt.search).size();
  if (opt.oracle) {
    RawSearchOptions ro;
    ro.max_order = B.order() * X.order();
    ro.strong_only = true;
    if (variety != Variety::hoop) {
      ro.variety = variety;
    }
    ro.budget = opt.search.budget;
    auto const raw = raw_split_extensions(B, X, ro);
    r.oracle_extensions = raw.size();
    for (std::size_t i = 0; i < raw.size(); ++i) {
      auto const t = tau(raw[i]);
      ++r.checks.checked;
      bool found = false;
      for (auto const& a : acts) {
        if (a.f == t.f && a.g == t.g) {
          found = true;
          break;
        }
      }
      if (!found) {
        r.checks.fail(make_witness("oracle.tau", {{"extension", i}}));
      }
      if (!iso_extensions(mu(t), raw[i])) {
        r.checks.fail(make_witness("oracle.mu.tau", {{"extension", i}}));
      }
    }
  }
  return r;
}

struct NaturalityReport {
  std::size_t extensions = 0;
  PropertyReport checks;
  bool ok() const { return checks.ok; }
};

// tau(pullback(e, phi)) against the restriction of tau(e) along phi, for
// every strong extension e over the codomain of phi.
inline NaturalityReport verify_naturality(const Homomorphism& phi,
                                          const FiniteHoop& X,
                                          Variety variety = Variety::hoop,
                                          ActionSearchOptions opt = {}) {
  NaturalityReport r;
  auto const exts = enumerate_splext_ss(phi.target, X, variety, opt);
  r.extensions = exts.size();
  for (std::size_t i = 0; i < exts.size(); ++i) {
    auto const lhs = tau(pullback(exts[i], phi));
    auto const rhs = restrict_action(tau(exts[i]), phi);
    ++r.checks.checked;
    if (!(lhs.f == rhs.f) || !(lhs.g == rhs.g)) {
      r.checks.fail(make_witness("naturality", {{"extension", i}}));
    }
  }
  return r;
}

}  // namespace hoopforge
