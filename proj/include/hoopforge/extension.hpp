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
#include <array>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hoopforge/enumerate.hpp"
#include "hoopforge/error.hpp"
#include "hoopforge/hoop.hpp"
#include "hoopforge/morphology.hpp"
#include "hoopforge/term.hpp"

namespace hoopforge {

// X --k--> A <--s-- B with p: A -> B, p.s = id and k onto the kernel of p.
struct SplitExtension {
  FiniteHoop X;
  FiniteHoop A;
  FiniteHoop B;
  Homomorphism k;
  Homomorphism p;
  Homomorphism s;
  bool strong = false;

  // A-index -> X-index for elements of the kernel, -1 elsewhere.
  std::vector<long> k_inverse() const {
    std::vector<long> inv(A.order(), -1);
    for (Element x = 0; x < X.order(); ++x) {
      inv[k(x)] = x;
    }
    return inv;
  }

  Element sp(Element a) const { return s(p(a)); }
};

struct StrongCheck {
  bool holds = true;
  std::optional<Witness> witness;  // bindings a, b
  // a -> s(b) = s(b) for a in the kernel; follows from the main equation.
  bool kernel_form_holds = true;
  explicit operator bool() const noexcept { return holds; }
};

// a -> s(b) = s(p(a)) -> s(b) for all a, b.
inline StrongCheck check_strong_section(const FiniteHoop& A,
                                        const FiniteHoop& B,
                                        const std::vector<Element>& p,
                                        const std::vector<Element>& s) {
  StrongCheck r;
  for (Element a = 0; a < A.order() && r.holds; ++a) {
    for (Element b = 0; b < B.order(); ++b) {
      if (A.imp(a, s[b]) != A.imp(s[p[a]], s[b])) {
        r.holds = false;
        r.witness = make_witness("ss", {{"a", a}, {"b", b}});
        break;
      }
    }
  }
  for (Element a = 0; a < A.order() && r.kernel_form_holds; ++a) {
    if (p[a] != B.unit()) {
      continue;
    }
    for (Element b = 0; b < B.order(); ++b) {
      if (A.imp(a, s[b]) != s[b]) {
        r.kernel_form_holds = false;
        if (r.holds) {
          throw ValidationFailure("strong section without its kernel form");
        }
        break;
      }
    }
  }
  return r;
}

inline StrongCheck has_strong_section(const SplitExtension& e) {
  return check_strong_section(e.A, e.B, e.p.map, e.s.map);
}

namespace detail {

inline void require_hom(const char* which, const FiniteHoop& src,
                        const FiniteHoop& dst, const std::vector<Element>& m) {
  if (auto c = is_homomorphism(src, dst, m); !c) {
    Witness w = *c.witness;
    w.rule = std::string(which) + "." + w.rule;
    throw AxiomViolation(w);
  }
}

}  // namespace detail

inline SplitExtension validate_split_extension(FiniteHoop X, FiniteHoop A,
                                               FiniteHoop B,
                                               std::vector<Element> k,
                                               std::vector<Element> p,
                                               std::vector<Element> s) {
  detail::require_hom("k", X, A, k);
  detail::require_hom("p", A, B, p);
  detail::require_hom("s", B, A, s);
  for (Element b = 0; b < B.order(); ++b) {
    if (p[s[b]] != b) {
      throw SectionFailure("p(s(b)) != b at b=" + std::to_string(b));
    }
  }
  if (!is_injective(k)) {
    throw NotInjective("k is not injective");
  }
  std::vector<bool> in_image(A.order(), false);
  for (Element v : k) {
    in_image[v] = true;
  }
  for (Element a = 0; a < A.order(); ++a) {
    if (in_image[a] != (p[a] == B.unit())) {
      throw KernelMismatch("image of k differs from the kernel of p at a=" +
                           std::to_string(a));
    }
  }
  auto ss = check_strong_section(A, B, p, s);
  Homomorphism hk{X, A, std::move(k)};
  Homomorphism hp{A, B, std::move(p)};
  Homomorphism hs{B, A, std::move(s)};
  return SplitExtension{std::move(X), std::move(A), std::move(B), std::move(hk),
                        std::move(hp), std::move(hs), ss.holds};
}

inline SplitExtension validate_split_extension(const Homomorphism& k,
                                               const Homomorphism& p,
                                               const Homomorphism& s) {
  if (!(k.target == p.source) || !(p.target == s.source) ||
      !(s.target == p.source)) {
    throw ValidationFailure("endpoints of k, p, s do not match");
  }
  return validate_split_extension(k.source, p.source, p.target, k.map, p.map,
                                  s.map);
}

// X = T (terminal), A = B, p = s = id.
inline SplitExtension trivial_extension(const FiniteHoop& B) {
  std::vector<Element> id(B.order());
  for (Element b = 0; b < B.order(); ++b) {
    id[b] = b;
  }
  return validate_split_extension(terminal_hoop(), B, B, {B.unit()}, id, id);
}

// A = X x B with k = (-, 1), p = second projection, s = (1, -).
inline SplitExtension product_extension(const FiniteHoop& X,
                                        const FiniteHoop& B) {
  auto A = direct_product(X, B);
  auto const nb = static_cast<Element>(B.order());
  std::vector<Element> k(X.order()), p(A.order()), s(B.order());
  for (Element x = 0; x < X.order(); ++x) {
    k[x] = x * nb + B.unit();
  }
  for (Element a = 0; a < A.order(); ++a) {
    p[a] = a % nb;
  }
  for (Element b = 0; b < nb; ++b) {
    s[b] = X.unit() * nb + b;
  }
  return validate_split_extension(X, A, B, k, p, s);
}

// Morphism A1 -> A2 commuting with k, p and s, if there is one. Any such
// morphism is bijective; that is checked rather than assumed.
inline std::optional<Homomorphism> iso_extensions(
    const SplitExtension& e1, const SplitExtension& e2,
    std::size_t budget = kDefaultBudget) {
  if (!(e1.X == e2.X) || !(e1.B == e2.B) || e1.A.order() != e2.A.order()) {
    return std::nullopt;
  }
  std::vector<long> pinned(e1.A.order(), -1);
  auto pin = [&](Element a, Element v) {
    if (pinned[a] >= 0 && pinned[a] != static_cast<long>(v)) {
      return false;
    }
    pinned[a] = v;
    return true;
  };
  for (Element x = 0; x < e1.X.order(); ++x) {
    if (!pin(e1.k(x), e2.k(x))) {
      return std::nullopt;
    }
  }
  for (Element b = 0; b < e1.B.order(); ++b) {
    if (!pin(e1.s(b), e2.s(b))) {
      return std::nullopt;
    }
  }
  std::optional<Homomorphism> found;
  detail::search_homs(
      e1.A, e2.A, pinned, false, false, budget,
      [&](const std::vector<Element>& m) {
        found = Homomorphism{e1.A, e2.A, m};
        return false;
      },
      [&](Element a, Element v) { return e2.p(v) == e1.p(a); });
  if (found && !is_injective(found->map)) {
    throw ValidationFailure("morphism of split extensions is not bijective");
  }
  return found;
}

// Change of base along phi: B' -> B. Carrier {(a, b') : p(a) = phi(b')},
// ordered lexicographically.
inline SplitExtension pullback(const SplitExtension& e,
                               const Homomorphism& phi) {
  if (!(phi.target == e.B)) {
    throw ValidationFailure("phi does not land in the base");
  }
  if (auto c = is_homomorphism(phi.source, phi.target, phi.map); !c) {
    throw AxiomViolation(*c.witness);
  }
  auto const& Bp = phi.source;
  std::vector<std::pair<Element, Element>> carrier;
  std::map<std::pair<Element, Element>, Element> index;
  for (Element a = 0; a < e.A.order(); ++a) {
    for (Element b = 0; b < Bp.order(); ++b) {
      if (e.p(a) == phi(b)) {
        index[{a, b}] = static_cast<Element>(carrier.size());
        carrier.emplace_back(a, b);
      }
    }
  }
  auto const n = carrier.size();
  HoopTables t{n, index.at({e.A.unit(), Bp.unit()}), Table(n, n), Table(n, n),
               std::nullopt, e.A.name() + "'"};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto [a, b] = carrier[i];
      auto [c, d] = carrier[j];
      t.mul(i, j) = index.at({e.A.mul(a, c), Bp.mul(b, d)});
      t.imp(i, j) = index.at({e.A.imp(a, c), Bp.imp(b, d)});
    }
  }
  FiniteHoop Ap = validate_hoop(std::move(t));
  Ap = with_bottom(Ap, least_element(Ap));
  std::vector<Element> k(e.X.order()), p(n), s(Bp.order());
  for (Element x = 0; x < e.X.order(); ++x) {
    k[x] = index.at({e.k(x), Bp.unit()});
  }
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = carrier[i].second;
  }
  for (Element b = 0; b < Bp.order(); ++b) {
    s[b] = index.at({e.s(phi(b)), b});
  }
  auto out = validate_split_extension(e.X, Ap, Bp, k, p, s);
  if (e.strong && !out.strong) {
    throw ValidationFailure("pullback of a strong extension is not strong");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Semidirect product over X^2 x B
// ---------------------------------------------------------------------------

namespace terms {

inline const Term& alpha1() {
  static const Term t = parse_term("x -> y");
  return t;
}
inline const Term& alpha2() {
  static const Term t = parse_term("((x -> y) -> y) -> x");
  return t;
}
inline const Term& theta() {
  static const Term t = parse_term("(x -> z) * y");
  return t;
}
inline const Term& binary(const std::string& op) {
  static const Term mul = parse_term("x * y");
  static const Term imp = parse_term("x -> y");
  return op == "mul" ? mul : imp;
}

}  // namespace terms

using Triple = std::array<Element, 3>;  // (x, x', b)

struct GeneralSemidirect {
  std::vector<Triple> carrier;  // sorted
  std::vector<Element> phi;     // carrier index -> A
  std::vector<Element> psi;     // A -> carrier index
  // Operations on carrier indices: `explicit_*` from the closed formulas
  // for hoops, `generic_*` from the term-by-term description that works
  // for any operation symbol.
  Table explicit_mul, explicit_imp;
  Table generic_mul, generic_imp;
  FiniteHoop hoop;

  long index_of(const Triple& t) const {
    auto it = std::lower_bound(carrier.begin(), carrier.end(), t);
    return it != carrier.end() && *it == t ? it - carrier.begin() : -1;
  }
};

inline GeneralSemidirect general_semidirect(const SplitExtension& e) {
  auto const& A = e.A;
  auto const kinv = e.k_inverse();
  auto to_x = [&](Element a) -> Element {
    if (kinv[a] < 0) {
      throw BijectionFailure("element " + std::to_string(a) +
                             " is not in the kernel");
    }
    return static_cast<Element>(kinv[a]);
  };
  auto const nx = static_cast<Element>(e.X.order());
  auto const nb = static_cast<Element>(e.B.order());

  // theta(x, x', s(b)) inside A
  auto th = [&](Element x, Element xp, Element b) {
    return A.mul(A.imp(e.k(x), e.s(b)), e.k(xp));
  };
  GeneralSemidirect g{{}, {}, {}, Table(), Table(), Table(), Table(),
                      terminal_hoop()};
  for (Element x = 0; x < nx; ++x) {
    for (Element xp = 0; xp < nx; ++xp) {
      for (Element b = 0; b < nb; ++b) {
        Element const t = th(x, xp, b);
        Element const sb = e.s(b);
        Element const a1 = A.imp(t, sb);
        Element const a2 = A.imp(A.imp(A.imp(t, sb), sb), t);
        if (a1 == e.k(x) && a2 == e.k(xp)) {
          g.carrier.push_back({x, xp, b});
        }
      }
    }
  }
  auto const n = g.carrier.size();
  g.phi.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [x, xp, b] = g.carrier[i];
    g.phi[i] = th(x, xp, b);
  }
  g.psi.resize(A.order());
  for (Element a = 0; a < A.order(); ++a) {
    Element const spa = e.sp(a);
    Triple t{to_x(A.imp(a, spa)), to_x(A.imp(A.imp(A.imp(a, spa), spa), a)),
             e.p(a)};
    long const i = g.index_of(t);
    if (i < 0) {
      throw BijectionFailure("psi(" + std::to_string(a) + ") is not in Y");
    }
    g.psi[a] = static_cast<Element>(i);
  }
  if (n != A.order()) {
    throw BijectionFailure("|Y| = " + std::to_string(n) + " but |A| = " +
                           std::to_string(A.order()));
  }
  for (Element a = 0; a < A.order(); ++a) {
    if (g.phi[g.psi[a]] != a) {
      throw BijectionFailure("phi(psi(a)) != a at a=" + std::to_string(a));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (g.psi[g.phi[i]] != i) {
      throw BijectionFailure("psi(phi(y)) != y at y=" + std::to_string(i));
    }
  }
  auto lookup = [&](Element w, Element t, Element b) -> Element {
    Triple r{to_x(A.imp(w, t)), to_x(A.imp(A.imp(A.imp(w, t), t), w)), b};
    long const i = g.index_of(r);
    if (i < 0) {
      throw BijectionFailure("operation leaves Y");
    }
    return static_cast<Element>(i);
  };

  // closed formulas
  g.explicit_mul = Table(n, n);
  g.explicit_imp = Table(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto [x, xp, b] = g.carrier[i];
      auto [y, yp, bp] = g.carrier[j];
      Element const u = th(x, xp, b);
      Element const v = th(y, yp, bp);
      Element const bi = e.B.imp(b, bp);
      Element const bm = e.B.mul(b, bp);
      g.explicit_imp(i, j) = lookup(A.imp(u, v), e.s(bi), bi);
      g.explicit_mul(i, j) = lookup(A.mul(u, v), e.s(bm), bm);
    }
  }

  // term-level description: alpha(omega_A(theta(x_i, s b_i)), omega_A(s b)),
  // omega_B(b)
  g.generic_mul = Table(n, n);
  g.generic_imp = Table(n, n);
  using Env = std::unordered_map<std::string, Element>;
  auto theta_a = [&](const Triple& t) {
    return eval_term(A, terms::theta(),
                     Env{{"x", e.k(t[0])}, {"y", e.k(t[1])}, {"z", e.s(t[2])}});
  };
  for (const char* op : {"mul", "imp"}) {
    const Term& w = terms::binary(op);
    Table& out = std::string(op) == "mul" ? g.generic_mul : g.generic_imp;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto const& ti = g.carrier[i];
        auto const& tj = g.carrier[j];
        Element const wa =
            eval_term(A, w, Env{{"x", theta_a(ti)}, {"y", theta_a(tj)}});
        Element const ws =
            eval_term(A, w, Env{{"x", e.s(ti[2])}, {"y", e.s(tj[2])}});
        Element const wb = eval_term(e.B, w, Env{{"x", ti[2]}, {"y", tj[2]}});
        Triple r{to_x(eval_term(A, terms::alpha1(), Env{{"x", wa}, {"y", ws}})),
                 to_x(eval_term(A, terms::alpha2(), Env{{"x", wa}, {"y", ws}})),
                 wb};
        long const idx = g.index_of(r);
        if (idx < 0) {
          throw BijectionFailure("generic operation leaves Y");
        }
        out(i, j) = static_cast<Element>(idx);
      }
    }
  }
  if (!(g.explicit_mul == g.generic_mul) || !(g.explicit_imp == g.generic_imp)) {
    throw BijectionFailure("closed and generic operation formulas disagree");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g.phi[g.explicit_mul(i, j)] != A.mul(g.phi[i], g.phi[j]) ||
          g.phi[g.explicit_imp(i, j)] != A.imp(g.phi[i], g.phi[j])) {
        throw BijectionFailure("operations on Y do not match A");
      }
    }
  }
  Triple const one{e.X.unit(), e.X.unit(), e.B.unit()};
  HoopTables t{n, static_cast<Element>(g.index_of(one)), g.explicit_mul,
               g.explicit_imp, std::nullopt, "Y"};
  g.hoop = validate_hoop(std::move(t));
  g.hoop = with_bottom(g.hoop, least_element(g.hoop));
  return g;
}

// ---------------------------------------------------------------------------
// Strong case: carrier Y' inside X x B
// ---------------------------------------------------------------------------

using Pair = std::pair<Element, Element>;  // (x, b)

struct StrongSemidirect {
  std::vector<Pair> carrier;    // sorted
  std::vector<Element> to_A;    // (x, b) -> s(b) * x
  std::vector<Element> from_A;  // a -> (sp(a) -> a, p(a))
  FiniteHoop hoop;              // tables from the closed formulas

  long index_of(Element x, Element b) const {
    Pair const key{x, b};
    auto it = std::lower_bound(carrier.begin(), carrier.end(), key);
    return it != carrier.end() && *it == key ? it - carrier.begin() : -1;
  }
};

inline StrongSemidirect strong_semidirect(const SplitExtension& e) {
  if (!e.strong) {
    throw NotStrong();
  }
  auto const& A = e.A;
  auto const& B = e.B;
  auto const kinv = e.k_inverse();
  auto to_x = [&](Element a) -> Element {
    if (kinv[a] < 0) {
      throw BijectionFailure("element " + std::to_string(a) +
                             " is not in the kernel");
    }
    return static_cast<Element>(kinv[a]);
  };
  StrongSemidirect r{{}, {}, {}, terminal_hoop()};
  for (Element x = 0; x < e.X.order(); ++x) {
    for (Element b = 0; b < B.order(); ++b) {
      Element const sb = e.s(b);
      if (A.imp(sb, A.mul(sb, e.k(x))) == e.k(x)) {
        r.carrier.emplace_back(x, b);
      }
    }
  }
  auto const n = r.carrier.size();
  if (n != A.order()) {
    throw BijectionFailure("|Y'| = " + std::to_string(n) + " but |A| = " +
                           std::to_string(A.order()));
  }
  r.to_A.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.to_A[i] = A.mul(e.s(r.carrier[i].second), e.k(r.carrier[i].first));
  }
  r.from_A.resize(A.order());
  for (Element a = 0; a < A.order(); ++a) {
    long const i = r.index_of(to_x(A.imp(e.sp(a), a)), e.p(a));
    if (i < 0) {
      throw BijectionFailure("a -> (sp(a) -> a, p(a)) leaves Y'");
    }
    r.from_A[a] = static_cast<Element>(i);
    if (r.to_A[r.from_A[a]] != a) {
      throw BijectionFailure("round trip through Y' fails at a=" +
                             std::to_string(a));
    }
  }
  HoopTables t{n, static_cast<Element>(r.index_of(e.X.unit(), B.unit())),
               Table(n, n), Table(n, n), std::nullopt, "Y'"};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto [x, b] = r.carrier[i];
      auto [y, bp] = r.carrier[j];
      Element const kx = e.k(x), ky = e.k(y);
      Element const si = e.s(B.imp(bp, b));
      Element const sm = e.s(B.mul(b, bp));
      long const ii =
          r.index_of(to_x(A.imp(si, A.imp(kx, ky))), B.imp(b, bp));
      long const mm = r.index_of(to_x(A.imp(sm, A.mul(sm, A.mul(kx, ky)))),
                                 B.mul(b, bp));
      if (ii < 0 || mm < 0) {
        throw BijectionFailure("operation leaves Y'");
      }
      t.imp(i, j) = static_cast<Element>(ii);
      t.mul(i, j) = static_cast<Element>(mm);
      if (r.to_A[t.imp(i, j)] != A.imp(r.to_A[i], r.to_A[j]) ||
          r.to_A[t.mul(i, j)] != A.mul(r.to_A[i], r.to_A[j])) {
        throw BijectionFailure("operations on Y' do not match A");
      }
    }
  }
  r.hoop = validate_hoop(std::move(t));
  r.hoop = with_bottom(r.hoop, least_element(r.hoop));
  return r;
}

// ---------------------------------------------------------------------------
// Regular / dense decomposition
// ---------------------------------------------------------------------------

// B = fixed points of double negation, X = elements sent to 1 by it,
// p = double negation, k and s the inclusions.
inline SplitExtension regular_dense_decomposition(const FiniteHoop& A) {
  if (!A.bounded()) {
    throw NotBounded();
  }
  if (!A.in(Variety::basic)) {
    throw NotBasic();
  }
  std::vector<Element> regular, dense;
  for (Element a = 0; a < A.order(); ++a) {
    Element const nn = negation(A, negation(A, a));
    if (nn == a) {
      regular.push_back(a);
    }
    if (nn == A.unit()) {
      dense.push_back(a);
    }
  }
  Subhoop mv = subhoop(A, regular, "MV(" + A.name() + ")");
  Subhoop d = subhoop(A, dense, "D(" + A.name() + ")");
  std::vector<long> mv_index(A.order(), -1);
  for (std::size_t i = 0; i < mv.embedding.size(); ++i) {
    mv_index[mv.embedding[i]] = static_cast<long>(i);
  }
  std::vector<Element> p(A.order());
  for (Element a = 0; a < A.order(); ++a) {
    p[a] = static_cast<Element>(mv_index[negation(A, negation(A, a))]);
  }
  auto e = validate_split_extension(d.hoop, A, mv.hoop, d.embedding, p,
                                    mv.embedding);
  if (!e.strong) {
    throw ValidationFailure("double negation does not give a strong section");
  }
  return e;
}

// ---------------------------------------------------------------------------
// Direct search for split extensions (slow oracle)
// ---------------------------------------------------------------------------

struct RawSearchOptions {
  std::size_t max_order = 9;
  bool strong_only = false;
  std::optional<Variety> variety;
  std::size_t budget = kDefaultBudget;
};

// Every split extension of B by X with |A| <= max_order, one per class
// under iso_extensions. A is built fiber by fiber over B: the fiber over 1
// is X itself, the fiber over b != 1 starts with s(b). Multiplication
// cells range over the fiber of p(a)*p(c); the implication is the residuum.
inline std::vector<SplitExtension> raw_split_extensions(
    const FiniteHoop& B, const FiniteHoop& X, RawSearchOptions opt = {}) {
  std::vector<Element> others;
  for (Element b = 0; b < B.order(); ++b) {
    if (b != B.unit()) {
      others.push_back(b);
    }
  }
  auto const nx = X.order();
  std::size_t const max_fiber = nx * nx;
  std::vector<SplitExtension> out;
  std::size_t nodes = 0;

  std::vector<std::size_t> sizes(others.size(), 1);
  while (true) {
    std::size_t total = nx;
    for (auto m : sizes) {
      total += m;
    }
    if (total <= opt.max_order) {
      auto const n = total;
      std::vector<Element> fiber_of(n);
      std::vector<std::vector<Element>> members(B.order());
      std::vector<Element> sB(B.order());
      for (Element x = 0; x < nx; ++x) {
        fiber_of[x] = B.unit();
        members[B.unit()].push_back(x);
      }
      sB[B.unit()] = X.unit();
      Element next = static_cast<Element>(nx);
      for (std::size_t i = 0; i < others.size(); ++i) {
        sB[others[i]] = next;
        for (std::size_t j = 0; j < sizes[i]; ++j) {
          fiber_of[next] = others[i];
          members[others[i]].push_back(next++);
        }
      }
      detail::PartialTable m(n);
      Element const u = X.unit();
      for (Element a = 0; a < n; ++a) {
        m.set(a, u, a);
      }
      for (Element x = 0; x < nx; ++x) {
        for (Element y = 0; y < nx; ++y) {
          m.set(x, y, X.mul(x, y));
        }
      }
      for (Element b = 0; b < B.order(); ++b) {
        for (Element c = 0; c < B.order(); ++c) {
          m.set(sB[b], sB[c], sB[B.mul(b, c)]);
        }
      }
      std::vector<std::pair<Element, Element>> cells;
      for (Element a = 0; a < n; ++a) {
        for (Element c = a; c < n; ++c) {
          if (m.get(a, c) < 0) {
            cells.emplace_back(a, c);
          }
        }
      }
      // Extras (fiber members other than s(b)) are interchangeable until
      // some filled cell mentions them, so only the first unmentioned one
      // of a fiber is tried as a value.
      std::vector<bool> extra(n, false);
      for (Element a = static_cast<Element>(nx); a < n; ++a) {
        extra[a] = a != sB[fiber_of[a]];
      }
      std::vector<int> mentioned(n, 0);
      std::size_t const first_new = out.size();
      auto leaf = [&]() {
        Table mul = m.table();
        auto imp = detail::residuum(mul, n);
        if (!imp) {
          return;
        }
        for (Element a = 0; a < n; ++a) {
          for (Element c = 0; c < n; ++c) {
            if (fiber_of[(*imp)(a, c)] != B.imp(fiber_of[a], fiber_of[c])) {
              return;
            }
          }
        }
        for (Element x = 0; x < nx; ++x) {
          for (Element y = 0; y < nx; ++y) {
            if ((*imp)(x, y) != X.imp(x, y)) {
              return;
            }
          }
        }
        for (Element b = 0; b < B.order(); ++b) {
          for (Element c = 0; c < B.order(); ++c) {
            if ((*imp)(sB[b], sB[c]) != sB[B.imp(b, c)]) {
              return;
            }
          }
        }
        HoopTables t{n, u, mul, *imp, std::nullopt, "A"};
        if (check_hoop_axioms(t)) {
          return;
        }
        FiniteHoop A = validate_hoop(std::move(t));
        A = with_bottom(A, least_element(A));
        if (opt.variety && !A.in(*opt.variety)) {
          return;
        }
        std::vector<Element> k(nx);
        for (Element x = 0; x < nx; ++x) {
          k[x] = x;
        }
        SplitExtension e = validate_split_extension(X, A, B, k, fiber_of, sB);
        if (opt.strong_only && !e.strong) {
          return;
        }
        for (std::size_t i = first_new; i < out.size(); ++i) {
          if (iso_extensions(out[i], e)) {
            return;
          }
        }
        out.push_back(std::move(e));
      };
      auto rec = [&](auto&& self, std::size_t k) -> void {
        if (++nodes > opt.budget) {
          throw BudgetExceeded(opt.budget);
        }
        if (k == cells.size()) {
          leaf();
          return;
        }
        auto [a, c] = cells[k];
        ++mentioned[a];
        ++mentioned[c];
        bool fresh_tried = false;
        for (Element v : members[B.mul(fiber_of[a], fiber_of[c])]) {
          bool const fresh = extra[v] && mentioned[v] == 0;
          if (fresh && fresh_tried) {
            continue;
          }
          fresh_tried |= fresh;
          m.set(a, c, v);
          ++mentioned[v];
          if (m.consistent_after(a, c)) {
            self(self, k + 1);
          }
          --mentioned[v];
        }
        m.set(a, c, -1);
        --mentioned[a];
        --mentioned[c];
      };
      if (m.assoc_ok()) {
        rec(rec, 0);
      }
    }
    std::size_t i = 0;
    while (i < sizes.size() && ++sizes[i] > max_fiber) {
      sizes[i++] = 1;
    }
    if (i == sizes.size()) {
      break;
    }
  }
  return out;
}

}  // namespace hoopforge
