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
#include <atomic>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hoopforge/error.hpp"
#include "hoopforge/extension.hpp"
#include "hoopforge/hoop.hpp"
#include "hoopforge/morphology.hpp"
#include "hoopforge/parallel.hpp"
#include "hoopforge/report.hpp"

namespace hoopforge {

struct ActionCertificates {
  bool hoop = false;
  bool basic = false;     // B, X basic and B2 holds
  bool wajsberg = false;  // B, X Wajsberg and W2 holds
  friend bool operator==(const ActionCertificates&,
                         const ActionCertificates&) = default;
};

// Pair of maps f, g : B x X -> X, stored as |B| x |X| tables.
struct StrongExternalAction {
  FiniteHoop B;
  FiniteHoop X;
  Table f;
  Table g;
  ActionCertificates cert;

  Element fb(Element b, Element x) const { return f(b, x); }
  Element gb(Element b, Element x) const { return g(b, x); }

  bool is_identity() const {
    for (Element b = 0; b < B.order(); ++b) {
      for (Element x = 0; x < X.order(); ++x) {
        if (f(b, x) != x || g(b, x) != x) {
          return false;
        }
      }
    }
    return true;
  }
};

namespace detail {

// Evaluation over partially filled tables: -1 stands for "not known yet"
// and poisons everything computed from it.
struct ActionEval {
  const FiniteHoop& B;
  const FiniteHoop& X;
  const std::vector<long>& f;
  const std::vector<long>& g;
  // Guarded reading: an instance only counts when every x-variable is fixed
  // by f at its paired b-variable, i.e. (x, b) lies in Y'. Unguarded is the
  // literal reading, kept for comparison.
  bool guarded = true;

  // 1 if (x, b) is in Y' or the guard is off, 0 if not, -1 if unknown.
  int fixed(Element b, Element x) const {
    if (!guarded) {
      return 1;
    }
    long const v = F(b, x);
    return v < 0 ? -1 : v == static_cast<long>(x);
  }

  long F(Element b, long x) const {
    return x < 0 ? -1 : f[b * X.order() + static_cast<std::size_t>(x)];
  }
  long G(Element b, long x) const {
    return x < 0 ? -1 : g[b * X.order() + static_cast<std::size_t>(x)];
  }
  long mul(long x, long y) const {
    return x < 0 || y < 0 ? -1L
                          : long{X.mul(static_cast<Element>(x), static_cast<Element>(y))};
  }
  long imp(long x, long y) const {
    return x < 0 || y < 0 ? -1L
                          : long{X.imp(static_cast<Element>(x), static_cast<Element>(y))};
  }

  int guard3(Element b1, Element b2, Element b3, Element x, Element y,
             Element z) const {
    int const k1 = fixed(b1, x), k2 = fixed(b2, y), k3 = fixed(b3, z);
    if (k1 == 0 || k2 == 0 || k3 == 0) {
      return 0;
    }
    return k1 < 0 || k2 < 0 || k3 < 0 ? -1 : 1;
  }

  // Each returns 1 if the instance holds, 0 if it fails, -1 if unknown.
  int e3(Element b1, Element b2, Element x, Element y) const {
    if (int const k = fixed(b1, x); k <= 0) {
      return k < 0 ? -1 : 1;
    }
    Element const c = B.mul(b1, b2);
    long const l = F(c, mul(x, G(b1, X.imp(x, y))));
    long const r = F(c, X.mul(x, X.imp(x, y)));
    return l < 0 || r < 0 ? -1 : l == r;
  }
  int e4(Element b1, Element b2, Element b3, Element x, Element y,
         Element z) const {
    if (int const k = guard3(b1, b2, b3, x, y, z); k <= 0) {
      return k < 0 ? -1 : 1;
    }
    Element const c = B.mul(b1, b2);
    long const l = G(B.imp(b3, c), imp(F(c, X.mul(x, y)), z));
    long const r = G(B.imp(B.imp(b2, b3), b1),
                     imp(x, G(B.imp(b3, b2), X.imp(y, z))));
    return l < 0 || r < 0 ? -1 : l == r;
  }
  int b2(Element b1, Element b2_, Element b3, Element x, Element y,
         Element z) const {
    if (int const k = guard3(b1, b2_, b3, x, y, z); k <= 0) {
      return k < 0 ? -1 : 1;
    }
    auto bi = [&](Element a, Element b) { return B.imp(a, b); };
    Element const bt = bi(bi(bi(bi(b2_, b1), b3), b3), bi(bi(b1, b2_), b3));
    long const l = G(bi(b3, bi(b1, b2_)), imp(G(bi(b2_, b1), X.imp(x, y)), z));
    long const r = G(bi(b3, bi(b2_, b1)), imp(G(bi(b1, b2_), X.imp(y, x)), z));
    long const v = G(bt, imp(l, imp(r, z)));
    return v < 0 ? -1 : v == X.unit();
  }
  int w2(Element b1, Element b2, Element x, Element y) const {
    int const k1 = fixed(b1, x), k2 = fixed(b2, y);
    if (k1 == 0 || k2 == 0) {
      return 1;
    }
    if (k1 < 0 || k2 < 0) {
      return -1;
    }
    long const l = imp(G(B.imp(b2, b1), X.imp(x, y)), y);
    long const r = imp(G(B.imp(b1, b2), X.imp(y, x)), x);
    return l < 0 || r < 0 ? -1 : l == r;
  }
};

inline std::vector<long> flatten(const Table& t) {
  return {t.data().begin(), t.data().end()};
}

// First failing instance of one rule, in lexicographic order of the
// variables (b1, b2, b3, x, y, z).
inline std::optional<Witness> first_violation(const ActionEval& ev,
                                              const std::string& rule) {
  auto const nb = static_cast<Element>(ev.B.order());
  auto const nx = static_cast<Element>(ev.X.order());
  Element const u = ev.X.unit();
  if (rule == "E1") {
    for (Element b = 0; b < nb; ++b) {
      if (ev.F(b, u) != u || ev.G(b, u) != u) {
        return make_witness("E1", {{"b", b}});
      }
    }
  } else if (rule == "E2") {
    for (Element x = 0; x < nx; ++x) {
      if (ev.F(ev.B.unit(), x) != x || ev.G(ev.B.unit(), x) != x) {
        return make_witness("E2", {{"x", x}});
      }
    }
  } else if (rule == "E3" || rule == "W2") {
    bool const e3 = rule == "E3";
    for (Element b1 = 0; b1 < nb; ++b1)
      for (Element b2 = 0; b2 < nb; ++b2)
        for (Element x = 0; x < nx; ++x)
          for (Element y = 0; y < nx; ++y) {
            if ((e3 ? ev.e3(b1, b2, x, y) : ev.w2(b1, b2, x, y)) == 0) {
              return make_witness(
                  rule, {{"b1", b1}, {"b2", b2}, {"x", x}, {"y", y}});
            }
          }
  } else if (rule == "E4" || rule == "B2") {
    bool const e4 = rule == "E4";
    for (Element b1 = 0; b1 < nb; ++b1)
      for (Element b2 = 0; b2 < nb; ++b2)
        for (Element b3 = 0; b3 < nb; ++b3)
          for (Element x = 0; x < nx; ++x)
            for (Element y = 0; y < nx; ++y)
              for (Element z = 0; z < nx; ++z) {
                int const r = e4 ? ev.e4(b1, b2, b3, x, y, z)
                                 : ev.b2(b1, b2, b3, x, y, z);
                if (r == 0) {
                  return make_witness(rule, {{"b1", b1},
                                             {"b2", b2},
                                             {"b3", b3},
                                             {"x", x},
                                             {"y", y},
                                             {"z", z}});
                }
              }
  } else {
    throw Error("unknown action rule '" + rule + "'");
  }
  return std::nullopt;
}

inline void check_action_shape(const FiniteHoop& B, const FiniteHoop& X,
                               const Table& f, const Table& g) {
  for (auto const* t : {&f, &g}) {
    if (t->rows() != B.order() || t->cols() != X.order()) {
      throw MalformedTable("action table must be " +
                           std::to_string(B.order()) + "x" +
                           std::to_string(X.order()));
    }
    for (Element v : t->data()) {
      check_index(X, v);
    }
  }
}

}  // namespace detail

// Rules checked for a variety, in order.
inline std::vector<std::string> action_rules(Variety v) {
  switch (v) {
    case Variety::hoop:
      return {"E1", "E2", "E3", "E4"};
    case Variety::basic:
    case Variety::godel:
      return {"E1", "E2", "E3", "E4", "B2"};
    case Variety::wajsberg:
      return {"E1", "E2", "E3", "E4", "W2"};
    case Variety::product:
      break;
  }
  throw UnsupportedVariety(
      "no strong external action axioms are implemented for product hoops");
}

inline ActionCertificates action_certificates(const FiniteHoop& B,
                                              const FiniteHoop& X,
                                              const Table& f, const Table& g) {
  detail::check_action_shape(B, X, f, g);
  auto const ff = detail::flatten(f), gg = detail::flatten(g);
  detail::ActionEval ev{B, X, ff, gg};
  ActionCertificates c;
  c.hoop = true;
  for (auto const& r : action_rules(Variety::hoop)) {
    c.hoop = c.hoop && !detail::first_violation(ev, r);
  }
  c.basic = c.hoop && B.in(Variety::basic) && X.in(Variety::basic) &&
            !detail::first_violation(ev, "B2");
  c.wajsberg = c.hoop && B.in(Variety::wajsberg) && X.in(Variety::wajsberg) &&
               !detail::first_violation(ev, "W2");
  return c;
}

// First failing instance of `rule` with the guard switched off, i.e. every
// x, y, z ranging over all of X.
inline std::optional<Witness> literal_action_violation(const FiniteHoop& B,
                                                       const FiniteHoop& X,
                                                       const Table& f,
                                                       const Table& g,
                                                       const std::string& rule) {
  detail::check_action_shape(B, X, f, g);
  auto const ff = detail::flatten(f), gg = detail::flatten(g);
  detail::ActionEval ev{B, X, ff, gg, false};
  return detail::first_violation(ev, rule);
}

// Throws AxiomViolation carrying the first failing rule and its minimal
// witness. B and X must themselves lie in the requested variety.
// E3/E4/B2/W2 are checked in the guarded reading (see ActionEval): taken
// over all of X, E4 already fails for the action of the G3 extension.
inline StrongExternalAction validate_action(const FiniteHoop& B,
                                            const FiniteHoop& X, Table f,
                                            Table g,
                                            Variety variety = Variety::hoop) {
  auto const rules = action_rules(variety);
  if (!B.in(variety) || !X.in(variety)) {
    throw PreconditionUnmet("B and X must both be " +
                            std::string(to_string(variety)) + " hoops");
  }
  detail::check_action_shape(B, X, f, g);
  auto const ff = detail::flatten(f), gg = detail::flatten(g);
  detail::ActionEval ev{B, X, ff, gg};
  for (auto const& r : rules) {
    if (auto w = detail::first_violation(ev, r)) {
      throw AxiomViolation(*w);
    }
  }
  auto cert = action_certificates(B, X, f, g);
  return {B, X, std::move(f), std::move(g), cert};
}

inline bool action_in(const StrongExternalAction& a, Variety v) {
  switch (v) {
    case Variety::hoop:
      return a.cert.hoop;
    case Variety::basic:
      return a.cert.basic;
    case Variety::godel:
      return a.cert.basic && a.B.in(Variety::godel) && a.X.in(Variety::godel);
    case Variety::wajsberg:
      return a.cert.wajsberg;
    case Variety::product:
      break;
  }
  return false;
}

inline StrongExternalAction identity_action(const FiniteHoop& B,
                                            const FiniteHoop& X) {
  Table t(B.order(), X.order());
  for (Element b = 0; b < B.order(); ++b) {
    for (Element x = 0; x < X.order(); ++x) {
      t(b, x) = x;
    }
  }
  return validate_action(B, X, t, t);
}

// ---------------------------------------------------------------------------
// tau and mu
// ---------------------------------------------------------------------------

// f_b(x) = s(b) -> s(b)*x and g_b(x) = s(b) -> x, computed in A and pulled
// back to X through k.
inline StrongExternalAction tau(const SplitExtension& e) {
  if (!e.strong) {
    throw NotStrong();
  }
  auto const& A = e.A;
  auto const kinv = e.k_inverse();
  auto back = [&](Element a) {
    if (kinv[a] < 0) {
      throw ValidationFailure("tau: value outside the kernel");
    }
    return static_cast<Element>(kinv[a]);
  };
  Table f(e.B.order(), e.X.order()), g(e.B.order(), e.X.order());
  for (Element b = 0; b < e.B.order(); ++b) {
    Element const sb = e.s(b);
    for (Element x = 0; x < e.X.order(); ++x) {
      f(b, x) = back(A.imp(sb, A.mul(sb, e.k(x))));
      g(b, x) = back(A.imp(sb, e.k(x)));
    }
  }
  try {
    return validate_action(e.B, e.X, std::move(f), std::move(g));
  } catch (const AxiomViolation& v) {
    throw ValidationFailure(std::string("tau produced an invalid action: ") +
                            v.what());
  }
}

// mu(act) together with the carrier Y' = {(x, b) : f_b(x) = x}, sorted.
struct ActionModel {
  StrongExternalAction act;
  std::vector<Pair> carrier;
  SplitExtension ext;

  long index_of(Element x, Element b) const {
    Pair const key{x, b};
    auto it = std::lower_bound(carrier.begin(), carrier.end(), key);
    return it != carrier.end() && *it == key ? it - carrier.begin() : -1;
  }
  long index_of(Pair p) const { return index_of(p.first, p.second); }
  Pair at(Element i) const { return carrier[i]; }
};

inline ActionModel mu_model(const StrongExternalAction& act) {
  auto const& B = act.B;
  auto const& X = act.X;
  std::vector<Pair> carrier;
  for (Element x = 0; x < X.order(); ++x) {
    for (Element b = 0; b < B.order(); ++b) {
      if (act.f(b, x) == x) {
        carrier.emplace_back(x, b);
      }
    }
  }
  auto index_of = [&](Element x, Element b) -> Element {
    auto it = std::lower_bound(carrier.begin(), carrier.end(), Pair{x, b});
    if (it == carrier.end() || *it != Pair{x, b}) {
      throw ValidationFailure("operation leaves Y' at (" + std::to_string(x) +
                              "," + std::to_string(b) + ")");
    }
    return static_cast<Element>(it - carrier.begin());
  };
  auto const n = carrier.size();
  HoopTables t{n, index_of(X.unit(), B.unit()), Table(n, n), Table(n, n),
               std::nullopt, "Y'"};
  for (std::size_t i = 0; i < n; ++i) {
    auto [x, b] = carrier[i];
    for (std::size_t j = 0; j < n; ++j) {
      auto [y, bp] = carrier[j];
      t.imp(i, j) = index_of(act.g(B.imp(bp, b), X.imp(x, y)), B.imp(b, bp));
      Element const c = B.mul(b, bp);
      t.mul(i, j) = index_of(act.f(c, X.mul(x, y)), c);
    }
  }
  FiniteHoop A = validate_hoop(std::move(t));
  A = with_bottom(A, least_element(A));
  if (act.cert.basic && !A.in(Variety::basic)) {
    throw ValidationFailure("basic action produced a non-basic Y'");
  }
  if (act.cert.wajsberg && !A.in(Variety::wajsberg)) {
    throw ValidationFailure("Wajsberg action produced a non-Wajsberg Y'");
  }
  std::vector<Element> k(X.order()), p(n), s(B.order());
  for (Element x = 0; x < X.order(); ++x) {
    k[x] = index_of(x, B.unit());
  }
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = carrier[i].second;
  }
  for (Element b = 0; b < B.order(); ++b) {
    s[b] = index_of(X.unit(), b);
  }
  auto e = validate_split_extension(X, A, B, k, p, s);
  if (!e.strong) {
    throw ValidationFailure("mu produced an extension without strong section");
  }
  return {act, std::move(carrier), std::move(e)};
}

inline SplitExtension mu(const StrongExternalAction& act) {
  return mu_model(act).ext;
}

// ---------------------------------------------------------------------------
// Operations on Y', two ways
// ---------------------------------------------------------------------------

struct PairOps {
  Pair imp;
  Pair mul;
};

namespace detail {

inline void require_in_carrier(const ActionModel& m, Pair u) {
  if (m.index_of(u) < 0) {
    throw NotInCarrier("(" + std::to_string(u.first) + "," +
                       std::to_string(u.second) + ") is not in Y'");
  }
}

// Formulas of the strong semidirect product, evaluated in A through k and s.
inline PairOps section_ops(const ActionModel& m, Pair u, Pair v) {
  auto const& e = m.ext;
  auto const& A = e.A;
  auto const& B = e.B;
  auto const kinv = e.k_inverse();
  auto [x, b] = u;
  auto [y, bp] = v;
  Element const kx = e.k(x), ky = e.k(y);
  Element const si = e.s(B.imp(bp, b));
  Element const sm = e.s(B.mul(b, bp));
  long const i = kinv[A.imp(si, A.imp(kx, ky))];
  long const j = kinv[A.imp(sm, A.mul(sm, A.mul(kx, ky)))];
  if (i < 0 || j < 0) {
    throw ValidationFailure("section formula leaves the kernel");
  }
  return {{static_cast<Element>(i), B.imp(b, bp)},
          {static_cast<Element>(j), B.mul(b, bp)}};
}

inline PairOps action_ops(const StrongExternalAction& a, Pair u, Pair v) {
  auto const& B = a.B;
  auto const& X = a.X;
  auto [x, b] = u;
  auto [y, bp] = v;
  Element const c = B.mul(b, bp);
  return {{a.g(B.imp(bp, b), X.imp(x, y)), B.imp(b, bp)},
          {a.f(c, X.mul(x, y)), c}};
}

}  // namespace detail

// Both presentations of -> and * on Y'; they must agree.
inline PairOps semidirect_ops_strong(const ActionModel& m, Pair u, Pair v) {
  detail::require_in_carrier(m, u);
  detail::require_in_carrier(m, v);
  auto const sec = detail::section_ops(m, u, v);
  auto const act = detail::action_ops(m.act, u, v);
  if (sec.imp != act.imp || sec.mul != act.mul) {
    throw ValidationFailure("section and action formulas disagree");
  }
  return act;
}

inline PairOps semidirect_ops_strong(const StrongExternalAction& a, Pair u,
                                     Pair v) {
  return semidirect_ops_strong(mu_model(a), u, v);
}

struct PairLattice {
  Pair meet;
  Pair join;
};

namespace detail {

inline PairLattice section_lattice(const ActionModel& m, Pair u, Pair v) {
  auto const& e = m.ext;
  auto const& A = e.A;
  auto const& B = e.B;
  auto const kinv = e.k_inverse();
  auto [x, b] = u;
  auto [y, bp] = v;
  Element const kx = e.k(x), ky = e.k(y);
  Element const bm = meet(B, b, bp);
  Element const bj = join(B, b, bp);
  Element const sm = e.s(bm), sj = e.s(bj);
  long const mi = kinv[A.imp(sm, A.mul(sm, meet(A, kx, ky)))];
  Element const l = A.imp(A.imp(e.s(B.imp(bp, b)), A.imp(kx, ky)), ky);
  Element const r = A.imp(A.imp(e.s(B.imp(b, bp)), A.imp(ky, kx)), kx);
  long const ji = kinv[A.imp(sj, A.mul(sj, meet(A, l, r)))];
  if (mi < 0 || ji < 0) {
    throw ValidationFailure("lattice formula leaves the kernel");
  }
  return {{static_cast<Element>(mi), bm}, {static_cast<Element>(ji), bj}};
}

inline PairLattice action_lattice(const StrongExternalAction& a, Pair u,
                                  Pair v) {
  auto const& B = a.B;
  auto const& X = a.X;
  auto [x, b] = u;
  auto [y, bp] = v;
  Element const bm = meet(B, b, bp);
  Element const bj = join(B, b, bp);
  Element const l = X.imp(a.g(B.imp(bp, b), X.imp(x, y)), y);
  Element const r = X.imp(a.g(B.imp(b, bp), X.imp(y, x)), x);
  return {{a.f(bm, meet(X, x, y)), bm}, {a.f(bj, meet(X, l, r)), bj}};
}

// inf and sup read off the natural order of Y', no formulas involved.
inline PairLattice order_lattice(const ActionModel& m, Pair u, Pair v) {
  auto const& Y = m.ext.A;
  auto const n = static_cast<Element>(Y.order());
  auto le = [&](Element a, Element c) { return Y.imp(a, c) == Y.unit(); };
  auto const i = static_cast<Element>(m.index_of(u));
  auto const j = static_cast<Element>(m.index_of(v));
  std::optional<Element> inf, sup;
  for (Element z = 0; z < n; ++z) {
    if (le(z, i) && le(z, j) && (!inf || le(*inf, z))) {
      inf = z;
    }
    if (le(i, z) && le(j, z) && (!sup || le(z, *sup))) {
      sup = z;
    }
  }
  for (Element z = 0; z < n; ++z) {
    if (le(z, i) && le(z, j) && !le(z, *inf)) {
      throw ValidationFailure("Y' has no greatest lower bound");
    }
    if (le(i, z) && le(j, z) && !le(*sup, z)) {
      throw ValidationFailure("Y' has no least upper bound");
    }
  }
  return {m.carrier[*inf], m.carrier[*sup]};
}

}  // namespace detail

inline PairLattice semidirect_lattice(const ActionModel& m, Pair u, Pair v) {
  if (!m.act.cert.basic) {
    throw NotBasic("lattice formulas need an action with the basic certificate");
  }
  detail::require_in_carrier(m, u);
  detail::require_in_carrier(m, v);
  auto const a = detail::action_lattice(m.act, u, v);
  auto const s = detail::section_lattice(m, u, v);
  auto const o = detail::order_lattice(m, u, v);
  if (a.meet != s.meet || a.meet != o.meet) {
    throw ValidationFailure("meet formulas disagree");
  }
  if (a.join != s.join || a.join != o.join) {
    throw ValidationFailure("join formulas disagree");
  }
  return a;
}

inline PairLattice semidirect_lattice(const StrongExternalAction& a, Pair u,
                                      Pair v) {
  if (!a.cert.basic) {
    throw NotBasic("lattice formulas need an action with the basic certificate");
  }
  return semidirect_lattice(mu_model(a), u, v);
}

// Runs both formula checks over every pair of Y'; lattice only for basic
// actions.
inline PropertyReport check_semidirect_formulas(const ActionModel& m) {
  PropertyReport r;
  auto const n = static_cast<Element>(m.carrier.size());
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      auto const u = m.carrier[i], v = m.carrier[j];
      ++r.checked;
      auto const sec = detail::section_ops(m, u, v);
      auto const act = detail::action_ops(m.act, u, v);
      if (sec.imp != act.imp) {
        r.fail(make_witness("ops.imp", {{"i", i}, {"j", j}}));
      }
      if (sec.mul != act.mul) {
        r.fail(make_witness("ops.mul", {{"i", i}, {"j", j}}));
      }
      if (m.carrier[m.ext.A.imp(i, j)] != act.imp ||
          m.carrier[m.ext.A.mul(i, j)] != act.mul) {
        r.fail(make_witness("ops.table", {{"i", i}, {"j", j}}));
      }
      if (!m.act.cert.basic) {
        continue;
      }
      auto const a = detail::action_lattice(m.act, u, v);
      auto const s = detail::section_lattice(m, u, v);
      auto const o = detail::order_lattice(m, u, v);
      if (a.meet != o.meet || s.meet != o.meet) {
        r.fail(make_witness("lattice.meet", {{"i", i}, {"j", j}}));
      }
      if (a.join != o.join || s.join != o.join) {
        r.fail(make_witness("lattice.join", {{"i", i}, {"j", j}}));
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Properties of g
// ---------------------------------------------------------------------------

struct GProperties {
  bool monotone = true;
  bool composition = true;     // g_{b*b'} = g_b . g_b'
  bool preserves_imp = true;   // g_b(x -> y) = g_b(x) -> g_b(y)
  std::vector<Witness> failures;
  bool ok() const { return monotone && composition && preserves_imp; }
};

inline GProperties g_properties(const StrongExternalAction& a) {
  GProperties r;
  auto const& B = a.B;
  auto const& X = a.X;
  auto const nb = static_cast<Element>(B.order());
  auto const nx = static_cast<Element>(X.order());
  auto le = [&](Element x, Element y) { return X.imp(x, y) == X.unit(); };
  for (Element b = 0; b < nb && r.monotone; ++b)
    for (Element x = 0; x < nx && r.monotone; ++x)
      for (Element y = 0; y < nx; ++y) {
        if (le(x, y) && !le(a.g(b, x), a.g(b, y))) {
          r.monotone = false;
          r.failures.push_back(
              make_witness("g.monotone", {{"b", b}, {"x", x}, {"y", y}}));
          break;
        }
      }
  for (Element b1 = 0; b1 < nb && r.composition; ++b1)
    for (Element b2 = 0; b2 < nb && r.composition; ++b2)
      for (Element x = 0; x < nx; ++x) {
        if (a.g(B.mul(b1, b2), x) != a.g(b1, a.g(b2, x))) {
          r.composition = false;
          r.failures.push_back(
              make_witness("g.compose", {{"b1", b1}, {"b2", b2}, {"x", x}}));
          break;
        }
      }
  for (Element b = 0; b < nb && r.preserves_imp; ++b)
    for (Element x = 0; x < nx && r.preserves_imp; ++x)
      for (Element y = 0; y < nx; ++y) {
        if (a.g(b, X.imp(x, y)) != X.imp(a.g(b, x), a.g(b, y))) {
          r.preserves_imp = false;
          r.failures.push_back(
              make_witness("g.imp", {{"b", b}, {"x", x}, {"y", y}}));
          break;
        }
      }
  return r;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

struct ActionSearchOptions {
  std::size_t budget = kDefaultBudget;
  std::size_t jobs = 1;
};

// Every strong external action of B on X in the variety. Rows b = 1 and
// columns x = 1 are pinned by E1/E2; the remaining cells are filled b by b
// (f row, then g row) and every E3/E4 instance that has become decidable
// is checked after each cell.
inline std::vector<StrongExternalAction> enumerate_actions(
    const FiniteHoop& B, const FiniteHoop& X, Variety variety = Variety::hoop,
    ActionSearchOptions opt = {}) {
  auto const rules = action_rules(variety);
  if (!B.in(variety) || !X.in(variety)) {
    throw PreconditionUnmet("B and X must both be " +
                            std::string(to_string(variety)) + " hoops");
  }
  auto const nb = static_cast<Element>(B.order());
  auto const nx = static_cast<Element>(X.order());
  Element const ub = B.unit(), ux = X.unit();
  std::vector<long> f0(nb * nx, -1), g0(nb * nx, -1);
  for (Element b = 0; b < nb; ++b) {
    f0[b * nx + ux] = g0[b * nx + ux] = ux;
  }
  for (Element x = 0; x < nx; ++x) {
    f0[ub * nx + x] = g0[ub * nx + x] = x;
  }
  // (is_g, flat index)
  std::vector<std::pair<bool, std::size_t>> cells;
  for (Element b = 0; b < nb; ++b) {
    if (b == ub) {
      continue;
    }
    for (bool is_g : {false, true}) {
      for (Element x = 0; x < nx; ++x) {
        if (x != ux) {
          cells.emplace_back(is_g, b * nx + x);
        }
      }
    }
  }

  auto partial_ok = [&](const detail::ActionEval& ev) {
    for (Element b1 = 0; b1 < nb; ++b1)
      for (Element b2 = 0; b2 < nb; ++b2) {
        for (Element x = 0; x < nx; ++x)
          for (Element y = 0; y < nx; ++y) {
            if (ev.e3(b1, b2, x, y) == 0) {
              return false;
            }
          }
        for (Element b3 = 0; b3 < nb; ++b3)
          for (Element x = 0; x < nx; ++x)
            for (Element y = 0; y < nx; ++y)
              for (Element z = 0; z < nx; ++z) {
                if (ev.e4(b1, b2, b3, x, y, z) == 0) {
                  return false;
                }
              }
      }
    return true;
  };

  std::atomic<std::size_t> nodes{0};
  auto to_table = [&](const std::vector<long>& v) {
    Table t(nb, nx);
    for (std::size_t i = 0; i < v.size(); ++i) {
      t(i / nx, i % nx) = static_cast<Element>(v[i]);
    }
    return t;
  };

  auto run = [&](std::optional<Element> first) {
    std::vector<StrongExternalAction> out;
    std::vector<long> f = f0, g = g0;
    detail::ActionEval ev{B, X, f, g};
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (++nodes > opt.budget) {
        throw BudgetExceeded(opt.budget);
      }
      if (!partial_ok(ev)) {
        return;
      }
      if (k == cells.size()) {
        for (auto const& r : rules) {
          if (detail::first_violation(ev, r)) {
            return;
          }
        }
        Table ft = to_table(f), gt = to_table(g);
        auto cert = action_certificates(B, X, ft, gt);
        out.push_back({B, X, std::move(ft), std::move(gt), cert});
        return;
      }
      auto [is_g, idx] = cells[k];
      auto& slot = is_g ? g[idx] : f[idx];
      Element lo = 0, hi = nx;
      if (k == 0 && first) {
        lo = *first;
        hi = *first + 1;
      }
      for (Element v = lo; v < hi; ++v) {
        slot = v;
        self(self, k + 1);
      }
      slot = -1;
    };
    rec(rec, 0);
    return out;
  };

  if (cells.empty()) {
    return run(std::nullopt);
  }
  auto parts = parallel_map(nx, opt.jobs, [&](std::size_t v) {
    return run(static_cast<Element>(v));
  });
  std::vector<StrongExternalAction> out;
  for (auto& p : parts) {
    for (auto& a : p) {
      out.push_back(std::move(a));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Restriction, and the MV / Goedel special cases
// ---------------------------------------------------------------------------

// f'(b', x) = f(phi(b'), x), likewise for g.
inline StrongExternalAction restrict_action(const StrongExternalAction& a,
                                            const Homomorphism& phi) {
  if (!(phi.target == a.B)) {
    throw PreconditionUnmet("restriction: codomain of phi is not B");
  }
  auto const& Bp = phi.source;
  Table f(Bp.order(), a.X.order()), g(Bp.order(), a.X.order());
  for (Element b = 0; b < Bp.order(); ++b) {
    for (Element x = 0; x < a.X.order(); ++x) {
      f(b, x) = a.f(phi(b), x);
      g(b, x) = a.g(phi(b), x);
    }
  }
  try {
    return validate_action(Bp, a.X, std::move(f), std::move(g));
  } catch (const AxiomViolation& v) {
    throw ValidationFailure(std::string("restriction is not an action: ") +
                            v.what());
  }
}

// In a strong extension of bounded Wajsberg hoops whose section keeps the
// bottom, every a equals s(p(a)).
inline PropertyReport mv_trivialization_check(const SplitExtension& e) {
  if (!e.strong) {
    throw PreconditionUnmet("extension is not strong");
  }
  if (!e.A.bounded() || !e.B.bounded() || !e.A.in(Variety::wajsberg) ||
      !e.B.in(Variety::wajsberg)) {
    throw PreconditionUnmet("A and B must be bounded Wajsberg hoops");
  }
  if (e.s(*e.B.bottom()) != *e.A.bottom()) {
    throw PreconditionUnmet("section does not preserve the bottom");
  }
  PropertyReport r;
  for (Element a = 0; a < e.A.order(); ++a) {
    ++r.checked;
    if (e.sp(a) != a) {
      r.fail(make_witness("a=sp(a)", {{"a", a}}));
    }
  }
  return r;
}

// mu of a basic action between Goedel hoops is idempotent.
inline PropertyReport godel_closure_check(const StrongExternalAction& a) {
  if (!a.B.in(Variety::godel) || !a.X.in(Variety::godel)) {
    throw PreconditionUnmet("B and X must be Goedel hoops");
  }
  if (!a.cert.basic) {
    throw PreconditionUnmet("action lacks the basic certificate");
  }
  auto const Y = mu(a).A;
  PropertyReport r;
  for (Element x = 0; x < Y.order(); ++x) {
    ++r.checked;
    if (Y.mul(x, x) != x) {
      r.fail(make_witness("idempotent", {{"x", x}}));
    }
  }
  return r;
}

}  // namespace hoopforge
