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
#include <utility>
#include <vector>

#include "hoopforge/action.hpp"
#include "hoopforge/error.hpp"
#include "hoopforge/extension.hpp"
#include "hoopforge/hoop.hpp"
#include "hoopforge/report.hpp"

namespace hoopforge {

// Implication-only algebra (->, 1).
struct FiniteLAlgebra {
  std::size_t order = 0;
  Element unit = 0;
  Table imp;
  std::string name;

  Element operator()(Element x, Element y) const { return imp(x, y); }
  friend bool operator==(const FiniteLAlgebra& a, const FiniteLAlgebra& b) {
    return a.order == b.order && a.unit == b.unit && a.imp == b.imp;
  }
};

inline std::optional<Witness> check_lalgebra_axioms(std::size_t n, Element u,
                                                    const Table& imp) {
  if (n == 0 || imp.rows() != n || imp.cols() != n) {
    throw MalformedTable("implication table must be " + std::to_string(n) +
                         "x" + std::to_string(n));
  }
  if (u >= n) {
    throw IndexOutOfRange("unit " + std::to_string(u) + " out of range");
  }
  for (Element v : imp.data()) {
    if (v >= n) {
      throw IndexOutOfRange("table entry " + std::to_string(v) +
                            " out of range");
    }
  }
  auto const N = static_cast<Element>(n);
  for (Element x = 0; x < N; ++x) {
    if (imp(u, x) != x || imp(x, x) != u || imp(x, u) != u) {
      return make_witness("L1", {{"x", x}});
    }
  }
  for (Element x = 0; x < N; ++x)
    for (Element y = 0; y < N; ++y)
      for (Element z = 0; z < N; ++z) {
        if (imp(imp(x, y), imp(x, z)) != imp(imp(y, x), imp(y, z))) {
          return make_witness("L2", {{"x", x}, {"y", y}, {"z", z}});
        }
      }
  // L3 is a quasi-identity: x->y = y->x = 1 forces x = y.
  for (Element x = 0; x < N; ++x)
    for (Element y = 0; y < N; ++y) {
      if (x != y && imp(x, y) == u && imp(y, x) == u) {
        return make_witness("L3", {{"x", x}, {"y", y}});
      }
    }
  return std::nullopt;
}

inline FiniteLAlgebra validate_lalgebra(std::size_t n, Element unit, Table imp,
                                        std::string name = "") {
  if (auto w = check_lalgebra_axioms(n, unit, imp)) {
    throw AxiomViolation(*w);
  }
  return {n, unit, std::move(imp), std::move(name)};
}

inline FiniteLAlgebra hoop_to_lalgebra(const FiniteHoop& h) {
  return validate_lalgebra(h.order(), h.unit(), h.imp_table(), h.name());
}

// (b, x) -> bx, stored like an action's g table.
struct LOperation {
  FiniteLAlgebra B;
  FiniteLAlgebra X;
  Table op;

  Element operator()(Element b, Element x) const { return op(b, x); }
};

inline std::optional<Witness> check_operates(const FiniteLAlgebra& B,
                                             const FiniteLAlgebra& X,
                                             const Table& op) {
  if (op.rows() != B.order || op.cols() != X.order) {
    throw MalformedTable("operation table must be " +
                         std::to_string(B.order) + "x" +
                         std::to_string(X.order));
  }
  for (Element v : op.data()) {
    if (v >= X.order) {
      throw IndexOutOfRange("operation entry " + std::to_string(v) +
                            " out of range");
    }
  }
  auto const nb = static_cast<Element>(B.order);
  auto const nx = static_cast<Element>(X.order);
  for (Element b = 0; b < nb; ++b)
    for (Element x = 0; x < nx; ++x)
      for (Element y = 0; y < nx; ++y) {
        if (op(b, X(x, y)) != X(op(b, x), op(b, y))) {
          return make_witness("O1", {{"b", b}, {"x", x}, {"y", y}});
        }
      }
  for (Element b1 = 0; b1 < nb; ++b1)
    for (Element b2 = 0; b2 < nb; ++b2)
      for (Element x = 0; x < nx; ++x) {
        if (op(B(b1, b2), op(b1, x)) != op(B(b2, b1), op(b2, x))) {
          return make_witness("O2", {{"b1", b1}, {"b2", b2}, {"x", x}});
        }
      }
  for (Element x = 0; x < nx; ++x) {
    if (op(B.unit, x) != x) {
      return make_witness("O3", {{"x", x}});
    }
  }
  return std::nullopt;
}

inline LOperation validate_operates(FiniteLAlgebra B, FiniteLAlgebra X,
                                    Table op) {
  if (auto w = check_operates(B, X, op)) {
    throw AxiomViolation(*w);
  }
  return {std::move(B), std::move(X), std::move(op)};
}

// B operates on X through g.
inline LOperation operation_from_action(const StrongExternalAction& a) {
  return validate_operates(hoop_to_lalgebra(a.B), hoop_to_lalgebra(a.X), a.g);
}

// Carrier X x B, (x, b) at index x*|B| + b, with
// (x,b) -> (y,b') = ((b->b')x -> (b'->b)y, b->b').
inline FiniteLAlgebra rump_semidirect(const LOperation& lop) {
  auto const& B = lop.B;
  auto const& X = lop.X;
  auto const nb = static_cast<Element>(B.order);
  auto const n = X.order * B.order;
  Table imp(n, n);
  for (Element x = 0; x < X.order; ++x)
    for (Element b = 0; b < nb; ++b)
      for (Element y = 0; y < X.order; ++y)
        for (Element c = 0; c < nb; ++c) {
          Element const first = X(lop(B(b, c), x), lop(B(c, b), y));
          imp(x * nb + b, y * nb + c) = first * nb + B(b, c);
        }
  try {
    return validate_lalgebra(n, X.unit * nb + B.unit, std::move(imp),
                             X.name + " x| " + B.name);
  } catch (const AxiomViolation& v) {
    throw ValidationFailure(std::string("semidirect product is not an "
                                        "L-algebra: ") +
                            v.what());
  }
}

// a -> s(b) = s(p(a)) -> s(b) for L-algebra maps. p.s must be the identity
// and the three maps must preserve -> and 1.
inline bool lalg_strong_section(const FiniteLAlgebra& X,
                                const FiniteLAlgebra& A,
                                const FiniteLAlgebra& B,
                                const std::vector<Element>& k,
                                const std::vector<Element>& p,
                                const std::vector<Element>& s) {
  if (k.size() != X.order || p.size() != A.order || s.size() != B.order) {
    throw IndexOutOfRange("map sizes do not match the algebras");
  }
  for (Element b = 0; b < B.order; ++b) {
    if (s[b] >= A.order || p[s[b]] != b) {
      throw SectionFailure("p(s(" + std::to_string(b) + ")) != " +
                           std::to_string(b));
    }
  }
  auto preserves = [](const char* name, const FiniteLAlgebra& src,
                      const FiniteLAlgebra& tgt,
                      const std::vector<Element>& m) {
    for (Element v : m) {
      if (v >= tgt.order) {
        throw IndexOutOfRange(std::string(name) + ": value out of range");
      }
    }
    if (m[src.unit] != tgt.unit) {
      throw AxiomViolation(make_witness(std::string(name) + ".unit", {}));
    }
    for (Element x = 0; x < src.order; ++x)
      for (Element y = 0; y < src.order; ++y) {
        if (m[src(x, y)] != tgt(m[x], m[y])) {
          throw AxiomViolation(
              make_witness(std::string(name) + ".imp", {{"x", x}, {"y", y}}));
        }
      }
  };
  preserves("k", X, A, k);
  preserves("p", A, B, p);
  preserves("s", B, A, s);
  for (Element a = 0; a < A.order; ++a)
    for (Element b = 0; b < B.order; ++b) {
      if (A(a, s[b]) != A(s[p[a]], s[b])) {
        return false;
      }
    }
  return true;
}

inline bool lalg_strong_section(const SplitExtension& e) {
  return lalg_strong_section(hoop_to_lalgebra(e.X), hoop_to_lalgebra(e.A),
                             hoop_to_lalgebra(e.B), e.k.map, e.p.map,
                             e.s.map);
}

// ---------------------------------------------------------------------------
// Comparison with the hoop semidirect product
// ---------------------------------------------------------------------------

struct EmbeddingReport {
  std::size_t product_size = 0;  // |X x B|
  std::size_t image_size = 0;
  std::size_t y_prime_size = 0;
  bool injective = true;
  bool image_is_y_prime = true;
  bool imp_isomorphism = true;
  PropertyReport checks;
  bool ok() const { return checks.ok; }
};

namespace detail {

// Rump implication on X x B for the operation b.x = s(b) -> x, read in A.
inline Pair rump_imp(const SplitExtension& e, const std::vector<long>& kinv,
                     Pair u, Pair v) {
  auto const& A = e.A;
  auto const& B = e.B;
  auto [x, b] = u;
  auto [y, c] = v;
  Element const l = A.imp(e.s(B.imp(b, c)), e.k(x));
  Element const r = A.imp(e.s(B.imp(c, b)), e.k(y));
  long const first = kinv[A.imp(l, r)];
  if (first < 0) {
    throw ValidationFailure("Rump implication leaves the kernel");
  }
  return {static_cast<Element>(first), B.imp(b, c)};
}

inline bool in_y_prime(const SplitExtension& e, Element x, Element b) {
  Element const sb = e.s(b);
  return e.A.imp(sb, e.A.mul(sb, e.k(x))) == e.k(x);
}

}  // namespace detail

// a -> (sp(a) -> a, p(a)) into X x B: injective, onto Y', and an
// isomorphism for the Rump implication.
inline EmbeddingReport embedding_check(const SplitExtension& e) {
  if (!e.strong) {
    throw NotStrong();
  }
  EmbeddingReport r;
  auto const& A = e.A;
  auto const nb = e.B.order();
  auto const kinv = e.k_inverse();
  r.product_size = e.X.order() * nb;
  std::vector<Pair> image(A.order());
  std::vector<long> owner(r.product_size, -1);
  for (Element a = 0; a < A.order(); ++a) {
    long const x = kinv[A.imp(e.sp(a), a)];
    if (x < 0) {
      r.injective = false;
      r.checks.fail(make_witness("embed.kernel", {{"a", a}}));
      return r;
    }
    image[a] = {static_cast<Element>(x), e.p(a)};
    auto const slot = image[a].first * nb + image[a].second;
    ++r.checks.checked;
    if (owner[slot] >= 0) {
      r.injective = false;
      r.checks.fail(make_witness("embed.injective", {{"a", a}}));
    } else {
      owner[slot] = a;
      ++r.image_size;
    }
  }
  for (Element x = 0; x < e.X.order(); ++x)
    for (Element b = 0; b < nb; ++b) {
      bool const in_y = detail::in_y_prime(e, x, b);
      r.y_prime_size += in_y;
      ++r.checks.checked;
      if (in_y != (owner[x * nb + b] >= 0)) {
        r.image_is_y_prime = false;
        r.checks.fail(make_witness("embed.image", {{"x", x}, {"b", b}}));
      }
    }
  for (Element a = 0; a < A.order(); ++a)
    for (Element c = 0; c < A.order(); ++c) {
      ++r.checks.checked;
      if (detail::rump_imp(e, kinv, image[a], image[c]) !=
          image[A.imp(a, c)]) {
        r.imp_isomorphism = false;
        r.checks.fail(make_witness("embed.imp", {{"a", a}, {"c", c}}));
      }
    }
  return r;
}

struct CoincidenceReport {
  std::size_t y_prime_size = 0;
  PropertyReport checks;
  bool ok() const { return checks.ok; }
};

// On Y', (s(b->b')->x) -> (s(b'->b)->y) equals s(b'->b) -> (x->y).
inline CoincidenceReport coincidence_check(const SplitExtension& e) {
  if (!e.strong) {
    throw NotStrong();
  }
  CoincidenceReport r;
  auto const& A = e.A;
  auto const& B = e.B;
  auto const kinv = e.k_inverse();
  std::vector<Pair> yp;
  for (Element x = 0; x < e.X.order(); ++x)
    for (Element b = 0; b < B.order(); ++b) {
      if (detail::in_y_prime(e, x, b)) {
        yp.emplace_back(x, b);
      }
    }
  r.y_prime_size = yp.size();
  for (auto const& u : yp)
    for (auto const& v : yp) {
      auto const rump = detail::rump_imp(e, kinv, u, v);
      long const hoop = kinv[A.imp(e.s(B.imp(v.second, u.second)),
                                   A.imp(e.k(u.first), e.k(v.first)))];
      ++r.checks.checked;
      if (hoop < 0 || rump.first != static_cast<Element>(hoop) ||
          rump.second != B.imp(u.second, v.second)) {
        r.checks.fail(make_witness("coincide", {{"x", u.first},
                                                {"b", u.second},
                                                {"y", v.first},
                                                {"b'", v.second}}));
      }
    }
  return r;
}

// If every f_b is the identity then Y' is all of X x B; vacuous otherwise.
inline PropertyReport self_similar_check(const StrongExternalAction& a) {
  PropertyReport r;
  for (Element b = 0; b < a.B.order(); ++b)
    for (Element x = 0; x < a.X.order(); ++x) {
      if (a.f(b, x) != x) {
        return r;
      }
    }
  ++r.checked;
  auto const m = mu_model(a);
  if (m.carrier.size() != a.X.order() * a.B.order()) {
    r.fail(make_witness("self-similar", {{"size", m.carrier.size()}}));
  }
  return r;
}

}  // namespace hoopforge
