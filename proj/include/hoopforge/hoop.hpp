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
#include <string_view>
#include <utility>
#include <vector>

#include "hoopforge/error.hpp"
#include "hoopforge/table.hpp"

// Define HOOPFORGE_SELF_CHECK to cross-check order-theoretic queries against
// their brute-force characterisations on every call.
#ifdef HOOPFORGE_SELF_CHECK
#define HOOPFORGE_SELF_ASSERT(cond, msg)                         \
  do {                                                           \
    if (!(cond)) {                                               \
      throw ::hoopforge::ValidationFailure(std::string("self-check: ") + (msg)); \
    }                                                            \
  } while (false)
#else
#define HOOPFORGE_SELF_ASSERT(cond, msg) \
  do {                                   \
  } while (false)
#endif

namespace hoopforge {

enum class Variety { hoop, basic, wajsberg, godel, product };

inline std::string_view to_string(Variety v) {
  switch (v) {
    case Variety::hoop:
      return "hoop";
    case Variety::basic:
      return "basic";
    case Variety::wajsberg:
      return "wajsberg";
    case Variety::godel:
      return "godel";
    case Variety::product:
      return "product";
  }
  return "?";
}

inline Variety parse_variety(std::string_view s) {
  for (Variety v : {Variety::hoop, Variety::basic, Variety::wajsberg,
                    Variety::godel, Variety::product}) {
    if (to_string(v) == s) {
      return v;
    }
  }
  throw UnsupportedVariety("unknown variety '" + std::string(s) + "'");
}

// Unvalidated operation tables, as read from a file or built by a
// construction.
struct HoopTables {
  std::size_t order = 0;
  Element unit = 0;
  Table mul;
  Table imp;
  std::optional<Element> bottom;
  std::string name;
};

struct VarietyReport {
  bool is_hoop = false;
  bool is_bounded = false;
  bool is_basic = false;
  bool is_wajsberg = false;
  bool is_godel = false;
  bool is_product = false;
  std::optional<bool> is_involutive;
  // First failing assignment of each defining identity that does not hold,
  // in the order basic, wajsberg, idempotency, product, involutivity.
  std::vector<Witness> failures;

  std::optional<Witness> counterexample() const {
    if (failures.empty()) {
      return std::nullopt;
    }
    return failures.front();
  }

  bool in(Variety v) const {
    switch (v) {
      case Variety::hoop:
        return is_hoop;
      case Variety::basic:
        return is_basic;
      case Variety::wajsberg:
        return is_wajsberg;
      case Variety::godel:
        return is_godel;
      case Variety::product:
        return is_product;
    }
    return false;
  }

  friend bool operator==(const VarietyReport&, const VarietyReport&) = default;
};

class FiniteHoop;
FiniteHoop validate_hoop(HoopTables tables);

// A finite hoop given by its operation tables. Instances only come out of
// validate_hoop, so every FiniteHoop satisfies the hoop axioms.
class FiniteHoop {
 public:
  std::size_t order() const noexcept { return order_; }
  Element unit() const noexcept { return unit_; }
  std::optional<Element> bottom() const noexcept { return bottom_; }
  bool bounded() const noexcept { return bottom_.has_value(); }
  const std::string& name() const noexcept { return name_; }

  Element mul(Element x, Element y) const { return mul_(x, y); }
  Element imp(Element x, Element y) const { return imp_(x, y); }

  const Table& mul_table() const noexcept { return mul_; }
  const Table& imp_table() const noexcept { return imp_; }

  const VarietyReport& varieties() const noexcept { return report_; }
  bool in(Variety v) const { return report_.in(v); }

  Element element(std::size_t i) const {
    if (i >= order_) {
      throw IndexOutOfRange("element " + std::to_string(i) +
                            " out of range for order " +
                            std::to_string(order_));
    }
    return static_cast<Element>(i);
  }

  HoopTables tables() const {
    return HoopTables{order_, unit_, mul_, imp_, bottom_, name_};
  }

  FiniteHoop renamed(std::string name) const {
    FiniteHoop h = *this;
    h.name_ = std::move(name);
    return h;
  }

  // Structural equality; the name is a label and does not participate.
  friend bool operator==(const FiniteHoop& a, const FiniteHoop& b) {
    return a.order_ == b.order_ && a.unit_ == b.unit_ &&
           a.bottom_ == b.bottom_ && a.mul_ == b.mul_ && a.imp_ == b.imp_;
  }

 private:
  friend FiniteHoop validate_hoop(HoopTables tables);
  FiniteHoop() = default;

  std::size_t order_ = 0;
  Element unit_ = 0;
  std::optional<Element> bottom_;
  Table mul_;
  Table imp_;
  std::string name_;
  VarietyReport report_;
};

namespace detail {

inline void check_shape(const HoopTables& t) {
  auto const n = t.order;
  if (n == 0) {
    throw MalformedTable("order must be positive");
  }
  if (t.unit >= n) {
    throw MalformedTable("unit index out of range");
  }
  if (t.bottom && *t.bottom >= n) {
    throw MalformedTable("bottom index out of range");
  }
  for (auto const* tab : {&t.mul, &t.imp}) {
    if (tab->rows() != n || tab->cols() != n) {
      throw MalformedTable("operation table must be " + std::to_string(n) +
                           "x" + std::to_string(n));
    }
    for (Element e : tab->data()) {
      if (e >= n) {
        throw MalformedTable("table entry " + std::to_string(e) +
                             " out of range");
      }
    }
  }
}

}  // namespace detail

// Returns the first violated axiom, or nothing if the tables form a hoop
// (bounded, when a bottom is given). Throws MalformedTable on bad shapes.
inline std::optional<Witness> check_hoop_axioms(const HoopTables& t) {
  detail::check_shape(t);
  auto const n = t.order;
  auto const& m = t.mul;
  auto const& i = t.imp;
  auto const u = t.unit;
  for (Element x = 0; x < n; ++x) {
    if (m(x, u) != x || m(u, x) != x) {
      return make_witness("i.unit", {{"x", x}});
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (m(x, y) != m(y, x)) {
        return make_witness("i.comm", {{"x", x}, {"y", y}});
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (m(m(x, y), z) != m(x, m(y, z))) {
          return make_witness("i.assoc", {{"x", x}, {"y", y}, {"z", z}});
        }
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (i(x, x) != u) {
      return make_witness("ii", {{"x", x}});
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (m(x, i(x, y)) != m(y, i(y, x))) {
        return make_witness("iii", {{"x", x}, {"y", y}});
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (i(m(x, y), z) != i(x, i(y, z))) {
          return make_witness("iv", {{"x", x}, {"y", y}, {"z", z}});
        }
      }
    }
  }
  if (t.bottom) {
    for (Element x = 0; x < n; ++x) {
      if (i(*t.bottom, x) != u) {
        return make_witness("v", {{"x", x}});
      }
    }
  }
  // The natural order is a consequence of (i)-(iv); a failure here means
  // the checks above are wrong.
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x != y && i(x, y) == u && i(y, x) == u) {
        return make_witness("order", {{"x", x}, {"y", y}});
      }
    }
  }
  return std::nullopt;
}

VarietyReport classify(const FiniteHoop& h);

inline FiniteHoop validate_hoop(HoopTables tables) {
  if (auto w = check_hoop_axioms(tables)) {
    throw AxiomViolation(*w);
  }
  FiniteHoop h;
  h.order_ = tables.order;
  h.unit_ = tables.unit;
  h.bottom_ = tables.bottom;
  h.mul_ = std::move(tables.mul);
  h.imp_ = std::move(tables.imp);
  h.name_ = std::move(tables.name);
  h.report_ = classify(h);
  return h;
}

inline void check_index(const FiniteHoop& h, Element x) {
  if (x >= h.order()) {
    throw IndexOutOfRange("element " + std::to_string(x) +
                          " out of range for order " +
                          std::to_string(h.order()));
  }
}

// Natural order: x <= y iff x -> y = 1.
inline bool leq(const FiniteHoop& h, Element x, Element y) {
  check_index(h, x);
  check_index(h, y);
  bool const result = h.imp(x, y) == h.unit();
#ifdef HOOPFORGE_SELF_CHECK
  bool divides = false;
  for (Element z = 0; z < h.order() && !divides; ++z) {
    divides = h.mul(z, y) == x;
  }
  HOOPFORGE_SELF_ASSERT(divides == result,
                        "leq disagrees with divisibility order");
#endif
  return result;
}

inline Element meet(const FiniteHoop& h, Element x, Element y) {
  check_index(h, x);
  check_index(h, y);
  Element const m = h.mul(x, h.imp(x, y));
#ifdef HOOPFORGE_SELF_CHECK
  HOOPFORGE_SELF_ASSERT(leq(h, m, x) && leq(h, m, y), "meet is not a bound");
  for (Element z = 0; z < h.order(); ++z) {
    if (leq(h, z, x) && leq(h, z, y)) {
      HOOPFORGE_SELF_ASSERT(leq(h, z, m), "meet is not greatest");
    }
  }
#endif
  return m;
}

inline Element join(const FiniteHoop& h, Element x, Element y) {
  if (!h.varieties().is_basic) {
    throw NotBasic();
  }
  check_index(h, x);
  check_index(h, y);
  Element const j = meet(h, h.imp(h.imp(x, y), y), h.imp(h.imp(y, x), x));
#ifdef HOOPFORGE_SELF_CHECK
  HOOPFORGE_SELF_ASSERT(leq(h, x, j) && leq(h, y, j), "join is not a bound");
  for (Element z = 0; z < h.order(); ++z) {
    if (leq(h, x, z) && leq(h, y, z)) {
      HOOPFORGE_SELF_ASSERT(leq(h, j, z), "join is not least");
    }
  }
#endif
  return j;
}

// x -> 0 in a bounded hoop.
inline Element negation(const FiniteHoop& h, Element x) {
  if (!h.bottom()) {
    throw NotBounded();
  }
  return h.imp(x, *h.bottom());
}

inline VarietyReport classify(const FiniteHoop& h) {
  VarietyReport r;
  r.is_hoop = true;
  r.is_bounded = h.bounded();
  auto const n = static_cast<Element>(h.order());
  auto const u = h.unit();
  auto imp = [&](Element a, Element b) { return h.imp(a, b); };
  auto mul = [&](Element a, Element b) { return h.mul(a, b); };

  r.is_basic = true;
  for (Element x = 0; x < n && r.is_basic; ++x) {
    for (Element y = 0; y < n && r.is_basic; ++y) {
      for (Element z = 0; z < n && r.is_basic; ++z) {
        if (imp(imp(imp(x, y), z), imp(imp(imp(y, x), z), z)) != u) {
          r.is_basic = false;
          r.failures.push_back(
              make_witness("basic", {{"x", x}, {"y", y}, {"z", z}}));
        }
      }
    }
  }

  r.is_wajsberg = true;
  for (Element x = 0; x < n && r.is_wajsberg; ++x) {
    for (Element y = 0; y < n && r.is_wajsberg; ++y) {
      if (imp(imp(x, y), y) != imp(imp(y, x), x)) {
        r.is_wajsberg = false;
        r.failures.push_back(make_witness("wajsberg", {{"x", x}, {"y", y}}));
      }
    }
  }

  bool idempotent = true;
  for (Element x = 0; x < n && idempotent; ++x) {
    if (mul(x, x) != x) {
      idempotent = false;
      r.failures.push_back(make_witness("idempotency", {{"x", x}}));
    }
  }
  r.is_godel = r.is_basic && idempotent;

  // The product identity uses a join, which is only a supremum on basic
  // hoops.
  if (r.is_basic) {
    auto meet_ = [&](Element a, Element b) { return mul(a, imp(a, b)); };
    auto join_ = [&](Element a, Element b) {
      return meet_(imp(imp(a, b), b), imp(imp(b, a), a));
    };
    r.is_product = true;
    for (Element x = 0; x < n && r.is_product; ++x) {
      for (Element y = 0; y < n && r.is_product; ++y) {
        for (Element z = 0; z < n && r.is_product; ++z) {
          if (join_(imp(y, z), imp(imp(y, mul(x, y)), x)) != u) {
            r.is_product = false;
            r.failures.push_back(
                make_witness("product", {{"x", x}, {"y", y}, {"z", z}}));
          }
        }
      }
    }
  }

  if (h.bottom()) {
    Element const zero = *h.bottom();
    bool inv = true;
    for (Element x = 0; x < n && inv; ++x) {
      if (imp(imp(x, zero), zero) != x) {
        inv = false;
        r.failures.push_back(make_witness("involutive", {{"x", x}}));
      }
    }
    r.is_involutive = inv;
  }

  if (r.is_wajsberg && !r.is_basic) {
    throw ValidationFailure("Wajsberg hoop classified as non-basic");
  }
  return r;
}

// The natural-order minimum, which every finite hoop has.
inline Element least_element(const FiniteHoop& h) {
  for (Element x = 0; x < h.order(); ++x) {
    bool least = true;
    for (Element y = 0; y < h.order() && least; ++y) {
      least = h.imp(x, y) == h.unit();
    }
    if (least) {
      return x;
    }
  }
  throw ValidationFailure("finite hoop without a least element");
}

inline FiniteHoop with_bottom(const FiniteHoop& h, std::optional<Element> b) {
  auto t = h.tables();
  t.bottom = b;
  return validate_hoop(std::move(t));
}

inline FiniteHoop terminal_hoop() {
  return validate_hoop(
      HoopTables{1, 0, Table(1, 1, 0), Table(1, 1, 0), Element{0}, "T"});
}

// Restriction of the standard MV-algebra to {0, 1/(n-1), ..., 1}; index k
// stands for k/(n-1).
inline FiniteHoop lukasiewicz_chain(std::size_t n) {
  if (n == 0) {
    throw MalformedTable("chain length must be positive");
  }
  auto const top = static_cast<long>(n - 1);
  HoopTables t{n, static_cast<Element>(top), Table(n, n), Table(n, n),
               Element{0}, "L" + std::to_string(n)};
  for (long x = 0; x <= top; ++x) {
    for (long y = 0; y <= top; ++y) {
      t.mul(x, y) = static_cast<Element>(std::max(x + y - top, 0L));
      t.imp(x, y) = static_cast<Element>(std::min(top - x + y, top));
    }
  }
  return validate_hoop(std::move(t));
}

// Restriction of the standard Goedel algebra to an n-element chain.
inline FiniteHoop godel_chain(std::size_t n) {
  if (n == 0) {
    throw MalformedTable("chain length must be positive");
  }
  auto const top = static_cast<Element>(n - 1);
  HoopTables t{n, top, Table(n, n), Table(n, n), Element{0},
               "G" + std::to_string(n)};
  for (Element x = 0; x <= top; ++x) {
    for (Element y = 0; y <= top; ++y) {
      t.mul(x, y) = std::min(x, y);
      t.imp(x, y) = x <= y ? top : y;
    }
  }
  return validate_hoop(std::move(t));
}

// Pair (i, j) is stored at index i * |H2| + j.
inline FiniteHoop direct_product(const FiniteHoop& h1, const FiniteHoop& h2) {
  auto const n1 = h1.order();
  auto const n2 = h2.order();
  auto const n = n1 * n2;
  auto idx = [n2](Element a, Element b) {
    return static_cast<Element>(a * n2 + b);
  };
  HoopTables t{n, idx(h1.unit(), h2.unit()), Table(n, n), Table(n, n),
               std::nullopt, h1.name() + "x" + h2.name()};
  if (h1.bottom() && h2.bottom()) {
    t.bottom = idx(*h1.bottom(), *h2.bottom());
  }
  for (Element a = 0; a < n1; ++a) {
    for (Element b = 0; b < n2; ++b) {
      for (Element c = 0; c < n1; ++c) {
        for (Element d = 0; d < n2; ++d) {
          t.mul(idx(a, b), idx(c, d)) = idx(h1.mul(a, c), h2.mul(b, d));
          t.imp(idx(a, b), idx(c, d)) = idx(h1.imp(a, c), h2.imp(b, d));
        }
      }
    }
  }
  return validate_hoop(std::move(t));
}

// Relabels h so that old element x becomes perm[x].
inline HoopTables relabel_tables(const FiniteHoop& h,
                                 const std::vector<Element>& perm) {
  auto const n = h.order();
  if (perm.size() != n) {
    throw MalformedTable("permutation has wrong length");
  }
  HoopTables t{n, perm[h.unit()], Table(n, n), Table(n, n), std::nullopt,
               h.name()};
  if (h.bottom()) {
    t.bottom = perm[*h.bottom()];
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      t.mul(perm[x], perm[y]) = perm[h.mul(x, y)];
      t.imp(perm[x], perm[y]) = perm[h.imp(x, y)];
    }
  }
  return t;
}

inline FiniteHoop relabel(const FiniteHoop& h,
                          const std::vector<Element>& perm) {
  return validate_hoop(relabel_tables(h, perm));
}

// Sub-hoop on a subset closed under both operations and containing the unit.
// Members are renumbered in increasing order; the returned vector maps new
// indices back into h. The bottom is kept iff it belongs to the subset.
struct Subhoop {
  FiniteHoop hoop;
  std::vector<Element> embedding;
};

inline Subhoop subhoop(const FiniteHoop& h, std::vector<Element> members,
                       std::string name) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<long> index(h.order(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    check_index(h, members[i]);
    index[members[i]] = static_cast<long>(i);
  }
  if (index[h.unit()] < 0) {
    throw ValidationFailure("subset does not contain the unit");
  }
  auto const n = members.size();
  HoopTables t{n, static_cast<Element>(index[h.unit()]), Table(n, n),
               Table(n, n), std::nullopt, std::move(name)};
  if (h.bottom() && index[*h.bottom()] >= 0) {
    t.bottom = static_cast<Element>(index[*h.bottom()]);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto const m = index[h.mul(members[a], members[b])];
      auto const i = index[h.imp(members[a], members[b])];
      if (m < 0 || i < 0) {
        throw ValidationFailure("subset is not closed under the operations");
      }
      t.mul(a, b) = static_cast<Element>(m);
      t.imp(a, b) = static_cast<Element>(i);
    }
  }
  return Subhoop{validate_hoop(std::move(t)), std::move(members)};
}

}  // namespace hoopforge
