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
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hoopforge/error.hpp"
#include "hoopforge/hoop.hpp"

namespace hoopforge {

struct Homomorphism {
  FiniteHoop source;
  FiniteHoop target;
  std::vector<Element> map;

  Element operator()(Element x) const { return map[x]; }
};

struct HomCheck {
  bool ok = true;
  std::optional<Witness> witness;
  explicit operator bool() const noexcept { return ok; }
};

// Pointwise check that `map` preserves unit, multiplication and implication
// (and the bottom, when `bounded` is set).
inline HomCheck is_homomorphism(const FiniteHoop& source,
                                const FiniteHoop& target,
                                const std::vector<Element>& map,
                                bool bounded = false) {
  if (map.size() != source.order()) {
    throw IndexOutOfRange("map has " + std::to_string(map.size()) +
                          " entries for a source of order " +
                          std::to_string(source.order()));
  }
  for (Element v : map) {
    check_index(target, v);
  }
  if (map[source.unit()] != target.unit()) {
    return {false, make_witness("unit", {})};
  }
  if (bounded) {
    if (!source.bottom() || !target.bottom()) {
      throw NotBounded();
    }
    if (map[*source.bottom()] != *target.bottom()) {
      return {false, make_witness("bottom", {})};
    }
  }
  auto const n = static_cast<Element>(source.order());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (map[source.mul(x, y)] != target.mul(map[x], map[y])) {
        return {false, make_witness("mul", {{"x", x}, {"y", y}})};
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (map[source.imp(x, y)] != target.imp(map[x], map[y])) {
        return {false, make_witness("imp", {{"x", x}, {"y", y}})};
      }
    }
  }
  return {};
}

inline Homomorphism make_homomorphism(const FiniteHoop& source,
                                      const FiniteHoop& target,
                                      std::vector<Element> map,
                                      bool bounded = false) {
  if (auto c = is_homomorphism(source, target, map, bounded); !c) {
    throw AxiomViolation(*c.witness);
  }
  return Homomorphism{source, target, std::move(map)};
}

inline Homomorphism identity_hom(const FiniteHoop& h) {
  std::vector<Element> map(h.order());
  for (Element x = 0; x < h.order(); ++x) {
    map[x] = x;
  }
  return Homomorphism{h, h, std::move(map)};
}

// g after f.
inline Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  std::vector<Element> map(f.map.size());
  for (std::size_t x = 0; x < map.size(); ++x) {
    map[x] = g.map[f.map[x]];
  }
  return Homomorphism{f.source, g.target, std::move(map)};
}

inline bool is_injective(const std::vector<Element>& map) {
  std::vector<Element> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

// ---------------------------------------------------------------------------
// Filters and congruences
// ---------------------------------------------------------------------------

// Upward-closed submonoid, stored as a sorted member list.
struct Filter {
  std::vector<Element> members;

  bool contains(Element x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }

  friend bool operator==(const Filter&, const Filter&) = default;
  friend auto operator<=>(const Filter& a, const Filter& b) {
    if (a.members.size() != b.members.size()) {
      return a.members.size() <=> b.members.size();
    }
    return a.members <=> b.members;
  }
};

inline std::optional<Witness> check_filter(const FiniteHoop& h,
                                           const std::vector<Element>& members) {
  std::vector<bool> in(h.order(), false);
  for (Element x : members) {
    check_index(h, x);
    in[x] = true;
  }
  if (!in[h.unit()]) {
    return make_witness("unit", {});
  }
  for (Element x = 0; x < h.order(); ++x) {
    for (Element y = 0; y < h.order(); ++y) {
      if (in[x] && in[y] && !in[h.mul(x, y)]) {
        return make_witness("mul-closed", {{"x", x}, {"y", y}});
      }
      if (in[x] && !in[y] && h.imp(x, y) == h.unit()) {
        return make_witness("upward-closed", {{"x", x}, {"y", y}});
      }
    }
  }
  return std::nullopt;
}

inline Filter make_filter(const FiniteHoop& h, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (auto w = check_filter(h, members)) {
    throw NotAFilter("not a filter: " + w->str());
  }
  return Filter{std::move(members)};
}

inline Filter kernel(const Homomorphism& f) {
  std::vector<Element> members;
  for (Element x = 0; x < f.source.order(); ++x) {
    if (f.map[x] == f.target.unit()) {
      members.push_back(x);
    }
  }
  if (auto w = check_filter(f.source, members)) {
    throw ValidationFailure("kernel is not a filter: " + w->str());
  }
  return Filter{std::move(members)};
}

// Smallest filter containing `seed`: upward closure of all finite products.
inline Filter generated_filter(const FiniteHoop& h,
                               const std::vector<Element>& seed) {
  std::vector<bool> in(h.order(), false);
  in[h.unit()] = true;
  for (Element s : seed) {
    check_index(h, s);
    in[s] = true;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element x = 0; x < h.order(); ++x) {
      if (!in[x]) {
        continue;
      }
      for (Element y = 0; y < h.order(); ++y) {
        if (in[y] && !in[h.mul(x, y)]) {
          in[h.mul(x, y)] = true;
          changed = true;
        }
        if (!in[y] && h.imp(x, y) == h.unit()) {
          in[y] = true;
          changed = true;
        }
      }
    }
  }
  Filter f;
  for (Element x = 0; x < h.order(); ++x) {
    if (in[x]) {
      f.members.push_back(x);
    }
  }
  return f;
}

inline std::vector<Filter> filters_by_subsets(const FiniteHoop& h) {
  auto const n = h.order();
  if (n > 20) {
    throw BudgetExceeded(std::size_t{1} << 20);
  }
  std::vector<Filter> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (!(mask >> h.unit() & 1U)) {
      continue;
    }
    std::vector<Element> members;
    for (Element x = 0; x < n; ++x) {
      if (mask >> x & 1U) {
        members.push_back(x);
      }
    }
    if (!check_filter(h, members)) {
      out.push_back(Filter{std::move(members)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every filter is a join of principal filters, so closing {1} under
// "add one element and regenerate" reaches all of them.
inline std::vector<Filter> filters_by_closure(const FiniteHoop& h) {
  std::set<Filter> seen;
  std::vector<Filter> frontier{generated_filter(h, {})};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Filter> next;
    for (auto const& f : frontier) {
      for (Element x = 0; x < h.order(); ++x) {
        if (f.contains(x)) {
          continue;
        }
        auto seed = f.members;
        seed.push_back(x);
        Filter g = generated_filter(h, seed);
        if (seen.insert(g).second) {
          next.push_back(std::move(g));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// Sorted by size, then lexicographically by members.
inline std::vector<Filter> filters(const FiniteHoop& h) {
  return h.order() <= 6 ? filters_by_subsets(h) : filters_by_closure(h);
}

// Partition of the carrier; class ids are numbered by first occurrence.
struct Congruence {
  std::vector<Element> class_of;

  std::size_t class_count() const {
    return class_of.empty()
               ? 0
               : *std::max_element(class_of.begin(), class_of.end()) + 1;
  }

  std::vector<std::vector<Element>> classes() const {
    std::vector<std::vector<Element>> out(class_count());
    for (Element x = 0; x < class_of.size(); ++x) {
      out[class_of[x]].push_back(x);
    }
    return out;
  }

  friend bool operator==(const Congruence&, const Congruence&) = default;
};

inline Congruence normalize_partition(const std::vector<Element>& labels) {
  std::map<Element, Element> renum;
  Congruence c;
  for (Element l : labels) {
    auto [it, inserted] =
        renum.emplace(l, static_cast<Element>(renum.size()));
    c.class_of.push_back(it->second);
  }
  return c;
}

inline std::optional<Witness> check_congruence(const FiniteHoop& h,
                                               const Congruence& c) {
  if (c.class_of.size() != h.order()) {
    throw IndexOutOfRange("partition does not cover the carrier");
  }
  auto const& k = c.class_of;
  auto const n = static_cast<Element>(h.order());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (k[x] != k[y]) {
        continue;
      }
      for (Element z = 0; z < n; ++z) {
        if (k[h.mul(x, z)] != k[h.mul(y, z)]) {
          return make_witness("mul", {{"x", x}, {"y", y}, {"z", z}});
        }
        if (k[h.imp(x, z)] != k[h.imp(y, z)] ||
            k[h.imp(z, x)] != k[h.imp(z, y)]) {
          return make_witness("imp", {{"x", x}, {"y", y}, {"z", z}});
        }
      }
    }
  }
  return std::nullopt;
}

// x ~ y iff (x -> y) * (y -> x) lies in F.
inline Congruence congruence_of_filter(const FiniteHoop& h, const Filter& f) {
  if (auto w = check_filter(h, f.members)) {
    throw NotAFilter("not a filter: " + w->str());
  }
  auto const n = static_cast<Element>(h.order());
  std::vector<Element> label(n);
  for (Element x = 0; x < n; ++x) {
    label[x] = x;
    for (Element y = 0; y < x; ++y) {
      if (f.contains(h.mul(h.imp(x, y), h.imp(y, x)))) {
        label[x] = label[y];
        break;
      }
    }
  }
  Congruence c = normalize_partition(label);
  // The relation must be an equivalence; compare against the pairwise test.
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      bool const related = f.contains(h.mul(h.imp(x, y), h.imp(y, x)));
      if (related != (c.class_of[x] == c.class_of[y])) {
        throw ValidationFailure("filter relation is not an equivalence");
      }
    }
  }
  if (auto w = check_congruence(h, c)) {
    throw ValidationFailure("filter relation is not compatible: " + w->str());
  }
  return c;
}

// The class of the unit.
inline Filter filter_of_congruence(const FiniteHoop& h, const Congruence& c) {
  if (auto w = check_congruence(h, c)) {
    throw NotACongruence("not a congruence: " + w->str());
  }
  Filter f;
  for (Element x = 0; x < h.order(); ++x) {
    if (c.class_of[x] == c.class_of[h.unit()]) {
      f.members.push_back(x);
    }
  }
  return f;
}

struct Quotient {
  FiniteHoop hoop;
  Homomorphism projection;
};

// H/F with classes numbered by first occurrence.
inline Quotient quotient(const FiniteHoop& h, const Filter& f) {
  Congruence c = congruence_of_filter(h, f);
  auto const classes = c.classes();
  auto const m = classes.size();
  HoopTables t{m, c.class_of[h.unit()], Table(m, m), Table(m, m),
               std::nullopt, h.name() + "/F"};
  if (h.bottom()) {
    t.bottom = c.class_of[*h.bottom()];
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      t.mul(a, b) = c.class_of[h.mul(classes[a][0], classes[b][0])];
      t.imp(a, b) = c.class_of[h.imp(classes[a][0], classes[b][0])];
    }
  }
  FiniteHoop q = validate_hoop(std::move(t));
  Homomorphism proj = make_homomorphism(h, q, c.class_of);
  if (kernel(proj) != f) {
    throw ValidationFailure("kernel of the projection differs from F");
  }
  return Quotient{std::move(q), std::move(proj)};
}

// ---------------------------------------------------------------------------
// Homomorphism search, isomorphism, canonical form
// ---------------------------------------------------------------------------

inline constexpr std::size_t kDefaultBudget = 100'000'000;

namespace detail {

// Backtracking over maps source -> target. Pinned entries are fixed up
// front; the remaining source elements are assigned in index order. Every
// partial assignment is checked on all pairs whose operands and results
// are already assigned.
// `allowed(x, v)`, when given, restricts the candidates for x.
template <typename Visit>
void search_homs(const FiniteHoop& s, const FiniteHoop& t,
                 std::vector<long> pinned, bool injective, bool bounded,
                 std::size_t budget, Visit&& visit,
                 const std::function<bool(Element, Element)>& allowed = {}) {
  auto const n = s.order();
  if (pinned.size() != n) {
    pinned.assign(n, -1);
  }
  auto const pin = [&](Element x, Element v) {
    if (pinned[x] >= 0 && pinned[x] != static_cast<long>(v)) {
      return false;
    }
    pinned[x] = v;
    return true;
  };
  if (!pin(s.unit(), t.unit())) {
    return;
  }
  if (bounded) {
    if (!s.bottom() || !t.bottom()) {
      throw NotBounded();
    }
    if (!pin(*s.bottom(), *t.bottom())) {
      return;
    }
  }
  if (allowed) {
    for (Element x = 0; x < n; ++x) {
      if (pinned[x] >= 0 && !allowed(x, static_cast<Element>(pinned[x]))) {
        return;
      }
    }
  }
  std::vector<long> map = pinned;
  std::vector<Element> order;
  for (Element x = 0; x < n; ++x) {
    if (map[x] < 0) {
      order.push_back(x);
    }
  }
  std::vector<bool> used(t.order(), false);
  if (injective) {
    for (long v : map) {
      if (v >= 0) {
        if (used[static_cast<std::size_t>(v)]) {
          return;
        }
        used[static_cast<std::size_t>(v)] = true;
      }
    }
  }
  std::size_t nodes = 0;
  auto consistent = [&]() {
    for (Element x = 0; x < n; ++x) {
      if (map[x] < 0) {
        continue;
      }
      for (Element y = 0; y < n; ++y) {
        if (map[y] < 0) {
          continue;
        }
        auto const fx = static_cast<Element>(map[x]);
        auto const fy = static_cast<Element>(map[y]);
        long const m = map[s.mul(x, y)];
        if (m >= 0 && static_cast<Element>(m) != t.mul(fx, fy)) {
          return false;
        }
        long const i = map[s.imp(x, y)];
        if (i >= 0 && static_cast<Element>(i) != t.imp(fx, fy)) {
          return false;
        }
      }
    }
    return true;
  };
  if (!consistent()) {
    return;
  }
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (stop) {
      return;
    }
    if (++nodes > budget) {
      throw BudgetExceeded(budget);
    }
    if (depth == order.size()) {
      std::vector<Element> out(n);
      for (Element x = 0; x < n; ++x) {
        out[x] = static_cast<Element>(map[x]);
      }
      stop = !visit(out);
      return;
    }
    Element const x = order[depth];
    for (Element v = 0; v < t.order() && !stop; ++v) {
      if ((injective && used[v]) || (allowed && !allowed(x, v))) {
        continue;
      }
      map[x] = v;
      if (injective) {
        used[v] = true;
      }
      if (consistent()) {
        self(self, depth + 1);
      }
      if (injective) {
        used[v] = false;
      }
      map[x] = -1;
    }
  };
  rec(rec, 0);
}

}  // namespace detail

inline std::vector<Homomorphism> all_homs(const FiniteHoop& source,
                                          const FiniteHoop& target,
                                          bool bounded = false,
                                          std::size_t budget = kDefaultBudget) {
  std::vector<Homomorphism> out;
  detail::search_homs(source, target, {}, false, bounded, budget,
                      [&](const std::vector<Element>& m) {
                        out.push_back(Homomorphism{source, target, m});
                        return true;
                      });
  return out;
}

inline std::optional<Homomorphism> iso(const FiniteHoop& a,
                                       const FiniteHoop& b,
                                       std::size_t budget = kDefaultBudget) {
  // Bottoms are least elements, which every isomorphism preserves, so the
  // constant itself is not compared.
  if (a.order() != b.order()) {
    return std::nullopt;
  }
  auto const& ra = a.varieties();
  auto const& rb = b.varieties();
  if (ra.is_basic != rb.is_basic || ra.is_wajsberg != rb.is_wajsberg ||
      ra.is_godel != rb.is_godel || ra.is_product != rb.is_product) {
    return std::nullopt;
  }
  std::optional<Homomorphism> found;
  detail::search_homs(a, b, {}, true, false, budget,
                      [&](const std::vector<Element>& m) {
                        found = Homomorphism{a, b, m};
                        return false;
                      });
  return found;
}

// Lexicographically least (mul, imp) pair over all relabelings that send
// the unit to index n-1. Returns the relabeling old -> new as well.
struct CanonicalForm {
  FiniteHoop hoop;
  std::vector<Element> relabeling;
};

inline CanonicalForm canonical_form_with_map(const FiniteHoop& h) {
  auto const n = h.order();
  if (n > 11) {
    throw BudgetExceeded(kDefaultBudget);
  }
  // slots[new] = old for the first n-1 positions.
  std::vector<Element> slots;
  for (Element x = 0; x < n; ++x) {
    if (x != h.unit()) {
      slots.push_back(x);
    }
  }
  std::vector<Element> perm(n);  // old -> new
  std::vector<Element> best_key;
  std::vector<Element> best_perm;
  std::vector<Element> key;
  key.reserve(2 * n * n);
  do {
    for (Element i = 0; i + 1 < n; ++i) {
      perm[slots[i]] = i;
    }
    perm[h.unit()] = static_cast<Element>(n - 1);
    // inv[new] = old
    auto old_of = [&](Element nw) {
      return nw + 1 == n ? h.unit() : slots[nw];
    };
    key.clear();
    bool worse = false;
    bool better = best_key.empty();
    for (int pass = 0; pass < 2 && !worse; ++pass) {
      for (Element r = 0; r < n && !worse; ++r) {
        for (Element c = 0; c < n; ++c) {
          Element const o = pass == 0 ? h.mul(old_of(r), old_of(c))
                                      : h.imp(old_of(r), old_of(c));
          Element const v = perm[o];
          if (!better) {
            Element const b = best_key[key.size()];
            if (v > b) {
              worse = true;
              break;
            }
            if (v < b) {
              better = true;
            }
          }
          key.push_back(v);
        }
      }
    }
    if (!worse && better) {
      best_key = key;
      best_perm = perm;
    }
  } while (std::next_permutation(slots.begin(), slots.end()));
  return CanonicalForm{relabel(h, best_perm), best_perm};
}

inline FiniteHoop canonical_form(const FiniteHoop& h) {
  return canonical_form_with_map(h).hoop;
}

}  // namespace hoopforge
