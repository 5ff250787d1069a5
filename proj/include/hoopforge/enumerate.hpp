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

#include <atomic>
#include <utility>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hoopforge/error.hpp"
#include "hoopforge/hoop.hpp"
#include "hoopforge/morphology.hpp"
#include "hoopforge/parallel.hpp"

namespace hoopforge {

struct EnumerateOptions {
  std::optional<Variety> variety;  // nothing or Variety::hoop keeps all
  std::size_t budget = kDefaultBudget;
  std::size_t jobs = 1;
};

namespace detail {

// Divisibility order of a commutative monoid table: x <= y iff x = z*y.
inline std::vector<char> divisibility_order(const Table& mul, std::size_t n) {
  std::vector<char> le(n * n, 0);
  for (Element y = 0; y < n; ++y) {
    for (Element z = 0; z < n; ++z) {
      le[mul(z, y) * n + y] = 1;
    }
  }
  return le;
}

// x -> y as the greatest z with z*x <= y, or nothing when some pair has no
// greatest such z (then the monoid is not the reduct of a hoop).
inline std::optional<Table> residuum(const Table& mul, std::size_t n) {
  auto const le = divisibility_order(mul, n);
  Table imp(n, n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      std::optional<Element> best;
      for (Element z = 0; z < n; ++z) {
        if (!le[mul(z, x) * n + y]) {
          continue;
        }
        if (!best || le[*best * n + z]) {
          best = z;
        }
      }
      if (!best) {
        return std::nullopt;
      }
      for (Element z = 0; z < n; ++z) {
        if (le[mul(z, x) * n + y] && !le[z * n + *best]) {
          return std::nullopt;
        }
      }
      imp(x, y) = *best;
    }
  }
  return imp;
}

// A commutative multiplication table under construction; -1 marks an
// empty cell. Associativity is checked only on triples that can see the
// cell just written.
class PartialTable {
 public:
  explicit PartialTable(std::size_t n) : n_(n), m_(n * n, -1) {}

  std::size_t order() const noexcept { return n_; }
  long get(Element a, Element b) const { return m_[a * n_ + b]; }
  void set(Element a, Element b, long v) { m_[a * n_ + b] = m_[b * n_ + a] = v; }

  bool triple_ok(Element a, Element b, Element c) const {
    long const ab = get(a, b);
    long const bc = get(b, c);
    if (ab < 0 || bc < 0) {
      return true;
    }
    long const l = get(static_cast<Element>(ab), c);
    long const r = get(a, static_cast<Element>(bc));
    return l < 0 || r < 0 || l == r;
  }

  bool assoc_ok() const {
    for (Element a = 0; a < n_; ++a) {
      for (Element b = 0; b < n_; ++b) {
        for (Element c = 0; c < n_; ++c) {
          if (!triple_ok(a, b, c)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Triples whose evaluation reads cell (i, j) or (j, i).
  bool assoc_ok_after(Element i, Element j) const {
    for (auto [p, q] : {std::pair{i, j}, std::pair{j, i}}) {
      for (Element t = 0; t < n_; ++t) {
        if (!triple_ok(p, q, t) || !triple_ok(t, p, q)) {
          return false;
        }
      }
      for (Element a = 0; a < n_; ++a) {
        for (Element b = 0; b < n_; ++b) {
          long const v = get(a, b);
          if (v == static_cast<long>(p) &&
              (!triple_ok(a, b, q) || !triple_ok(q, a, b))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Products sit below their factors in the divisibility order, which a
  // hoop needs to be antisymmetric: v = i*j with v != i rules out any
  // filled cell z*v = i (and likewise for j).
  bool order_ok_after(Element i, Element j) const {
    long const v = get(i, j);
    for (Element f : {i, j}) {
      if (static_cast<long>(f) == v) {
        continue;
      }
      for (Element z = 0; z < n_; ++z) {
        if (get(z, static_cast<Element>(v)) == static_cast<long>(f)) {
          return false;
        }
      }
    }
    return true;
  }

  bool consistent_after(Element i, Element j) const {
    return order_ok_after(i, j) && assoc_ok_after(i, j);
  }

  Table table() const {
    Table t(n_, n_);
    for (Element a = 0; a < n_; ++a) {
      for (Element b = 0; b < n_; ++b) {
        t(a, b) = static_cast<Element>(get(a, b));
      }
    }
    return t;
  }

 private:
  std::size_t n_;
  std::vector<long> m_;
};

inline std::vector<Element> table_key(const FiniteHoop& h) {
  std::vector<Element> key = h.mul_table().data();
  auto const& i = h.imp_table().data();
  key.insert(key.end(), i.begin(), i.end());
  return key;
}

inline std::string corpus_name(std::size_t n, std::size_t idx) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "n%zu_%03zu", n, idx);
  return buf;
}

}  // namespace detail

// All hoops of order n up to isomorphism, as canonical forms sorted by
// their (mul, imp) tables. The search fixes the unit at n-1 and the least
// element at 0 (it absorbs everything), fills the remaining symmetric mul
// cells row by row, rejects partial tables that already break
// associativity, and derives the implication as the residuum.
inline std::vector<FiniteHoop> enumerate_hoops(std::size_t n,
                                               EnumerateOptions opt = {}) {
  if (n == 0) {
    throw MalformedTable("order must be positive");
  }
  if (n > 10) {
    throw BudgetExceeded(opt.budget);
  }
  auto const u = static_cast<Element>(n - 1);
  std::vector<std::pair<Element, Element>> cells;
  for (Element i = 1; i + 1 < n; ++i) {
    for (Element j = i; j + 1 < n; ++j) {
      cells.emplace_back(i, j);
    }
  }
  std::atomic<std::size_t> nodes{0};

  // Search below one choice for the first free cell (or the whole space
  // when there is none).
  auto branch = [&](std::size_t first_value) {
    std::vector<std::vector<Element>> found;
    detail::PartialTable m(n);
    for (Element x = 0; x < n; ++x) {
      m.set(x, u, x);
      m.set(x, 0, 0);
    }
    std::vector<int> mentioned(n, 0);
    auto first_fresh = [&](Element v) {
      for (Element w = 1; w < v; ++w) {
        if (mentioned[w] == 0) {
          return false;
        }
      }
      return true;
    };
    auto leaf = [&]() {
      Table mul = m.table();
      auto imp = detail::residuum(mul, n);
      if (!imp) {
        return;
      }
      HoopTables t{n, u, mul, *imp, Element{0}, ""};
      if (check_hoop_axioms(t)) {
        return;
      }
      auto c = canonical_form(validate_hoop(std::move(t)));
      found.push_back(detail::table_key(c));
    };
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (nodes.fetch_add(1, std::memory_order_relaxed) >= opt.budget) {
        throw BudgetExceeded(opt.budget);
      }
      if (k == cells.size()) {
        leaf();
        return;
      }
      auto [i, j] = cells[k];
      Element lo = 0;
      Element hi = u;  // products of non-units are never the unit
      if (k == 0) {
        lo = static_cast<Element>(first_value);
        hi = lo + 1;
      }
      ++mentioned[i];
      ++mentioned[j];
      bool fresh_tried = false;
      for (Element v = lo; v < hi; ++v) {
        // elements no filled cell mentions yet are interchangeable; the
        // first one stands for all of them
        bool const fresh = v != 0 && mentioned[v] == 0;
        if (fresh && (fresh_tried || !first_fresh(v))) {
          continue;
        }
        fresh_tried |= fresh;
        m.set(i, j, v);
        ++mentioned[v];
        if (m.consistent_after(i, j)) {
          self(self, k + 1);
        }
        --mentioned[v];
      }
      m.set(i, j, -1);
      --mentioned[i];
      --mentioned[j];
    };
    rec(rec, 0);
    return found;
  };

  std::size_t const top = cells.empty() ? 1 : u;
  auto parts = parallel_map(top, opt.jobs, branch);

  std::set<std::vector<Element>> keys;
  for (auto& p : parts) {
    keys.insert(p.begin(), p.end());
  }
  std::vector<FiniteHoop> out;
  std::size_t idx = 0;
  for (auto const& key : keys) {
    HoopTables t{n, u, Table(n, n), Table(n, n), std::nullopt, ""};
    for (std::size_t c = 0; c < n * n; ++c) {
      t.mul(c / n, c % n) = key[c];
      t.imp(c / n, c % n) = key[n * n + c];
    }
    // canonical forms move the unit last but the least element anywhere
    FiniteHoop h = validate_hoop(t);
    h = with_bottom(h, least_element(h))
            .renamed(detail::corpus_name(n, idx++));
    // names are assigned before filtering so they do not depend on it
    if (opt.variety && !h.in(*opt.variety)) {
      continue;
    }
    out.push_back(std::move(h));
  }
  return out;
}

inline std::vector<FiniteHoop> enumerate_hoops(std::size_t n,
                                               std::optional<Variety> v) {
  EnumerateOptions opt;
  opt.variety = v;
  return enumerate_hoops(n, opt);
}

// All hoops of order 1..max_order, concatenated in order.
inline std::vector<FiniteHoop> enumerate_corpus(std::size_t max_order,
                                                EnumerateOptions opt = {}) {
  std::vector<FiniteHoop> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    auto part = enumerate_hoops(n, opt);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace hoopforge
