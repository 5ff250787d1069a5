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

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hoopforge/action.hpp"
#include "hoopforge/corpus.hpp"
#include "hoopforge/correspondence.hpp"
#include "hoopforge/extension.hpp"
#include "hoopforge/lalgebra.hpp"
#include "hoopforge/morphology.hpp"
#include "hoopforge/parallel.hpp"
#include "hoopforge/term.hpp"

namespace hoopforge {

inline constexpr const char* kToolVersion = "0.1.0";

inline nlohmann::json to_json(const Witness& w) {
  nlohmann::json b = nlohmann::json::array();
  for (auto const& [name, v] : w.bindings) {
    b.push_back({name, v});
  }
  return {{"rule", w.rule}, {"bindings", b}};
}

struct CheckOutcome {
  std::string name;
  bool pass = true;
  std::optional<Witness> witness;
  std::string error;
  nlohmann::json detail = nlohmann::json::object();
};

struct SuiteOptions {
  std::size_t max_order = 0;  // 0: the suite's own default
  std::size_t jobs = 1;
  std::size_t budget = kDefaultBudget;
  bool oracle = true;
  std::optional<std::string> corpus_dir;
  std::optional<std::string> only;  // run a single named check
};

struct SuiteReport {
  std::string suite;
  std::size_t max_order = 0;
  std::vector<std::string> varieties;
  std::string corpus_source;
  std::vector<CheckOutcome> checks;
  double seconds = 0;

  std::size_t failed() const {
    std::size_t n = 0;
    for (auto const& c : checks) {
      n += !c.pass;
    }
    return n;
  }
  bool ok() const { return failed() == 0; }

  nlohmann::json to_json(bool with_timing = true) const {
    nlohmann::json cs = nlohmann::json::array();
    for (auto const& c : checks) {
      nlohmann::json j{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
      j["witness"] = c.witness ? hoopforge::to_json(*c.witness) : nullptr;
      if (!c.error.empty()) {
        j["error"] = c.error;
      }
      if (!c.pass) {
        j["replay"] = "hoopforge suite " + suite + " --max-order " +
                      std::to_string(max_order) + " --only '" + c.name + "'";
      }
      cs.push_back(std::move(j));
    }
    nlohmann::json out{
        {"suite", suite},
        {"tool_version", kToolVersion},
        {"corpus",
         {{"max_order", max_order},
          {"varieties", varieties},
          {"source", corpus_source}}},
        {"checks", cs},
        {"passed", checks.size() - failed()},
        {"failed", failed()},
        {"ok", ok()}};
    if (with_timing) {
      out["timing"] = {{"seconds", seconds}};
    }
    return out;
  }
};

namespace detail {

using Task = std::pair<std::string, std::function<CheckOutcome()>>;

inline CheckOutcome from_report(const PropertyReport& r) {
  CheckOutcome c;
  c.pass = r.ok;
  if (!r.failures.empty()) {
    c.witness = r.failures.front();
  }
  c.detail["instances"] = r.checked;
  return c;
}

inline std::vector<CheckOutcome> run_tasks(const std::vector<Task>& tasks,
                                           const SuiteOptions& opt) {
  std::vector<const Task*> picked;
  for (auto const& t : tasks) {
    if (!opt.only || *opt.only == t.first) {
      picked.push_back(&t);
    }
  }
  if (opt.only && picked.empty()) {
    throw PreconditionUnmet("no check named '" + *opt.only + "'");
  }
  return parallel_map(picked.size(), opt.jobs, [&](std::size_t i) {
    CheckOutcome c;
    try {
      c = picked[i]->second();
    } catch (const AxiomViolation& e) {
      c.pass = false;
      c.witness = e.witness();
      c.error = e.what();
    } catch (const std::exception& e) {
      c.pass = false;
      c.error = e.what();
    }
    c.name = picked[i]->first;
    return c;
  });
}

inline std::string pair_name(const FiniteHoop& a, const FiniteHoop& b) {
  return a.name() + "/" + b.name();
}

// Restricted growth strings: every partition of {0..n-1} exactly once.
inline void for_each_partition(std::size_t n,
                               const std::function<void(const std::vector<Element>&)>& fn) {
  std::vector<Element> label(n, 0);
  auto rec = [&](auto&& self, std::size_t i, Element used) -> void {
    if (i == n) {
      fn(label);
      return;
    }
    for (Element v = 0; v <= used && v < n; ++v) {
      label[i] = v;
      self(self, i + 1, v == used ? used + 1 : used);
    }
  };
  if (n > 0) {
    label[0] = 0;
    rec(rec, 1, 1);
  }
}

// The DSL evaluator against the native checker: every hoop axiom holds,
// and each variety flag matches its defining identity.
inline PropertyReport dsl_agreement(const FiniteHoop& h) {
  PropertyReport r;
  for (auto const& ni : kHoopAxioms) {
    ++r.checked;
    if (auto res = holds(h, named_identity(ni)); !res) {
      r.fail(*res.counterexample);
    }
  }
  if (h.bounded()) {
    ++r.checked;
    // the DSL's 0 is the least element
    if (auto res = holds(h, named_identity(kBoundedAxiom)); !res) {
      r.fail(*res.counterexample);
    }
  }
  auto const& v = h.varieties();
  auto id = [&](std::string_view name) {
    for (auto const& ni : kVarietyIdentities) {
      if (ni.name == name) {
        return holds(h, named_identity(ni)).holds;
      }
    }
    throw Error("unknown identity");
  };
  bool const basic = id("basic");
  auto flag = [&](const char* name, bool native, bool dsl) {
    ++r.checked;
    if (native != dsl) {
      r.fail(make_witness(std::string("flag.") + name, {}));
    }
  };
  flag("basic", v.is_basic, basic);
  flag("wajsberg", v.is_wajsberg, basic && id("wajsberg"));
  flag("godel", v.is_godel, basic && id("idempotency"));
  if (basic) {
    flag("product", v.is_product, id("product"));
  }
  if (h.bounded()) {
    flag("involutive", v.is_involutive.value_or(false), id("involutive"));
  }
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

inline std::vector<std::string> suite_names() {
  return {"axioms",  "filters",    "general", "bijection", "lattice",
          "double-negation", "godel", "naturality", "lalgebra"};
}

inline std::size_t suite_default_order(const std::string& name) {
  if (name == "axioms") return 16;
  if (name == "filters") return 5;
  if (name == "double-negation") return 8;
  return 3;
}

namespace detail {

inline std::vector<Task> axioms_tasks(std::size_t max_n) {
  std::vector<Task> tasks;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (bool luk : {true, false}) {
      std::string const name = std::string(luk ? "lukasiewicz" : "godel") +
                               "_chain(" + std::to_string(n) + ")";
      tasks.emplace_back(name, [n, luk] {
        auto h = luk ? lukasiewicz_chain(n) : godel_chain(n);
        auto c = from_report(dsl_agreement(h));
        auto const& v = h.varieties();
        bool const cls = v.is_bounded && (luk ? v.is_wajsberg : v.is_godel);
        c.detail["classified"] = cls;
        c.pass = c.pass && cls;
        return c;
      });
    }
  }
  return tasks;
}

inline std::vector<Task> filters_tasks(const std::vector<FiniteHoop>& corpus) {
  std::vector<Task> tasks;
  for (auto const& h : corpus) {
    tasks.emplace_back("filters:" + h.name(), [h] {
      PropertyReport r;
      auto const fs = filters(h);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        auto const& f = fs[i];
        auto const c = congruence_of_filter(h, f);
        ++r.checked;
        if (!(filter_of_congruence(h, c) == f)) {
          r.fail(make_witness("filter.roundtrip", {{"filter", i}}));
        }
        auto const q = quotient(h, f);
        ++r.checked;
        if (!(kernel(q.projection) == f)) {
          r.fail(make_witness("kernel.quotient", {{"filter", i}}));
        }
      }
      // every congruence, found independently of the filters
      std::size_t congruences = 0;
      for_each_partition(h.order(), [&](const std::vector<Element>& lab) {
        auto const c = normalize_partition(lab);
        if (check_congruence(h, c)) {
          return;
        }
        ++congruences;
        ++r.checked;
        if (!(congruence_of_filter(h, filter_of_congruence(h, c)) == c)) {
          r.fail(make_witness("congruence.roundtrip", {}));
        }
      });
      auto out = from_report(r);
      out.detail["filters"] = fs.size();
      out.detail["congruences"] = congruences;
      if (congruences != fs.size()) {
        out.pass = false;
        out.error = "filter and congruence counts differ";
      }
      return out;
    });
  }
  return tasks;
}

inline std::vector<Task> general_tasks(const std::vector<FiniteHoop>& corpus,
                                       std::size_t budget) {
  std::vector<Task> tasks;
  for (auto const& B : corpus) {
    for (auto const& X : corpus) {
      tasks.emplace_back("general:" + pair_name(B, X), [B, X, budget] {
        RawSearchOptions ro;
        ro.max_order = 9;
        ro.budget = budget;
        auto const exts = raw_split_extensions(B, X, ro);
        std::size_t strong = 0;
        std::size_t carrier = 0;
        for (auto const& e : exts) {
          strong += e.strong;
          auto const g = general_semidirect(e);  // throws on any mismatch
          carrier += g.carrier.size();
          if (g.carrier.size() != e.A.order()) {
            throw BijectionFailure("|Y| != |A|");
          }
          if (e.strong && strong_semidirect(e).carrier.size() != e.A.order()) {
            throw BijectionFailure("|Y'| != |A|");
          }
        }
        CheckOutcome c;
        c.detail["extensions"] = exts.size();
        c.detail["strong"] = strong;
        c.detail["carrier_total"] = carrier;
        return c;
      });
    }
  }
  return tasks;
}

inline std::vector<Task> bijection_tasks(const std::vector<FiniteHoop>& corpus,
                                         const SuiteOptions& opt) {
  std::vector<Task> tasks;
  for (auto const& B : corpus) {
    for (auto const& X : corpus) {
      tasks.emplace_back("bijection:" + pair_name(B, X), [B, X, opt] {
        BijectionOptions bo;
        bo.oracle = opt.oracle;
        bo.search.budget = opt.budget;
        auto const r = verify_bijection(B, X, Variety::hoop, bo);
        auto c = from_report(r.checks);
        c.pass = r.ok();
        c.detail["actions"] = r.actions;
        c.detail["extensions"] = r.extensions;
        c.detail["oracle_extensions"] =
            r.oracle_extensions ? nlohmann::json(*r.oracle_extensions)
                                : nlohmann::json(nullptr);
        c.detail["basic_actions"] = r.basic_actions;
        return c;
      });
    }
  }
  return tasks;
}

inline std::vector<Task> lattice_tasks(const std::vector<FiniteHoop>& corpus,
                                       std::size_t budget) {
  std::vector<Task> tasks;
  for (auto const& B : corpus) {
    for (auto const& X : corpus) {
      if (!B.in(Variety::basic) || !X.in(Variety::basic)) {
        continue;
      }
      tasks.emplace_back("lattice:" + pair_name(B, X), [B, X, budget] {
        PropertyReport r;
        std::size_t basic = 0;
        ActionSearchOptions so;
        so.budget = budget;
        for (auto const& a : enumerate_actions(B, X, Variety::hoop, so)) {
          if (!a.cert.basic) {
            continue;
          }
          ++basic;
          r.merge(check_semidirect_formulas(mu_model(a)));
        }
        auto c = from_report(r);
        c.detail["basic_actions"] = basic;
        return c;
      });
    }
  }
  return tasks;
}

inline std::vector<Task> double_negation_tasks(std::size_t max_n) {
  std::vector<Task> tasks;
  auto strong_case = [](std::string name, std::function<FiniteHoop()> make) {
    return Task{"double-negation:" + name, [make] {
                  auto const A = make();
                  auto const e = regular_dense_decomposition(A);
                  CheckOutcome c;
                  c.pass = e.strong;
                  c.detail["mv"] = e.B.order();
                  c.detail["dense"] = e.X.order();
                  return c;
                }};
  };
  tasks.push_back(strong_case("G3", [] { return godel_chain(3); }));
  tasks.push_back(strong_case("G4", [] { return godel_chain(4); }));
  tasks.push_back(strong_case("G3xL2", [] {
    return direct_product(godel_chain(3), lukasiewicz_chain(2));
  }));
  for (std::size_t n = 2; n <= max_n; ++n) {
    tasks.emplace_back("double-negation:L" + std::to_string(n), [n] {
      auto const e = regular_dense_decomposition(lukasiewicz_chain(n));
      auto c = from_report(mv_trivialization_check(e));
      bool const iso = e.B.order() == e.A.order() && e.X.order() == 1;
      c.detail["p_bijective"] = iso;
      c.pass = c.pass && iso && e.strong;
      return c;
    });
  }
  return tasks;
}

inline std::vector<Task> godel_tasks(const std::vector<FiniteHoop>& corpus,
                                     std::size_t budget) {
  std::vector<Task> tasks;
  for (auto const& B : corpus) {
    for (auto const& X : corpus) {
      if (!B.in(Variety::godel) || !X.in(Variety::godel)) {
        continue;
      }
      tasks.emplace_back("godel:" + pair_name(B, X), [B, X, budget] {
        PropertyReport r;
        ActionSearchOptions so;
        so.budget = budget;
        auto const acts = enumerate_actions(B, X, Variety::godel, so);
        for (auto const& a : acts) {
          r.merge(godel_closure_check(a));
        }
        auto c = from_report(r);
        c.detail["actions"] = acts.size();
        return c;
      });
    }
  }
  return tasks;
}

inline std::vector<Task> naturality_tasks(const std::vector<FiniteHoop>& corpus,
                                          std::size_t budget) {
  std::vector<Task> tasks;
  for (auto const& Bp : corpus) {
    for (auto const& B : corpus) {
      tasks.emplace_back(
          "naturality:" + pair_name(Bp, B), [Bp, B, corpus, budget] {
            PropertyReport r;
            std::size_t homs = 0, exts = 0;
            ActionSearchOptions so;
            so.budget = budget;
            for (auto const& phi : all_homs(Bp, B)) {
              ++homs;
              for (auto const& X : corpus) {
                auto const n = verify_naturality(phi, X, Variety::hoop, so);
                exts += n.extensions;
                r.merge(n.checks);
              }
            }
            auto c = from_report(r);
            c.detail["homomorphisms"] = homs;
            c.detail["extensions"] = exts;
            return c;
          });
    }
  }
  return tasks;
}

inline std::vector<Task> lalgebra_tasks(const std::vector<FiniteHoop>& corpus,
                                        const std::vector<FiniteHoop>& reducts,
                                        std::size_t budget) {
  std::vector<Task> tasks;
  tasks.emplace_back("lalgebra:reducts", [reducts] {
    PropertyReport r;
    for (std::size_t i = 0; i < reducts.size(); ++i) {
      auto const& h = reducts[i];
      ++r.checked;
      if (auto w = check_lalgebra_axioms(h.order(), h.unit(), h.imp_table())) {
        r.fail(*w);
      }
    }
    auto c = from_report(r);
    c.detail["hoops"] = reducts.size();
    return c;
  });
  for (auto const& B : corpus) {
    for (auto const& X : corpus) {
      tasks.emplace_back("lalgebra:" + pair_name(B, X), [B, X, budget] {
        PropertyReport r;
        ActionSearchOptions so;
        so.budget = budget;
        auto const acts = enumerate_actions(B, X, Variety::hoop, so);
        std::size_t small = 0;
        for (std::size_t i = 0; i < acts.size(); ++i) {
          auto const& a = acts[i];
          auto const lop = operation_from_action(a);  // O1-O3
          auto const rump = rump_semidirect(lop);     // L1-L3
          ++r.checked;
          if (rump.order != B.order() * X.order()) {
            r.fail(make_witness("rump.size", {{"action", i}}));
          }
          r.merge(self_similar_check(a));
          auto const e = mu(a);
          if (e.A.order() > 4) {
            continue;
          }
          ++small;
          r.merge(coincidence_check(e).checks);
          r.merge(embedding_check(e).checks);
          ++r.checked;
          if (!lalg_strong_section(e)) {
            r.fail(make_witness("lalg.strong", {{"action", i}}));
          }
        }
        auto c = from_report(r);
        c.detail["actions"] = acts.size();
        c.detail["extensions_order_le_4"] = small;
        return c;
      });
    }
  }
  return tasks;
}

}  // namespace detail

inline SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  auto const t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = name;
  rep.max_order = opt.max_order ? opt.max_order : suite_default_order(name);
  rep.varieties = {"hoop"};
  rep.corpus_source = opt.corpus_dir ? "directory" : "enumerated";
  auto const n = rep.max_order;
  std::vector<detail::Task> tasks;
  if (name == "axioms") {
    rep.corpus_source = "chains";
    rep.varieties = {"wajsberg", "godel"};
    tasks = detail::axioms_tasks(n);
  } else if (name == "filters") {
    tasks = detail::filters_tasks(corpus_up_to(n, opt.corpus_dir));
  } else if (name == "general") {
    tasks = detail::general_tasks(corpus_up_to(n, opt.corpus_dir), opt.budget);
  } else if (name == "bijection") {
    tasks = detail::bijection_tasks(corpus_up_to(n, opt.corpus_dir), opt);
  } else if (name == "lattice") {
    rep.varieties = {"basic"};
    tasks = detail::lattice_tasks(corpus_up_to(n, opt.corpus_dir), opt.budget);
  } else if (name == "double-negation") {
    rep.corpus_source = "chains";
    rep.varieties = {"basic", "wajsberg"};
    tasks = detail::double_negation_tasks(n);
  } else if (name == "godel") {
    rep.varieties = {"godel"};
    tasks = detail::godel_tasks(corpus_up_to(n, opt.corpus_dir), opt.budget);
  } else if (name == "naturality") {
    tasks =
        detail::naturality_tasks(corpus_up_to(n, opt.corpus_dir), opt.budget);
  } else if (name == "lalgebra") {
    tasks = detail::lalgebra_tasks(corpus_up_to(n, opt.corpus_dir),
                                   corpus_up_to(std::max<std::size_t>(n, 5),
                                                opt.corpus_dir),
                                   opt.budget);
  } else {
    throw PreconditionUnmet("unknown suite '" + name + "'");
  }
  rep.checks = detail::run_tasks(tasks, opt);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
  return rep;
}

// Every suite at its default size; one report per suite.
inline std::vector<SuiteReport> run_all_suites(SuiteOptions opt) {
  std::vector<SuiteReport> out;
  for (auto const& s : suite_names()) {
    SuiteOptions o = opt;
    o.max_order = 0;
    out.push_back(run_suite(s, o));
  }
  return out;
}

}  // namespace hoopforge
