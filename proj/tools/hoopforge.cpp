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


// hoopforge: command-line front end. Exit status 0 when every check
// passes, 1 on a failed check, 2 on bad usage or unreadable input.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hoopforge.hpp"
#include "hoopforge/suite.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace hoopforge;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// usage-level problems: the input never reached the algebra
struct UsageError : Error {
  using Error::Error;
};

struct Common {
  std::string variety = "hoop";
  std::size_t max_order = 0;
  std::size_t jobs = 1;
  std::string out;
  std::size_t budget = kDefaultBudget;
  bool oracle = false;
  std::string only;
};

Variety variety_of(const Common& c) {
  try {
    return parse_variety(c.variety);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

json tables_json(const FiniteHoop& h) {
  json j{{"name", h.name()},
         {"order", h.order()},
         {"unit", h.unit()},
         {"mul", h.mul_table().to_rows()},
         {"imp", h.imp_table().to_rows()}};
  j["bottom"] = h.bottom() ? json(*h.bottom()) : json(nullptr);
  return j;
}

json varieties_json(const FiniteHoop& h) {
  auto const& v = h.varieties();
  json j{{"hoop", v.is_hoop},         {"bounded", v.is_bounded},
         {"basic", v.is_basic},       {"wajsberg", v.is_wajsberg},
         {"godel", v.is_godel},       {"product", v.is_product}};
  j["involutive"] = v.is_involutive ? json(*v.is_involutive) : json(nullptr);
  return j;
}

// An algebra in a descriptor: a path (relative to the descriptor) or
// {"text": "<algebra text>"}.
FiniteHoop algebra_ref(const json& j, const fs::path& base) {
  if (j.is_string()) {
    auto p = fs::path(j.get<std::string>());
    if (p.is_relative()) {
      p = base / p;
    }
    return load_algebra(p.string());
  }
  if (j.is_object() && j.contains("text")) {
    return parse_algebra(j.at("text").get<std::string>());
  }
  throw UsageError("algebra reference must be a path or {\"text\": ...}");
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

SplitExtension load_extension(const std::string& path) {
  auto const d = read_json(path);
  auto const base = fs::path(path).parent_path();
  try {
    return validate_split_extension(
        algebra_ref(d.at("X"), base), algebra_ref(d.at("A"), base),
        algebra_ref(d.at("B"), base), d.at("k").get<std::vector<Element>>(),
        d.at("p").get<std::vector<Element>>(),
        d.at("s").get<std::vector<Element>>());
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

json extension_json(const SplitExtension& e) {
  return {{"X", {{"text", format_algebra(e.X)}}},
          {"A", {{"text", format_algebra(e.A)}}},
          {"B", {{"text", format_algebra(e.B)}}},
          {"k", e.k.map},
          {"p", e.p.map},
          {"s", e.s.map},
          {"strong", e.strong}};
}

struct ActionInput {
  FiniteHoop B, X;
  Table f, g;
};

ActionInput load_action(const std::string& path) {
  auto const d = read_json(path);
  auto const base = fs::path(path).parent_path();
  try {
    using Rows = std::vector<std::vector<Element>>;
    return {algebra_ref(d.at("B"), base), algebra_ref(d.at("X"), base),
            Table::from_rows(d.at("f").get<Rows>()),
            Table::from_rows(d.at("g").get<Rows>())};
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

json action_json(const StrongExternalAction& a) {
  return {{"B", {{"text", format_algebra(a.B)}}},
          {"X", {{"text", format_algebra(a.X)}}},
          {"f", a.f.to_rows()},
          {"g", a.g.to_rows()},
          {"certificates",
           {{"hoop", a.cert.hoop},
            {"basic", a.cert.basic},
            {"wajsberg", a.cert.wajsberg}}}};
}

json report_json(const PropertyReport& r) {
  json w = json::array();
  for (auto const& f : r.failures) {
    w.push_back(to_json(f));
  }
  return {{"ok", r.ok}, {"instances", r.checked}, {"failures", w}};
}

void emit(const json& report, const Common& c) {
  auto const text = report.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.out, std::ios::binary);
  if (!out || !(out << text)) {
    throw IoError("cannot write '" + c.out + "'");
  }
}

int finish(json report, bool ok, const Common& c) {
  report["ok"] = ok;
  emit(report, c);
  return ok ? kPass : kFail;
}

// --- subcommands ------------------------------------------------------------

int cmd_check(const std::string& file, const Common& c) {
  json r{{"command", "check"}, {"file", file}};
  std::optional<FiniteHoop> loaded;
  try {
    loaded = load_algebra(file);
  } catch (const AxiomViolation& e) {
    r["error"] = {{"type", "AxiomViolation"}, {"message", e.what()}};
    r["witness"] = to_json(e.witness());
    return finish(r, false, c);
  } catch (const MalformedTable& e) {
    r["error"] = {{"type", "MalformedTable"}, {"message", e.what()}};
    return finish(r, false, c);
  }
  auto const& h = *loaded;
  r["algebra"] = tables_json(h);
  r["varieties"] = varieties_json(h);
  bool ok = true;
  if (c.variety != "hoop") {
    auto const v = variety_of(c);
    ok = h.in(v);
    r["variety"] = c.variety;
    if (!ok) {
      if (auto w = h.varieties().counterexample()) {
        r["witness"] = to_json(*w);
      }
    }
  }
  return finish(r, ok, c);
}

int cmd_check_identity(const std::string& file, const std::string& ids,
                       const Common& c) {
  auto const h = load_algebra(file);
  auto const list = parse_identity_file(read_file(ids));
  json results = json::array();
  bool ok = true;
  for (auto const& id : list) {
    auto const res = holds(h, id);
    json j{{"identity", to_string(id)}, {"holds", res.holds}};
    if (res.counterexample) {
      j["witness"] = to_json(*res.counterexample);
    }
    ok = ok && res.holds;
    results.push_back(std::move(j));
  }
  return finish({{"command", "check-identity"}, {"results", results}}, ok, c);
}

int cmd_enumerate(std::size_t order, const std::string& save, const Common& c) {
  if (order == 0) {
    throw UsageError("enumerate needs --max-order >= 1");
  }
  EnumerateOptions eo;
  eo.budget = c.budget;
  eo.jobs = c.jobs;
  if (c.variety != "hoop") {
    eo.variety = variety_of(c);
  }
  auto const corpus = enumerate_corpus(order, eo);
  json counts = json::object();
  json names = json::array();
  for (auto const& h : corpus) {
    counts[std::to_string(h.order())] =
        counts.value(std::to_string(h.order()), 0) + 1;
    names.push_back(h.name());
  }
  if (!save.empty()) {
    save_corpus(save, corpus);
  }
  return finish({{"command", "enumerate"},
                 {"max_order", order},
                 {"variety", c.variety},
                 {"counts", counts},
                 {"algebras", names}},
                true, c);
}

int cmd_filters(const std::string& file, const Common& c) {
  auto const h = load_algebra(file);
  json fl = json::array();
  for (auto const& f : filters(h)) {
    fl.push_back({{"members", f.members},
                  {"congruence", congruence_of_filter(h, f).class_of}});
  }
  return finish({{"command", "filters"}, {"algebra", h.name()}, {"filters", fl}},
                true, c);
}

int cmd_quotient(const std::string& file, const std::vector<Element>& members,
                 const Common& c) {
  auto const h = load_algebra(file);
  if (auto w = check_filter(h, members)) {
    json r{{"command", "quotient"}, {"error", "not a filter"}};
    r["witness"] = to_json(*w);
    return finish(r, false, c);
  }
  auto const q = quotient(h, make_filter(h, members));
  return finish({{"command", "quotient"},
                 {"quotient", tables_json(q.hoop)},
                 {"text", format_algebra(q.hoop)},
                 {"projection", q.projection.map}},
                true, c);
}

int cmd_splitext(const std::string& mode, const std::string& file,
                 const Common& c) {
  json r{{"command", "splitext " + mode}};
  if (mode == "mvd") {
    // the report doubles as an extension descriptor
    auto const e = regular_dense_decomposition(load_algebra(file));
    r.update(extension_json(e));
    return finish(r, e.strong, c);
  }
  auto const e = load_extension(file);
  auto const sc = has_strong_section(e);
  r["strong"] = sc.holds;
  if (sc.witness) {
    r["witness"] = to_json(*sc.witness);
  }
  if (mode == "validate") {
    auto const g = general_semidirect(e);
    r["general_carrier"] = json::array();
    for (auto const& t : g.carrier) {
      r["general_carrier"].push_back({t[0], t[1], t[2]});
    }
    return finish(r, true, c);
  }
  // strong
  if (!sc.holds) {
    return finish(r, false, c);
  }
  auto const s = strong_semidirect(e);
  r["carrier"] = s.carrier;
  r["to_A"] = s.to_A;
  r["hoop"] = tables_json(s.hoop);
  return finish(r, true, c);
}

int cmd_actions(const std::string& mode, const std::vector<std::string>& args,
                const Common& c) {
  auto const v = variety_of(c);
  ActionSearchOptions so;
  so.budget = c.budget;
  so.jobs = c.jobs;
  auto need = [&](std::size_t n) {
    if (args.size() != n) {
      throw UsageError("actions " + mode + " takes " + std::to_string(n) +
                       " file argument(s)");
    }
  };
  json r{{"command", "actions " + mode}, {"variety", c.variety}};
  if (mode == "validate") {
    need(1);
    auto in = load_action(args[0]);
    try {
      auto const a = validate_action(in.B, in.X, in.f, in.g, v);
      r.update(action_json(a));
      return finish(r, true, c);
    } catch (const AxiomViolation& e) {
      r["witness"] = to_json(e.witness());
      return finish(r, false, c);
    }
  }
  if (mode == "enumerate") {
    need(2);
    auto const B = load_algebra(args[0]), X = load_algebra(args[1]);
    json list = json::array();
    for (auto const& a : enumerate_actions(B, X, v, so)) {
      list.push_back({{"f", a.f.to_rows()},
                      {"g", a.g.to_rows()},
                      {"identity", a.is_identity()},
                      {"basic", a.cert.basic},
                      {"wajsberg", a.cert.wajsberg}});
    }
    r["count"] = list.size();
    r["actions"] = list;
    return finish(r, true, c);
  }
  if (mode == "mu") {
    need(1);
    auto in = load_action(args[0]);
    auto const a = validate_action(in.B, in.X, in.f, in.g, v);
    auto const m = mu_model(a);
    r.update(extension_json(m.ext));
    r["carrier"] = m.carrier;
    return finish(r, true, c);
  }
  if (mode == "tau") {
    need(1);
    r.update(action_json(tau(load_extension(args[0]))));
    return finish(r, true, c);
  }
  if (mode == "verify-bijection") {
    need(2);
    BijectionOptions bo;
    bo.oracle = c.oracle;
    bo.search = so;
    auto const b =
        verify_bijection(load_algebra(args[0]), load_algebra(args[1]), v, bo);
    r["actions"] = b.actions;
    r["extensions"] = b.extensions;
    r["oracle_extensions"] =
        b.oracle_extensions ? json(*b.oracle_extensions) : json(nullptr);
    r["checks"] = report_json(b.checks);
    return finish(r, b.ok(), c);
  }
  if (mode == "verify-naturality") {
    need(3);
    auto const Bp = load_algebra(args[0]), B = load_algebra(args[1]),
               X = load_algebra(args[2]);
    PropertyReport all;
    std::size_t homs = 0;
    for (auto const& phi : all_homs(Bp, B)) {
      ++homs;
      all.merge(verify_naturality(phi, X, v, so).checks);
    }
    r["homomorphisms"] = homs;
    r["checks"] = report_json(all);
    return finish(r, all.ok, c);
  }
  throw UsageError("unknown actions mode '" + mode + "'");
}

int cmd_lalg(const std::string& mode, const std::string& file, const Common& c) {
  json r{{"command", "lalg " + mode}};
  if (mode == "validate") {
    // an algebra file's implication reduct
    auto const h = load_algebra(file);
    auto const w = check_lalgebra_axioms(h.order(), h.unit(), h.imp_table());
    if (w) {
      r["witness"] = to_json(*w);
    }
    return finish(r, !w, c);
  }
  if (mode == "semidirect") {
    auto in = load_action(file);
    auto const a = validate_action(in.B, in.X, in.f, in.g, variety_of(c));
    auto const lop = operation_from_action(a);
    auto const s = rump_semidirect(lop);
    r["operation"] = lop.op.to_rows();
    r["order"] = s.order;
    r["unit"] = s.unit;
    r["imp"] = s.imp.to_rows();
    return finish(r, true, c);
  }
  if (mode == "coincide") {
    auto const e = load_extension(file);
    auto const co = coincidence_check(e);
    auto const em = embedding_check(e);
    r["y_prime_size"] = co.y_prime_size;
    r["coincidence"] = report_json(co.checks);
    r["embedding"] = report_json(em.checks);
    r["image_size"] = em.image_size;
    return finish(r, co.ok() && em.ok(), c);
  }
  throw UsageError("unknown lalg mode '" + mode + "'");
}

int cmd_suite(const std::string& name, const Common& c) {
  SuiteOptions so;
  so.max_order = c.max_order;
  so.jobs = c.jobs;
  so.budget = c.budget;
  so.oracle = c.oracle;
  so.corpus_dir = corpus_dir_from_env();
  if (!c.only.empty()) {
    so.only = c.only;
  }
  auto names = suite_names();
  if (name != "all" &&
      std::find(names.begin(), names.end(), name) == names.end()) {
    throw UsageError("unknown suite '" + name + "'");
  }
  if (name != "all") {
    names = {name};
  }
  json reports = json::array();
  bool ok = true;
  for (auto const& n : names) {
    SuiteReport rep;
    try {
      rep = run_suite(n, so);
    } catch (const PreconditionUnmet& e) {
      throw UsageError(e.what());
    }
    ok = ok && rep.ok();
    std::fprintf(stderr, "%-16s %s  %zu checks, %zu failed\n", n.c_str(),
                 rep.ok() ? "PASS" : "FAIL", rep.checks.size(), rep.failed());
    reports.push_back(rep.to_json());
  }
  json out = name == "all" ? json{{"suite", "all"},
                                  {"tool_version", kToolVersion},
                                  {"reports", reports}}
                           : reports.front();
  out["ok"] = ok;
  emit(out, c);
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hoopforge: finite hoops, split extensions and actions"};
  app.require_subcommand(1);
  Common c;
  auto common = [&c](CLI::App* s) {
    s->add_option("--variety", c.variety,
                  "hoop, basic, wajsberg, godel or product");
    s->add_option("--max-order", c.max_order, "largest algebra order");
    s->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
    s->add_option("--out", c.out, "write the JSON report here");
    s->add_option("--budget", c.budget, "search node budget");
    s->add_flag("--oracle", c.oracle, "also run the slow direct searches");
  };

  std::string file, file2, mode, save, suite;
  std::vector<std::string> files;
  std::vector<Element> members;
  std::function<int()> run;

  auto* check = app.add_subcommand("check", "validate an algebra file");
  common(check);
  check->add_option("file", file)->required();
  check->callback([&] { run = [&] { return cmd_check(file, c); }; });

  auto* chk_id =
      app.add_subcommand("check-identity", "test identities on an algebra");
  common(chk_id);
  chk_id->add_option("file", file)->required();
  chk_id->add_option("identities", file2)->required();
  chk_id->callback(
      [&] { run = [&] { return cmd_check_identity(file, file2, c); }; });

  auto* en = app.add_subcommand("enumerate", "all hoops up to an order");
  common(en);
  en->add_option("--save", save, "write one .alg per hoop into this directory");
  en->callback([&] { run = [&] { return cmd_enumerate(c.max_order, save, c); }; });

  auto* fl = app.add_subcommand("filters", "filters and their congruences");
  common(fl);
  fl->add_option("file", file)->required();
  fl->callback([&] { run = [&] { return cmd_filters(file, c); }; });

  auto* qu = app.add_subcommand("quotient", "quotient by a filter");
  common(qu);
  qu->add_option("file", file)->required();
  qu->add_option("members", members, "filter elements")->required();
  qu->callback([&] { run = [&] { return cmd_quotient(file, members, c); }; });

  auto* se = app.add_subcommand("splitext", "split extensions");
  common(se);
  se->add_option("mode", mode, "validate | strong | mvd")
      ->required()
      ->check(CLI::IsMember({"validate", "strong", "mvd"}));
  se->add_option("file", file, "descriptor (.json) or, for mvd, algebra")
      ->required();
  se->callback([&] { run = [&] { return cmd_splitext(mode, file, c); }; });

  auto* ac = app.add_subcommand("actions", "strong external actions");
  common(ac);
  ac->add_option("mode", mode,
                 "validate | enumerate | mu | tau | verify-bijection | "
                 "verify-naturality")
      ->required()
      ->check(CLI::IsMember({"validate", "enumerate", "mu", "tau",
                             "verify-bijection", "verify-naturality"}));
  ac->add_option("files", files)->required();
  ac->callback([&] { run = [&] { return cmd_actions(mode, files, c); }; });

  auto* la = app.add_subcommand("lalg", "L-algebra layer");
  common(la);
  la->add_option("mode", mode, "validate | semidirect | coincide")
      ->required()
      ->check(CLI::IsMember({"validate", "semidirect", "coincide"}));
  la->add_option("file", file)->required();
  la->callback([&] { run = [&] { return cmd_lalg(mode, file, c); }; });

  auto* su = app.add_subcommand("suite", "run a named acceptance suite");
  common(su);
  su->add_option("name", suite, "suite name or 'all'")->required();
  su->add_option("--only", c.only, "run a single check by name");
  su->callback([&] { run = [&] { return cmd_suite(suite, c); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int const rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }
  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "hoopforge: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "hoopforge: " << e.what() << "\n";
    return kUsage;
  } catch (const SyntaxError& e) {
    std::cerr << "hoopforge: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    // a check that could not complete counts as failed
    json r{{"ok", false}, {"error", e.what()}};
    if (auto const* av = dynamic_cast<const AxiomViolation*>(&e)) {
      r["witness"] = to_json(av->witness());
    }
    try {
      emit(r, c);
    } catch (...) {
    }
    std::cerr << "hoopforge: " << e.what() << "\n";
    return kFail;
  }
}
