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

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hoopforge/error.hpp"
#include "hoopforge/hoop.hpp"

namespace hoopforge {

// Terms over the hoop signature (*, ->, /\, \/, 0, 1). Meet and join are
// macros expanded at evaluation time, not primitive operations.
struct Term {
  enum class Kind { var, one, zero, mul, imp, meet, join };

  Kind kind = Kind::one;
  std::string name;        // set for Kind::var
  std::vector<Term> args;  // two children for binary kinds

  static Term var(std::string n) { return Term{Kind::var, std::move(n), {}}; }
  static Term one() { return Term{Kind::one, {}, {}}; }
  static Term zero() { return Term{Kind::zero, {}, {}}; }
  static Term binary(Kind k, Term l, Term r) {
    Term t{k, {}, {}};
    t.args.push_back(std::move(l));
    t.args.push_back(std::move(r));
    return t;
  }

  bool is_binary() const noexcept {
    return kind != Kind::var && kind != Kind::one && kind != Kind::zero;
  }

  friend bool operator==(const Term&, const Term&) = default;
};

inline Term operator*(Term l, Term r) {
  return Term::binary(Term::Kind::mul, std::move(l), std::move(r));
}
inline Term implies(Term l, Term r) {
  return Term::binary(Term::Kind::imp, std::move(l), std::move(r));
}
inline Term meet(Term l, Term r) {
  return Term::binary(Term::Kind::meet, std::move(l), std::move(r));
}
inline Term join(Term l, Term r) {
  return Term::binary(Term::Kind::join, std::move(l), std::move(r));
}

// A universally quantified equation lhs = rhs.
struct Identity {
  std::vector<std::string> vars;
  Term lhs;
  Term rhs;
  std::string name;  // optional label used in witnesses

  friend bool operator==(const Identity&, const Identity&) = default;
};

inline std::string to_string(const Term& t, bool top = true) {
  using K = Term::Kind;
  switch (t.kind) {
    case K::var:
      return t.name;
    case K::one:
      return "1";
    case K::zero:
      return "0";
    default:
      break;
  }
  std::string_view op = t.kind == K::mul    ? " * "
                        : t.kind == K::imp  ? " -> "
                        : t.kind == K::meet ? " /\\ "
                                            : " \\/ ";
  std::string s = to_string(t.args[0], false);
  s += op;
  s += to_string(t.args[1], false);
  return top ? s : "(" + s + ")";
}

inline std::string to_string(const Identity& id) {
  std::string s = "forall";
  for (auto const& v : id.vars) {
    s += ' ';
    s += v;
  }
  s += " : ";
  s += to_string(id.lhs);
  s += " = ";
  s += to_string(id.rhs);
  return s;
}

namespace detail {

enum class Tok { ident, zero, one, star, arrow, wedge, vee, lparen, rparen,
                 colon, equals, forall, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

inline std::vector<Token> lex(std::string_view src, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto col = [&](std::size_t pos) { return pos + 1; };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      break;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t const start = i;
    auto push = [&](Tok k, std::size_t len) {
      out.push_back({k, std::string(src.substr(start, len)), line, col(start)});
      i += len;
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) ||
              src[j] == '_' || src[j] == '\'')) {
        ++j;
      }
      auto word = src.substr(i, j - i);
      push(word == "forall" ? Tok::forall : Tok::ident, j - i);
    } else if (c == '0' || c == '1') {
      if (i + 1 < src.size() &&
          std::isalnum(static_cast<unsigned char>(src[i + 1]))) {
        throw SyntaxError(line, col(i), "malformed constant");
      }
      push(c == '0' ? Tok::zero : Tok::one, 1);
    } else if (src.substr(i, 2) == "->") {
      push(Tok::arrow, 2);
    } else if (src.substr(i, 2) == "/\\") {
      push(Tok::wedge, 2);
    } else if (src.substr(i, 2) == "\\/") {
      push(Tok::vee, 2);
    } else if (c == '*') {
      push(Tok::star, 1);
    } else if (c == '(') {
      push(Tok::lparen, 1);
    } else if (c == ')') {
      push(Tok::rparen, 1);
    } else if (c == ':') {
      push(Tok::colon, 1);
    } else if (c == '=') {
      push(Tok::equals, 1);
    } else {
      throw SyntaxError(line, col(i),
                        std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::end, "", line, col(src.size())});
  return out;
}

// Recursive descent, one token of lookahead. Precedence, tightest first:
// '*', then '/\' and '\/' (left associative), then '->' (right associative).
class IdentityParser {
 public:
  explicit IdentityParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Identity parse() {
    Identity id;
    expect(Tok::forall, "expected 'forall'");
    while (peek().kind == Tok::ident) {
      id.vars.push_back(next().text);
    }
    expect(Tok::colon, "expected ':' after variable list");
    declared_ = &id.vars;
    id.lhs = expr();
    expect(Tok::equals, "expected '='");
    id.rhs = expr();
    expect(Tok::end, "unexpected trailing input");
    return id;
  }

  Term parse_term() {
    Term t = expr();
    expect(Tok::end, "unexpected trailing input");
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  void expect(Tok k, const char* msg) {
    if (peek().kind != k) {
      throw SyntaxError(peek().line, peek().col, msg);
    }
    ++pos_;
  }

  Term expr() {
    Term lhs = lattice();
    if (peek().kind == Tok::arrow) {
      ++pos_;
      return implies(std::move(lhs), expr());
    }
    return lhs;
  }

  Term lattice() {
    Term t = product();
    while (peek().kind == Tok::wedge || peek().kind == Tok::vee) {
      bool const is_meet = next().kind == Tok::wedge;
      Term r = product();
      t = is_meet ? meet(std::move(t), std::move(r))
                  : join(std::move(t), std::move(r));
    }
    return t;
  }

  Term product() {
    Term t = atom();
    while (peek().kind == Tok::star) {
      ++pos_;
      t = std::move(t) * atom();
    }
    return t;
  }

  Term atom() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::ident:
        if (declared_ != nullptr) {
          bool found = false;
          for (auto const& v : *declared_) {
            found = found || v == t.text;
          }
          if (!found) {
            throw UndeclaredVariable(t.text);
          }
        }
        return Term::var(t.text);
      case Tok::zero:
        return Term::zero();
      case Tok::one:
        return Term::one();
      case Tok::lparen: {
        Term inner = expr();
        expect(Tok::rparen, "expected ')'");
        return inner;
      }
      default:
        throw SyntaxError(t.line, t.col, "expected a term");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* declared_ = nullptr;
};

}  // namespace detail

// Parses `forall x y : lhs = rhs`. `line` is only used in error positions.
inline Identity parse_identity(std::string_view text, std::size_t line = 1) {
  return detail::IdentityParser(detail::lex(text, line)).parse();
}

inline Term parse_term(std::string_view text) {
  return detail::IdentityParser(detail::lex(text, 1)).parse_term();
}

// One identity per non-blank line; '#' starts a comment.
inline std::vector<Identity> parse_identity_file(std::string_view text) {
  std::vector<Identity> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    ++line_no;
    auto line = text.substr(start, end - start);
    auto hash = line.find('#');
    auto body = line.substr(0, hash);
    if (body.find_first_not_of(" \t\r") != std::string_view::npos) {
      out.push_back(parse_identity(body, line_no));
    }
    start = end + 1;
  }
  return out;
}

namespace detail {

// Flattened term with variables resolved to slots, evaluated bottom-up.
class CompiledTerm {
 public:
  CompiledTerm(const FiniteHoop& h, const Term& t,
               const std::vector<std::string>& slots)
      : h_(&h) {
    root_ = compile(t, slots);
  }

  Element eval(const std::vector<Element>& env) const {
    return eval_node(root_, env);
  }

 private:
  struct Node {
    Term::Kind kind;
    std::size_t a;
    std::size_t b;
  };

  std::size_t compile(const Term& t, const std::vector<std::string>& slots) {
    using K = Term::Kind;
    Node n{t.kind, 0, 0};
    switch (t.kind) {
      case K::var: {
        std::size_t i = 0;
        while (i < slots.size() && slots[i] != t.name) {
          ++i;
        }
        if (i == slots.size()) {
          throw MissingBinding(t.name);
        }
        n.a = i;
        break;
      }
      case K::zero:
        if (!h_->bottom()) {
          throw NotBounded();
        }
        break;
      case K::join:
        if (!h_->varieties().is_basic) {
          throw NotBasic();
        }
        [[fallthrough]];
      case K::mul:
      case K::imp:
      case K::meet:
        n.a = compile(t.args[0], slots);
        n.b = compile(t.args[1], slots);
        break;
      case K::one:
        break;
    }
    nodes_.push_back(n);
    return nodes_.size() - 1;
  }

  Element eval_node(std::size_t i, const std::vector<Element>& env) const {
    using K = Term::Kind;
    Node const& n = nodes_[i];
    auto const& h = *h_;
    switch (n.kind) {
      case K::var:
        return env[n.a];
      case K::one:
        return h.unit();
      case K::zero:
        return *h.bottom();
      case K::mul:
        return h.mul(eval_node(n.a, env), eval_node(n.b, env));
      case K::imp:
        return h.imp(eval_node(n.a, env), eval_node(n.b, env));
      case K::meet: {
        Element x = eval_node(n.a, env);
        Element y = eval_node(n.b, env);
        return h.mul(x, h.imp(x, y));
      }
      case K::join: {
        Element x = eval_node(n.a, env);
        Element y = eval_node(n.b, env);
        Element l = h.imp(h.imp(x, y), y);
        Element r = h.imp(h.imp(y, x), x);
        return h.mul(l, h.imp(l, r));
      }
    }
    return h.unit();
  }

  const FiniteHoop* h_;
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
};

}  // namespace detail

inline Element eval_term(const FiniteHoop& h, const Term& t,
                         const std::unordered_map<std::string, Element>& env) {
  std::vector<std::string> names;
  std::vector<Element> values;
  for (auto const& [k, v] : env) {
    check_index(h, v);
    names.push_back(k);
    values.push_back(v);
  }
  return detail::CompiledTerm(h, t, names).eval(values);
}

struct HoldsResult {
  bool holds = true;
  std::optional<Witness> counterexample;

  explicit operator bool() const noexcept { return holds; }
};

// Exhaustive check over all assignments, enumerated lexicographically with
// the first declared variable most significant.
inline HoldsResult holds(const FiniteHoop& h, const Identity& id) {
  detail::CompiledTerm lhs(h, id.lhs, id.vars);
  detail::CompiledTerm rhs(h, id.rhs, id.vars);
  auto const k = id.vars.size();
  auto const n = static_cast<Element>(h.order());
  std::vector<Element> env(k, 0);
  while (true) {
    if (lhs.eval(env) != rhs.eval(env)) {
      Witness w{id.name.empty() ? to_string(id) : id.name, {}};
      for (std::size_t i = 0; i < k; ++i) {
        w.bindings.emplace_back(id.vars[i], env[i]);
      }
      return HoldsResult{false, std::move(w)};
    }
    std::size_t i = k;
    while (i > 0 && ++env[i - 1] == n) {
      env[i - 1] = 0;
      --i;
    }
    if (i == 0) {
      return HoldsResult{};
    }
  }
}

// Named identity strings for the hoop axioms and the subvarieties.
struct NamedIdentity {
  std::string_view name;
  std::string_view text;
};

inline constexpr NamedIdentity kHoopAxioms[] = {
    {"i.unit", "forall x : x * 1 = x"},
    {"i.comm", "forall x y : x * y = y * x"},
    {"i.assoc", "forall x y z : (x * y) * z = x * (y * z)"},
    {"ii", "forall x : x -> x = 1"},
    {"iii", "forall x y : x * (x -> y) = y * (y -> x)"},
    {"iv", "forall x y z : (x * y) -> z = x -> (y -> z)"},
};

inline constexpr NamedIdentity kBoundedAxiom = {"v",
                                                "forall x : 0 -> x = 1"};

inline constexpr NamedIdentity kVarietyIdentities[] = {
    {"basic",
     "forall x y z : ((x -> y) -> z) -> (((y -> x) -> z) -> z) = 1"},
    {"wajsberg", "forall x y : (x -> y) -> y = (y -> x) -> x"},
    {"idempotency", "forall x : x * x = x"},
    {"product", "forall x y z : (y -> z) \\/ ((y -> (x * y)) -> x) = 1"},
    {"involutive", "forall x : (x -> 0) -> 0 = x"},
};

inline Identity named_identity(NamedIdentity const& ni) {
  Identity id = parse_identity(ni.text);
  id.name = std::string(ni.name);
  return id;
}

}  // namespace hoopforge
