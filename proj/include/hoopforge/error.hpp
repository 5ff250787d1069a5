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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hoopforge/table.hpp"

namespace hoopforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedTable : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// A violated axiom or identity, with the assignment that breaks it.
class AxiomViolation : public Error {
 public:
  explicit AxiomViolation(Witness w)
      : Error("axiom violation: " + w.str()), witness_(std::move(w)) {}

  const Witness& witness() const noexcept { return witness_; }
  const std::string& axiom() const noexcept { return witness_.rule; }

 private:
  Witness witness_;
};

class NotBasic : public Error {
 public:
  NotBasic() : Error("operation requires a basic hoop") {}
  using Error::Error;
};

class NotBounded : public Error {
 public:
  NotBounded() : Error("operation requires a bounded hoop") {}
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::size_t budget)
      : Error("search budget of " + std::to_string(budget) +
              " nodes exceeded") {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : Error("syntax error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UndeclaredVariable : public Error {
 public:
  explicit UndeclaredVariable(std::string name)
      : Error("undeclared variable '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class MissingBinding : public Error {
 public:
  explicit MissingBinding(std::string name)
      : Error("no binding for variable '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class NotAFilter : public Error {
 public:
  using Error::Error;
};

class NotACongruence : public Error {
 public:
  using Error::Error;
};

class SectionFailure : public Error {
 public:
  using Error::Error;
};

class KernelMismatch : public Error {
 public:
  using Error::Error;
};

class NotInjective : public Error {
 public:
  using Error::Error;
};

class NotStrong : public Error {
 public:
  NotStrong() : Error("split extension does not have a strong section") {}
};

class BijectionFailure : public Error {
 public:
  using Error::Error;
};

// Raised when a construction that is supposed to succeed does not; this is
// a bug signal rather than a user error.
class ValidationFailure : public Error {
 public:
  using Error::Error;
};

class PreconditionUnmet : public Error {
 public:
  using Error::Error;
};

class NotInCarrier : public Error {
 public:
  using Error::Error;
};

class UnsupportedVariety : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace hoopforge
