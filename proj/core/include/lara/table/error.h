//
// Copyright 2026 The Lara Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef LARA_TABLE_ERROR_H_
#define LARA_TABLE_ERROR_H_

#include <stdexcept>
#include <string>

namespace lara {

// Base class of every diagnostic raised by the library.
class LaraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed records, schemas, or tables; header clashes between operands.
class SchemaError : public LaraError {
 public:
  using LaraError::LaraError;
};

// A binary operator is missing, fails validation, or lacks a required
// declaration (identity, inverse, ...).
class OperatorError : public LaraError {
 public:
  using LaraError::LaraError;
};

// An ext/map function violated its contract (f(k, 0) must be the new
// default everywhere).
class ExtContractError : public LaraError {
 public:
  using LaraError::LaraError;
};

// A strict join whose support cannot be bounded for the given key
// relationship and zero behavior.
class UnboundedJoinError : public LaraError {
 public:
  using LaraError::LaraError;
};

// Parsing of delimited files, schema sidecars, or plan documents failed.
class ParseError : public LaraError {
 public:
  ParseError(const std::string& what, int line, int column)
      : LaraError(Format(what, line, column)), line_(line), column_(column) {}
  explicit ParseError(const std::string& what)
      : LaraError(what), line_(0), column_(0) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string Format(const std::string& what, int line, int column) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }

  int line_;
  int column_;
};

// Operation preconditions that are not schema-shaped: empty divisors,
// zero pivots, invalid parameters.
class DomainError : public LaraError {
 public:
  using LaraError::LaraError;
};

}  // namespace lara

#endif  // LARA_TABLE_ERROR_H_
