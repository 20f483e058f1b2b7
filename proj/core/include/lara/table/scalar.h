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

#ifndef LARA_TABLE_SCALAR_H_
#define LARA_TABLE_SCALAR_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lara {

enum class ScalarKind : std::uint8_t { kInt, kReal, kText, kBool };

std::string_view KindName(ScalarKind kind);
std::optional<ScalarKind> ParseKind(std::string_view name);

// Absolute tolerance used whenever real values are compared for table
// equality.
inline constexpr double kRealTolerance = 1e-9;

// A single attribute value: 64-bit integer, 64-bit float, UTF-8 text or
// boolean.
//
// Integers and reals compare by numeric value, so `Scalar(2) == Scalar(2.0)`.
// Across the remaining kinds the order is bool < numeric < text, which gives
// every set of scalars a total order for canonical row ordering.
class Scalar {
 public:
  Scalar() : value_(std::int64_t{0}) {}
  Scalar(std::int64_t v) : value_(v) {}          // NOLINT
  Scalar(int v) : value_(std::int64_t{v}) {}     // NOLINT
  Scalar(double v) : value_(v) {}                // NOLINT
  Scalar(bool v) : value_(v) {}                  // NOLINT
  Scalar(std::string v) : value_(std::move(v)) {}  // NOLINT
  Scalar(const char* v) : value_(std::string(v)) {}  // NOLINT

  ScalarKind kind() const { return static_cast<ScalarKind>(value_.index()); }
  bool is_numeric() const {
    return kind() == ScalarKind::kInt || kind() == ScalarKind::kReal;
  }

  // Typed accessors throw SchemaError on a kind mismatch. AsReal accepts
  // integers as well.
  std::int64_t AsInt() const;
  double AsReal() const;
  const std::string& AsText() const;
  bool AsBool() const;

  // Nonzero numeric, true boolean, nonempty text.
  bool Truthy() const;

  // Converts to `kind` when the conversion is lossless (int -> real,
  // integral real -> int). Returns nullopt otherwise.
  std::optional<Scalar> ConvertTo(ScalarKind kind) const;

  // Human-readable form; reals use the shortest round-trip representation.
  std::string ToString() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::weak_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  std::variant<std::int64_t, double, std::string, bool> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Numeric values compare within `tolerance`; everything else exactly.
bool ApproxEqual(const Scalar& a, const Scalar& b,
                 double tolerance = kRealTolerance);

// Parses `text` as a scalar of the given kind. Throws ParseError.
Scalar ParseScalar(std::string_view text, ScalarKind kind);

// Positional attribute values, ordered as in the owning schema.
using Tuple = std::vector<Scalar>;

std::string TupleToString(const Tuple& t);

}  // namespace lara

#endif  // LARA_TABLE_SCALAR_H_
