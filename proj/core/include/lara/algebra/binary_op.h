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

#ifndef LARA_ALGEBRA_BINARY_OP_H_
#define LARA_ALGEBRA_BINARY_OP_H_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lara/table/scalar.h"

namespace lara {

enum class OpRole { kPlus, kTimes, kOther };

// The value range used when spot-checking declared properties.
enum class SampleDomain {
  kInt,
  kNonNegInt,
  kReal,
  kNonNegReal,
  kPositiveReal,
  kText,
  kBool,
  kIndicator,  // int 0/1
};

struct OpProperties {
  bool associative = false;
  bool commutative = false;
  bool idempotent = false;
  // a (x) b equals the product of the defaults only when a or b is a default.
  bool zero_product = false;
};

// How a join operator behaves against the operands' default values.
//   a_absorbs: for all b, 0_A (x) b == 0_A (x) 0_B
//   b_absorbs: for all a, a (x) 0_B == 0_A (x) 0_B
struct JoinZeroFlags {
  bool a_absorbs = false;
  bool b_absorbs = false;

  friend bool operator==(const JoinZeroFlags&, const JoinZeroFlags&) = default;
};

// A named binary scalar operation together with the algebraic facts declared
// about it. Union and join consult only declared facts; the registry
// spot-checks them on registration.
struct BinaryOp {
  using Fn = std::function<Scalar(const Scalar&, const Scalar&)>;

  std::string name;
  OpRole role = OpRole::kOther;
  Fn apply;
  OpProperties properties;
  std::optional<Scalar> identity;
  std::optional<Scalar> annihilator;
  // Names of operators this one distributes over from both sides.
  std::set<std::string> distributes_over;
  // Group inverse with respect to `identity` (x (x) inverse(x) == identity),
  // for operators that have one on their nonzero elements.
  std::function<Scalar(const Scalar&)> inverse;
  SampleDomain domain = SampleDomain::kReal;
  // Overrides the annihilator-derived zero behavior for specific defaults.
  std::function<JoinZeroFlags(const Scalar& zero_a, const Scalar& zero_b)>
      zero_flags;
  // Operators parameterized by the attribute default (coalesce, keep-left)
  // produce their concrete form here.
  std::function<BinaryOp(const Scalar& default_value)> bind_default;

  Scalar operator()(const Scalar& a, const Scalar& b) const {
    return apply(a, b);
  }
};

// The zero behavior of `op` against defaults `zero_a`, `zero_b` as declared:
// a default equal to the declared annihilator absorbs; `zero_flags`, when
// set, takes precedence.
JoinZeroFlags DeclaredZeroFlags(const BinaryOp& op, const Scalar& zero_a,
                                const Scalar& zero_b);

// Per value attribute choice of operator. Either one operator for every
// attribute or an explicit map; unlisted attributes fall back to the
// uniform operator if present.
class OpMap {
 public:
  OpMap() = default;
  OpMap(BinaryOp uniform);  // NOLINT
  explicit OpMap(std::map<std::string, BinaryOp> per_attribute,
                 std::optional<BinaryOp> fallback = std::nullopt);

  bool Covers(const std::string& attribute) const;
  // The operator for `attribute`, bound to `default_value` when the
  // operator is default-parameterized. Throws OperatorError when missing.
  BinaryOp Resolve(const std::string& attribute,
                   const Scalar& default_value) const;

  const std::optional<BinaryOp>& uniform() const { return uniform_; }
  const std::map<std::string, BinaryOp>& per_attribute() const {
    return per_attribute_;
  }

  // "+" or "{v:+ w:max}".
  std::string ToString() const;

 private:
  std::optional<BinaryOp> uniform_;
  std::map<std::string, BinaryOp> per_attribute_;
};

// Draws `count` sample scalars from `domain`, deterministically from `seed`.
std::vector<Scalar> SampleScalars(SampleDomain domain, size_t count,
                                  std::uint64_t seed);

// Equality used by property checks: numeric values within a relative
// tolerance, NaN equal to NaN, everything else exact.
bool SameValue(const Scalar& a, const Scalar& b);

}  // namespace lara

#endif  // LARA_ALGEBRA_BINARY_OP_H_
