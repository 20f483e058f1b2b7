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

#ifndef LARA_ALGEBRA_REGISTRY_H_
#define LARA_ALGEBRA_REGISTRY_H_

#include <map>
#include <string>
#include <vector>

#include "lara/algebra/binary_op.h"

namespace lara {

// Number of random samples used to check each declared property.
inline constexpr size_t kPropertySamples = 1000;

// Checks every declared property of `op` (and its distributivity over the
// operators in `registry`) on random samples. Throws OperatorError naming
// the first violated property and a counterexample.
class OpRegistry;
void ValidateOp(const BinaryOp& op, const OpRegistry* registry = nullptr);

// Named operators available to plans, the CLI, and collision functions.
class OpRegistry {
 public:
  OpRegistry() = default;

  // Validates and adds `op`. Throws OperatorError on failed validation or a
  // duplicate name.
  void Register(BinaryOp op);

  bool Has(const std::string& name) const { return ops_.count(name) > 0; }
  // Throws OperatorError for unknown names.
  const BinaryOp& Get(const std::string& name) const;
  std::vector<std::string> Names() const;

  // The process-wide registry preloaded with the builtin operators.
  static const OpRegistry& Builtins();

 private:
  std::map<std::string, BinaryOp> ops_;
};

// Builtin operators, also reachable by name through OpRegistry::Builtins().
namespace ops {

BinaryOp Plus();         // "+": identity 0, distributes over max/min
BinaryOp Times();        // "*": identity 1, annihilator 0, zero product
BinaryOp Max();          // "max": identity -inf
BinaryOp Min();          // "min": identity +inf
BinaryOp Max0();         // "max0": max on nonnegative values, identity 0
BinaryOp Min0();         // "min0": min on nonnegative values, annihilator 0
BinaryOp MinNonZero();   // "minnz": min ignoring zeros, identity 0
BinaryOp Concat();       // "concat": text concatenation, identity ""
BinaryOp Or();           // "or": int indicators, identity 0
BinaryOp And();          // "and": int indicators, identity 1, annihilator 0
BinaryOp LogicalOr();    // "lor": booleans, identity false
BinaryOp LogicalAnd();   // "land": booleans, identity true, annihilator false
BinaryOp SafeDivide();   // "/": a / b, zero when b is zero
BinaryOp Coalesce();     // "coalesce": left unless it is the default

}  // namespace ops

}  // namespace lara

#endif  // LARA_ALGEBRA_REGISTRY_H_
