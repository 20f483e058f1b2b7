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

#ifndef LARA_ALGEBRA_UNION_H_
#define LARA_ALGEBRA_UNION_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "lara/algebra/binary_op.h"
#include "lara/table/table.h"

namespace lara {

// How the values colliding on one result key are folded.
enum class UnionStrategy {
  // Right fold over the group in canonical key order, starting from the
  // identity. Valid for any operator with an identity.
  kLinearOrdered,
  // Ordered chunks folded independently, then combined left to right.
  // Needs associativity.
  kParallelDisjointOrdered,
  // Chunks over a permuted group, combined in arbitrary order. Needs
  // associativity and commutativity.
  kParallelUnordered,
  // Chunks that may share elements. Chunks overlap only for idempotent
  // operators; otherwise they are disjoint. Needs associativity and
  // commutativity.
  kOverlapTolerant,
};

std::string_view UnionStrategyName(UnionStrategy s);

// Result schema of A u B: keys K_A n K_B in A's order, values V_A u V_B.
// Throws SchemaError on role clashes or disagreeing shared attributes and
// OperatorError when a default is not the identity of its operator.
TableSchema UnionSchema(const TableSchema& a, const TableSchema& b,
                        const OpMap& plus);

// Aggregating union: every row of A and B is projected onto the shared key
// attributes and rows colliding on a key are folded with the attribute's
// operator. Attributes absent from one side fold that side as empty.
//
// Throws OperatorError when `strategy` needs a property the operator does
// not declare.
Table Union(const Table& a, const Table& b, const OpMap& plus,
            UnionStrategy strategy = UnionStrategy::kLinearOrdered);

// Folds `xs` with `op` under `strategy`; the empty fold is `zero`.
Scalar FoldValues(const std::vector<Scalar>& xs, const BinaryOp& op,
                  const Scalar& zero, UnionStrategy strategy);

}  // namespace lara

#endif  // LARA_ALGEBRA_UNION_H_
