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

#ifndef LARA_ALGEBRA_JOIN_H_
#define LARA_ALGEBRA_JOIN_H_

#include "lara/algebra/binary_op.h"
#include "lara/rewrite/support_bound.h"
#include "lara/table/table.h"

namespace lara {

// Result schema of a strict join: keys K_A u K_B (A's keys first), values
// V_A n V_B with defaults 0_A (x) 0_B. Throws SchemaError when a key of one
// operand is a value of the other.
TableSchema StrictJoinSchema(const TableSchema& a, const TableSchema& b,
                             const OpMap& times);

// Strict join: the value at (a, c, b) combines A(a, c) and B(c, b) with the
// attribute's operator, for every shared value attribute. Only key
// combinations inside the support bound are enumerated; an unbounded
// configuration throws UnboundedJoinError.
Table StrictJoin(const Table& a, const Table& b, const OpMap& times);

// Enumerates under an explicit bound. Exposed for tests that compare the
// bound against a brute-force evaluation.
Table StrictJoinWithBound(const Table& a, const Table& b, const OpMap& times,
                          SupportBoundKind bound);

// Result schema of a relaxed join: keys K_A u K_B plus promoted values,
// values V_A u V_B minus promoted ones.
TableSchema RelaxedJoinSchema(const TableSchema& a, const TableSchema& b,
                              const OpMap& times);

// Relaxed join: like an inner join on the key attributes. Values of one side
// that are keys of the other are promoted to keys first; value attributes
// present on only one side are carried through where the other side has
// support. Shared value attributes are combined with `times`.
Table RelaxedJoin(const Table& a, const Table& b, const OpMap& times);

// True when the relaxed join of tables with these schemas needs no
// promotion and no carried-through attributes, so it equals the strict join.
bool RelaxedJoinIsStrict(const TableSchema& a, const TableSchema& b);

// Join operator that keeps the left value where the right indicator is
// nonzero and yields `zero` otherwise.
BinaryOp KeepLeftWhereIndicated(const Scalar& zero);
// Mirror image: keeps the right value where the left indicator is nonzero.
BinaryOp KeepRightWhereIndicated(const Scalar& zero);

}  // namespace lara

#endif  // LARA_ALGEBRA_JOIN_H_
