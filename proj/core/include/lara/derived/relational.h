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

#ifndef LARA_DERIVED_RELATIONAL_H_
#define LARA_DERIVED_RELATIONAL_H_

#include <functional>
#include <vector>

#include "lara/algebra/binary_op.h"
#include "lara/table/table.h"

namespace lara {

using RowPredicate = std::function<bool(const Record& row)>;

// Selection: support rows failing `keep` are reset to the defaults.
Table Select(const Table& a, const RowPredicate& keep);

// Relational difference A \ B: zeroes every row of A whose projection onto
// K_A n K_B is in the support of B. A's values must be numeric with default
// 0; they are cancelled by adding their negation.
Table Difference(const Table& a, const Table& b);

// One term of the per-row division algorithm.
struct DivisionStep {
  Table inverse_row;  // b^-1 as a one-row table
  Table partial;      // (A join b^-1) u E_{K_A \ K_B}
};

struct DivisionTrace {
  std::vector<DivisionStep> steps;
  Table result;
};

// Generalized division A / B under `times`: the largest C with keys
// K_A \ K_B such that C join B <= A. Computed as the min-join over the rows
// b of supp(B) of (A join b^-1) u E_{K_A \ K_B}.
//
// Requirements: K_B is a subset of K_A, A and B share at least one value
// attribute, `times` declares an inverse, values are ordered with the
// default least. Throws SchemaError, OperatorError, or DomainError when
// supp(B) is empty.
Table Divide(const Table& a, const Table& b, const BinaryOp& times);
DivisionTrace DivideTrace(const Table& a, const Table& b,
                          const BinaryOp& times);

struct DivideCounterTrace {
  Table inverse;  // B^-1
  Table counted;  // X: A join B^-1 with a counter column
  Table grouped;  // Y: X u[minnz, +] E_{K_A \ K_B}
  Table result;
  std::string counter;  // name of the counter column
};

// Same result as Divide, computed in one pass: every quotient carries a
// counter, groups keep their least quotient and their match count, and
// groups that did not match every row of B are dropped.
Table DivideCounter(const Table& a, const Table& b, const BinaryOp& times);
DivideCounterTrace DivideCounterSteps(const Table& a, const Table& b,
                                      const BinaryOp& times);

struct OuterJoinTrace {
  Table left;   // A join (indicator of B u E_{K_B \ K_A})
  Table right;  // B join (indicator of A u E_{K_A \ K_B})
  Table result;
};

// Full outer join. Every support row of either side appears once for each
// combination of the other side's own (unshared) keys found in that side's
// support. Each result row holds both sides' lookups at its key, so a side
// with no entry there contributes its defaults. Value headers must be
// disjoint.
Table OuterJoin(const Table& a, const Table& b);
OuterJoinTrace OuterJoinSteps(const Table& a, const Table& b);

}  // namespace lara

#endif  // LARA_DERIVED_RELATIONAL_H_
