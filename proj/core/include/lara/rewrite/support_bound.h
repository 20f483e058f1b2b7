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

#ifndef LARA_REWRITE_SUPPORT_BOUND_H_
#define LARA_REWRITE_SUPPORT_BOUND_H_

#include <map>
#include <string>
#include <string_view>

#include "lara/algebra/binary_op.h"
#include "lara/table/schema.h"

namespace lara {

// Relationship between the key headers of two join operands.
enum class KeyRelation { kEqual, kLeftSubset, kLeftSuperset, kOther };

KeyRelation RelateKeys(const TableSchema& a, const TableSchema& b);

// Upper bound on the support of a strict join, in terms of the operand
// supports S_A and S_B (extended over the result keys where needed).
enum class SupportBoundKind {
  kSubsetIntersection,  // natural join of S_A and S_B, equal key headers
  kSubsetProduct,       // natural join of S_A and S_B, other headers
  kSubsetA,
  kSubsetB,
  kSubsetUnion,
  kUnbounded,
};

std::string_view SupportBoundName(SupportBoundKind kind);

struct SupportBound {
  SupportBoundKind kind = SupportBoundKind::kUnbounded;
  // The support equals the bound rather than being contained in it.
  bool exact = false;
};

// One cell of the bound table: rows by key relation, columns by which
// defaults absorb.
SupportBoundKind BoundCell(KeyRelation relation, JoinZeroFlags flags);

// Bound for a join whose shared value attributes have the given zero
// behavior. Each attribute contributes its own cell; the result is the
// loosest of them. With no shared value attributes the result has no values
// and the tightest bound applies. `zero_product` marks the bound as exact
// when every attribute shares one cell.
SupportBound JoinSupportBound(const TableSchema& a, const TableSchema& b,
                              const std::map<std::string, JoinZeroFlags>& flags,
                              bool zero_product = false);

// Same, deriving flags and the zero-product declaration from the join
// operators and the operands' defaults.
SupportBound JoinSupportBound(const TableSchema& a, const TableSchema& b,
                              const OpMap& times);

}  // namespace lara

#endif  // LARA_REWRITE_SUPPORT_BOUND_H_
