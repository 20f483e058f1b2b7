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

#ifndef LARA_REWRITE_UNION_STRATEGY_H_
#define LARA_REWRITE_UNION_STRATEGY_H_

#include "lara/algebra/binary_op.h"
#include "lara/algebra/union.h"

namespace lara {

// The most parallel union strategy the declared properties of `op` allow:
//   identity only                    -> kLinearOrdered
//   + associative                    -> kParallelDisjointOrdered
//   + commutative                    -> kParallelUnordered
//   + idempotent                     -> kOverlapTolerant
// Throws OperatorError when `op` declares no identity.
UnionStrategy ChooseUnionStrategy(const BinaryOp& op);

// The strategy valid for every attribute of a union over `schema`.
UnionStrategy ChooseUnionStrategy(const OpMap& plus, const TableSchema& schema);

}  // namespace lara

#endif  // LARA_REWRITE_UNION_STRATEGY_H_
