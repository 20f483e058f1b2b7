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

#include "lara/rewrite/union_strategy.h"

#include <algorithm>

#include "lara/table/error.h"

namespace lara {

UnionStrategy ChooseUnionStrategy(const BinaryOp& op) {
  if (!op.identity) {
    throw OperatorError("union operator '" + op.name +
                        "' declares no identity; no strategy applies");
  }
  const OpProperties& p = op.properties;
  if (!p.associative) return UnionStrategy::kLinearOrdered;
  if (!p.commutative) return UnionStrategy::kParallelDisjointOrdered;
  if (!p.idempotent) return UnionStrategy::kParallelUnordered;
  return UnionStrategy::kOverlapTolerant;
}

UnionStrategy ChooseUnionStrategy(const OpMap& plus, const TableSchema& schema) {
  UnionStrategy best = UnionStrategy::kOverlapTolerant;
  for (const auto& v : schema.values()) {
    best = std::min(best, ChooseUnionStrategy(plus.Resolve(v.name, v.default_value)));
  }
  return best;
}

}  // namespace lara
