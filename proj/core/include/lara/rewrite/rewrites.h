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

#ifndef LARA_REWRITE_REWRITES_H_
#define LARA_REWRITE_REWRITES_H_

#include <optional>
#include <string>

#include "lara/plan/plan.h"

namespace lara {

// Outcome of a rewrite attempt. A rule that does not apply is not an error:
// `plan` is empty and `reason` says which condition failed.
struct RewriteResult {
  std::optional<Plan> plan;
  std::string reason;

  bool applied() const { return plan.has_value(); }
};

// A strict-join B u C  ->  (A strict-join B) u (A strict-join C).
// Requires the join operator to distribute over the union operator for
// every result attribute, every key shared by A and B to be a key of C, and
// every key shared by A and C to be a key of B.
RewriteResult DistributeJoinOverUnion(const Plan& e);

// (A join B) u C  ->
//   ((A u E_{K_C u K_B}) join (B u E_{K_C u K_A})) u (C u E_{K_A u K_B}).
// Aggregates A and B down to the keys still needed before joining. Requires
// distributivity; a relaxed join qualifies only when it coincides with the
// strict join.
RewriteResult PushUnionThroughJoin(const Plan& e);

// A table reference with several value attributes -> union of its
// single-value projections. Other nodes are rewritten recursively; tables
// with one value attribute stay as they are.
Plan DecomposeRewrite(const Plan& e);

}  // namespace lara

#endif  // LARA_REWRITE_REWRITES_H_
