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

#ifndef LARA_PLAN_PLAN_FORMAT_H_
#define LARA_PLAN_PLAN_FORMAT_H_

#include <string>
#include <string_view>

#include "lara/algebra/registry.h"
#include "lara/plan/ext_catalog.h"
#include "lara/plan/plan.h"

namespace lara {

// Text form of plans, one S-expression per document:
//
//   (table NAME)
//   (union OPS PLAN PLAN)      aggregating union
//   (join OPS PLAN PLAN)       strict join
//   (rjoin OPS PLAN PLAN)      relaxed join
//   (ext CALL PLAN)            CALL is NAME or (NAME ARG...)
//   (empty KEY...)             KEY is NAME:KIND, or NAME to take the kind
//                              from the sibling operand or a bound table
//
// OPS is an operator name ("+") or a per-attribute map ("{v:+ w:max}").
// ';' starts a comment. Errors carry line and column.
Plan ParsePlan(std::string_view text, const SchemaEnv& tables,
               const OpRegistry& registry = OpRegistry::Builtins(),
               const ExtCatalog& catalog = ExtCatalog::Builtins());

// Canonical text; ParsePlan(SerializePlan(p)) reproduces p.
std::string SerializePlan(const Plan& plan);

}  // namespace lara

#endif  // LARA_PLAN_PLAN_FORMAT_H_
