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

#include "lara/plan/plan.h"

#include <vector>

#include "lara/algebra/join.h"
#include "lara/algebra/union.h"
#include "lara/plan/plan_format.h"
#include "lara/rewrite/support_bound.h"
#include "lara/table/error.h"

namespace lara {

Plan Plan::TableRef(std::string name, TableSchema schema) {
  return Plan(std::make_shared<const Node>(
      Node{PlanKind::kTableRef, std::move(schema), std::move(name), {}, {},
           nullptr, {}}));
}

Plan Plan::Union(Plan a, Plan b, OpMap plus) {
  TableSchema s = UnionSchema(a.schema(), b.schema(), plus);
  return Plan(std::make_shared<const Node>(Node{
      PlanKind::kUnion, std::move(s), "", std::move(plus), {}, nullptr,
      {std::move(a), std::move(b)}}));
}

Plan Plan::StrictJoin(Plan a, Plan b, OpMap times) {
  TableSchema s = StrictJoinSchema(a.schema(), b.schema(), times);
  SupportBound bound = JoinSupportBound(a.schema(), b.schema(), times);
  if (bound.kind == SupportBoundKind::kUnbounded) {
    throw UnboundedJoinError("strict join of " + a.schema().ToString() +
                             " and " + b.schema().ToString() + " under " +
                             times.ToString() + " has unbounded support");
  }
  return Plan(std::make_shared<const Node>(Node{
      PlanKind::kStrictJoin, std::move(s), "", std::move(times), {}, nullptr,
      {std::move(a), std::move(b)}}));
}

Plan Plan::RelaxedJoin(Plan a, Plan b, OpMap times) {
  TableSchema s = RelaxedJoinSchema(a.schema(), b.schema(), times);
  return Plan(std::make_shared<const Node>(Node{
      PlanKind::kRelaxedJoin, std::move(s), "", std::move(times), {}, nullptr,
      {std::move(a), std::move(b)}}));
}

Plan Plan::Ext(Plan input, ExtCall call, const ExtCatalog& catalog) {
  TableSchema s = catalog.ResultSchema(input.schema(), call);
  return Plan(std::make_shared<const Node>(Node{PlanKind::kExt, std::move(s),
                                                "", {}, std::move(call),
                                                &catalog, {std::move(input)}}));
}

Plan Plan::Empty(std::vector<KeyAttribute> keys) {
  return Plan(std::make_shared<const Node>(
      Node{PlanKind::kEmpty, TableSchema(std::move(keys), {}), "", {}, {},
           nullptr, {}}));
}

size_t Plan::Size() const {
  size_t n = 1;
  for (const auto& c : children()) n += c.Size();
  return n;
}

namespace {

Table EvaluateNode(const Plan& plan, const std::vector<Table>& inputs,
                   const TableEnv& tables) {
  switch (plan.kind()) {
    case PlanKind::kTableRef: {
      auto it = tables.find(plan.table_name());
      if (it == tables.end()) {
        throw SchemaError("table '" + plan.table_name() + "' is not bound");
      }
      if (!(it->second.schema() == plan.schema())) {
        throw SchemaError("table '" + plan.table_name() + "' has schema " +
                          it->second.schema().ToString() + ", plan expects " +
                          plan.schema().ToString());
      }
      return it->second;
    }
    case PlanKind::kUnion:
      return Union(inputs[0], inputs[1], plan.ops());
    case PlanKind::kStrictJoin:
      return StrictJoin(inputs[0], inputs[1], plan.ops());
    case PlanKind::kRelaxedJoin:
      return RelaxedJoin(inputs[0], inputs[1], plan.ops());
    case PlanKind::kExt:
      return plan.catalog().Apply(inputs[0], plan.ext_call());
    case PlanKind::kEmpty:
      return Table(plan.schema());
  }
  throw LaraError("unknown plan node");
}

}  // namespace

Table Evaluate(const Plan& plan, const TableEnv& tables) {
  std::vector<Table> inputs;
  for (const auto& c : plan.children()) inputs.push_back(Evaluate(c, tables));
  try {
    return EvaluateNode(plan, inputs, tables);
  } catch (const LaraError& e) {
    throw PlanEvaluationError(SerializePlan(plan), std::current_exception(),
                              e.what());
  }
}

}  // namespace lara
