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

#ifndef LARA_PLAN_PLAN_H_
#define LARA_PLAN_PLAN_H_

#include <exception>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lara/algebra/binary_op.h"
#include "lara/plan/ext_catalog.h"
#include "lara/table/error.h"
#include "lara/table/table.h"

namespace lara {

enum class PlanKind { kTableRef, kUnion, kStrictJoin, kRelaxedJoin, kExt, kEmpty };

// Schemas of the named tables a plan may reference.
using SchemaEnv = std::map<std::string, TableSchema>;
// Tables bound to those names at evaluation time.
using TableEnv = std::map<std::string, Table>;

// An immutable expression tree over named tables. Every node carries the
// schema of its result, computed from its children when the node is built;
// ill-typed combinations throw at construction.
class Plan {
 public:
  static Plan TableRef(std::string name, TableSchema schema);
  static Plan Union(Plan a, Plan b, OpMap plus);
  static Plan StrictJoin(Plan a, Plan b, OpMap times);
  static Plan RelaxedJoin(Plan a, Plan b, OpMap times);
  static Plan Ext(Plan input, ExtCall call,
                  const ExtCatalog& catalog = ExtCatalog::Builtins());
  // E_K: keys only, no values, empty support.
  static Plan Empty(std::vector<KeyAttribute> keys);

  PlanKind kind() const { return node_->kind; }
  const TableSchema& schema() const { return node_->schema; }
  const std::string& table_name() const { return node_->name; }
  const OpMap& ops() const { return node_->ops; }
  const ExtCall& ext_call() const { return node_->ext; }
  const ExtCatalog& catalog() const { return *node_->catalog; }
  const std::vector<Plan>& children() const { return node_->children; }
  const Plan& left() const { return node_->children.at(0); }
  const Plan& right() const { return node_->children.at(1); }

  // Number of nodes in the tree.
  size_t Size() const;

 private:
  struct Node {
    PlanKind kind;
    TableSchema schema;
    std::string name;
    OpMap ops;
    ExtCall ext;
    const ExtCatalog* catalog = nullptr;
    std::vector<Plan> children;
  };

  explicit Plan(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// A failure while evaluating one plan node. `node()` is the node's text and
// `cause()` the underlying diagnostic.
class PlanEvaluationError : public LaraError {
 public:
  PlanEvaluationError(std::string node, std::exception_ptr cause,
                      const std::string& what)
      : LaraError("in " + node + ": " + what),
        node_(std::move(node)),
        cause_(std::move(cause)) {}

  const std::string& node() const { return node_; }
  const std::exception_ptr& cause() const { return cause_; }

 private:
  std::string node_;
  std::exception_ptr cause_;
};

// Evaluates `plan` over `tables`. Each referenced table must be bound and
// have the schema the plan was built with. Diagnostics from the node where
// evaluation fails come wrapped in PlanEvaluationError.
Table Evaluate(const Plan& plan, const TableEnv& tables);

}  // namespace lara

#endif  // LARA_PLAN_PLAN_H_
