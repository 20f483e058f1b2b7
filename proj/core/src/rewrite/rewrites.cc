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

#include "lara/rewrite/rewrites.h"

#include <set>
#include <tuple>

#include "lara/algebra/join.h"
#include "lara/algebra/registry.h"
#include "lara/table/error.h"

namespace lara {

namespace {

RewriteResult NotApplicable(std::string reason) {
  return RewriteResult{std::nullopt, std::move(reason)};
}

bool IsStrictLike(const Plan& p) {
  if (p.kind() == PlanKind::kStrictJoin) return true;
  return p.kind() == PlanKind::kRelaxedJoin &&
         RelaxedJoinIsStrict(p.left().schema(), p.right().schema());
}

// Checks that the join operator distributes over the union operator on
// every value attribute of `join_schema`. Returns the failure, if any.
std::optional<std::string> CheckDistributes(const TableSchema& join_schema,
                                            const OpMap& times,
                                            const OpMap& plus) {
  for (const auto& v : join_schema.values()) {
    if (!times.Covers(v.name) || !plus.Covers(v.name)) {
      return "no operator pair for attribute '" + v.name + "'";
    }
    BinaryOp t = times.Resolve(v.name, v.default_value);
    BinaryOp p = plus.Resolve(v.name, v.default_value);
    if (!t.distributes_over.count(p.name)) {
      return "'" + t.name + "' is not declared to distribute over '" + p.name +
             "' on '" + v.name + "'";
    }
  }
  return std::nullopt;
}

std::set<std::string> Intersect(const std::set<std::string>& x,
                                const std::set<std::string>& y) {
  std::set<std::string> out;
  for (const auto& n : x) {
    if (y.count(n)) out.insert(n);
  }
  return out;
}

// Key attributes named in `names`, with kinds taken from the schemas.
std::vector<KeyAttribute> KeysNamed(const std::set<std::string>& names,
                                    std::initializer_list<const TableSchema*> from) {
  std::vector<KeyAttribute> out;
  for (const auto& n : names) {
    for (const TableSchema* s : from) {
      if (s->HasKey(n)) {
        out.push_back(s->Key(n));
        break;
      }
    }
  }
  return out;
}

std::set<std::string> Union(std::set<std::string> x,
                            const std::set<std::string>& y) {
  x.insert(y.begin(), y.end());
  return x;
}

}  // namespace

RewriteResult DistributeJoinOverUnion(const Plan& e) {
  if (!IsStrictLike(e)) return NotApplicable("not a strict join");
  if (e.right().kind() != PlanKind::kUnion) {
    return NotApplicable("right operand is not a union");
  }
  const Plan& a = e.left();
  const Plan& b = e.right().left();
  const Plan& c = e.right().right();
  if (auto why = CheckDistributes(e.schema(), e.ops(), e.right().ops())) {
    return NotApplicable(*why);
  }
  auto ka = a.schema().KeyNames();
  auto kb = b.schema().KeyNames();
  auto kc = c.schema().KeyNames();
  for (const auto& [x, y, z, name] :
       {std::tuple{&ka, &kb, &kc, "A and B are missing from C"},
        std::tuple{&ka, &kc, &kb, "A and C are missing from B"}}) {
    std::set<std::string> missing;
    for (const auto& n : Intersect(*x, *y)) {
      if (!z->count(n)) missing.insert(n);
    }
    if (!missing.empty()) {
      std::string list;
      for (const auto& n : missing) list += (list.empty() ? "" : ", ") + n;
      return NotApplicable("keys {" + list + "} shared by " + name);
    }
  }
  try {
    Plan out = Plan::Union(Plan::StrictJoin(a, b, e.ops()),
                           Plan::StrictJoin(a, c, e.ops()), e.right().ops());
    if (!(out.schema() == e.schema())) {
      return NotApplicable("rewritten plan has schema " + out.schema().ToString());
    }
    return RewriteResult{out, ""};
  } catch (const LaraError& err) {
    return NotApplicable(err.what());
  }
}

RewriteResult PushUnionThroughJoin(const Plan& e) {
  if (e.kind() != PlanKind::kUnion) return NotApplicable("not a union");
  const Plan& join = e.left();
  if (!IsStrictLike(join)) {
    return NotApplicable("left operand is not a strict join");
  }
  if (auto why = CheckDistributes(join.schema(), join.ops(), e.ops())) {
    return NotApplicable(*why);
  }
  const Plan& a = join.left();
  const Plan& b = join.right();
  const Plan& c = e.right();
  const TableSchema* sa = &a.schema();
  const TableSchema* sb = &b.schema();
  const TableSchema* sc = &c.schema();
  auto ka = sa->KeyNames();
  auto kb = sb->KeyNames();
  auto kc = sc->KeyNames();
  try {
    Plan a2 = Plan::Union(a, Plan::Empty(KeysNamed(Union(kc, kb), {sc, sb})),
                          e.ops());
    Plan b2 = Plan::Union(b, Plan::Empty(KeysNamed(Union(kc, ka), {sc, sa})),
                          e.ops());
    Plan c2 = Plan::Union(c, Plan::Empty(KeysNamed(Union(ka, kb), {sa, sb})),
                          e.ops());
    Plan out = Plan::Union(Plan::StrictJoin(a2, b2, join.ops()), c2, e.ops());
    if (!(out.schema() == e.schema())) {
      return NotApplicable("rewritten plan has schema " + out.schema().ToString());
    }
    return RewriteResult{out, ""};
  } catch (const LaraError& err) {
    return NotApplicable(err.what());
  }
}

Plan DecomposeRewrite(const Plan& e) {
  switch (e.kind()) {
    case PlanKind::kTableRef: {
      const auto& values = e.schema().values();
      if (values.size() <= 1) return e;
      std::optional<Plan> acc;
      for (const auto& v : values) {
        Plan part = Plan::Ext(e, ExtCall{"project", {v.name}});
        acc = acc ? Plan::Union(*acc, part, OpMap(ops::Coalesce())) : part;
      }
      return *acc;
    }
    case PlanKind::kUnion:
      return Plan::Union(DecomposeRewrite(e.left()), DecomposeRewrite(e.right()),
                         e.ops());
    case PlanKind::kStrictJoin:
      return Plan::StrictJoin(DecomposeRewrite(e.left()),
                              DecomposeRewrite(e.right()), e.ops());
    case PlanKind::kRelaxedJoin:
      return Plan::RelaxedJoin(DecomposeRewrite(e.left()),
                               DecomposeRewrite(e.right()), e.ops());
    case PlanKind::kExt:
      return Plan::Ext(DecomposeRewrite(e.left()), e.ext_call(), e.catalog());
    case PlanKind::kEmpty:
      return e;
  }
  return e;
}

}  // namespace lara
