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

#include "lara/algebra/join.h"

#include <map>
#include <set>

#include "lara/algebra/ext.h"
#include "lara/table/error.h"

namespace lara {

namespace {

void CheckJoinRoles(const TableSchema& a, const TableSchema& b) {
  for (const auto& k : a.keys()) {
    if (b.HasValue(k.name)) {
      throw SchemaError("join: key '" + k.name +
                        "' of the left operand is a value of the right");
    }
    if (auto j = b.KeyIndex(k.name); j && b.keys()[*j].kind != k.kind) {
      throw SchemaError("join: key '" + k.name + "' has different kinds");
    }
  }
  for (const auto& k : b.keys()) {
    if (a.HasValue(k.name)) {
      throw SchemaError("join: key '" + k.name +
                        "' of the right operand is a value of the left");
    }
  }
}

// Where each result key attribute comes from in the operand keys.
struct KeySource {
  std::optional<size_t> in_a;
  std::optional<size_t> in_b;
};

struct JoinPlan {
  TableSchema schema;
  std::vector<BinaryOp> ops;
  std::vector<size_t> value_in_a;
  std::vector<size_t> value_in_b;
  std::vector<KeySource> keys;
  // Indices into A's and B's keys of the shared key attributes.
  std::vector<size_t> shared_in_a;
  std::vector<size_t> shared_in_b;
};

JoinPlan MakePlan(const TableSchema& a, const TableSchema& b,
                  const OpMap& times) {
  CheckJoinRoles(a, b);
  JoinPlan p;
  std::vector<KeyAttribute> keys = a.keys();
  for (size_t i = 0; i < a.key_count(); ++i) {
    auto j = b.KeyIndex(a.keys()[i].name);
    p.keys.push_back({i, j});
    if (j) {
      p.shared_in_a.push_back(i);
      p.shared_in_b.push_back(*j);
    }
  }
  for (size_t j = 0; j < b.key_count(); ++j) {
    if (a.HasKey(b.keys()[j].name)) continue;
    keys.push_back(b.keys()[j]);
    p.keys.push_back({std::nullopt, j});
  }
  std::vector<ValueAttribute> values;
  for (size_t i = 0; i < a.value_count(); ++i) {
    const ValueAttribute& va = a.values()[i];
    auto j = b.ValueIndex(va.name);
    if (!j) continue;
    const ValueAttribute& vb = b.values()[*j];
    BinaryOp op = times.Resolve(va.name, va.default_value);
    Scalar zero = op(va.default_value, vb.default_value);
    values.push_back({va.name, zero.kind(), zero});
    p.ops.push_back(std::move(op));
    p.value_in_a.push_back(i);
    p.value_in_b.push_back(*j);
  }
  p.schema = TableSchema(std::move(keys), std::move(values));
  return p;
}

Tuple Project(const Tuple& t, const std::vector<size_t>& idx) {
  Tuple out;
  out.reserve(idx.size());
  for (size_t i : idx) out.push_back(t[i]);
  return out;
}

}  // namespace

TableSchema StrictJoinSchema(const TableSchema& a, const TableSchema& b,
                             const OpMap& times) {
  return MakePlan(a, b, times).schema;
}

Table StrictJoin(const Table& a, const Table& b, const OpMap& times) {
  SupportBound bound = JoinSupportBound(a.schema(), b.schema(), times);
  if (bound.kind == SupportBoundKind::kUnbounded) {
    throw UnboundedJoinError(
        "strict join of " + a.schema().ToString() + " and " +
        b.schema().ToString() + " under " + times.ToString() +
        " has unbounded support: the defaults do not absorb for this key "
        "relationship");
  }
  return StrictJoinWithBound(a, b, times, bound.kind);
}

Table StrictJoinWithBound(const Table& a, const Table& b, const OpMap& times,
                          SupportBoundKind bound) {
  JoinPlan p = MakePlan(a.schema(), b.schema(), times);
  TableBuilder builder(p.schema);
  if (p.ops.empty()) return builder.Build();

  auto emit = [&](const Tuple* ka, const Tuple* kb, const Tuple& va,
                  const Tuple& vb) {
    Tuple key;
    key.reserve(p.keys.size());
    for (const auto& src : p.keys) {
      key.push_back(src.in_a && ka ? (*ka)[*src.in_a] : (*kb)[*src.in_b]);
    }
    Tuple values;
    values.reserve(p.ops.size());
    for (size_t i = 0; i < p.ops.size(); ++i) {
      values.push_back(p.ops[i](va[p.value_in_a[i]], vb[p.value_in_b[i]]));
    }
    builder.Add(std::move(key), std::move(values));
  };

  switch (bound) {
    case SupportBoundKind::kSubsetIntersection:
    case SupportBoundKind::kSubsetProduct: {
      std::map<Tuple, std::vector<std::pair<const Tuple*, const Tuple*>>> by_shared;
      for (const auto& [k, v] : b.rows()) {
        if (!b.IsDefault(v)) by_shared[Project(k, p.shared_in_b)].push_back({&k, &v});
      }
      for (const auto& [k, v] : a.rows()) {
        if (a.IsDefault(v)) continue;
        auto it = by_shared.find(Project(k, p.shared_in_a));
        if (it == by_shared.end()) continue;
        for (const auto& [kb, vb] : it->second) emit(&k, kb, v, *vb);
      }
      break;
    }
    case SupportBoundKind::kSubsetA: {
      // Every key of B is a key of A.
      std::vector<size_t> b_from_a;
      for (const auto& kb : b.schema().keys()) {
        b_from_a.push_back(*a.schema().KeyIndex(kb.name));
      }
      for (const auto& [k, v] : a.rows()) {
        if (a.IsDefault(v)) continue;
        Tuple kb = Project(k, b_from_a);
        emit(&k, &kb, v, b.LookupTuple(kb));
      }
      break;
    }
    case SupportBoundKind::kSubsetB: {
      std::vector<size_t> a_from_b;
      for (const auto& ka : a.schema().keys()) {
        a_from_b.push_back(*b.schema().KeyIndex(ka.name));
      }
      for (const auto& [k, v] : b.rows()) {
        if (b.IsDefault(v)) continue;
        Tuple ka = Project(k, a_from_b);
        emit(&ka, &k, a.LookupTuple(ka), v);
      }
      break;
    }
    case SupportBoundKind::kSubsetUnion: {
      // Equal key headers; visit each key of either support once.
      std::vector<size_t> a_from_b;
      for (const auto& ka : a.schema().keys()) {
        a_from_b.push_back(*b.schema().KeyIndex(ka.name));
      }
      std::vector<size_t> b_from_a;
      for (const auto& kb : b.schema().keys()) {
        b_from_a.push_back(*a.schema().KeyIndex(kb.name));
      }
      std::set<Tuple> keys_in_a_order;
      for (const auto& [k, v] : a.rows()) {
        if (!a.IsDefault(v)) keys_in_a_order.insert(k);
      }
      for (const auto& [k, v] : b.rows()) {
        if (!b.IsDefault(v)) keys_in_a_order.insert(Project(k, a_from_b));
      }
      for (const auto& ka : keys_in_a_order) {
        Tuple kb = Project(ka, b_from_a);
        emit(&ka, &kb, a.LookupTuple(ka), b.LookupTuple(kb));
      }
      break;
    }
    case SupportBoundKind::kUnbounded:
      throw UnboundedJoinError("cannot enumerate an unbounded strict join");
  }
  return builder.Build();
}

BinaryOp KeepLeftWhereIndicated(const Scalar& zero) {
  BinaryOp op;
  op.name = "keep-left";
  op.role = OpRole::kTimes;
  op.apply = [zero](const Scalar& a, const Scalar& indicator) {
    return indicator.Truthy() ? a : zero;
  };
  op.zero_flags = [](const Scalar&, const Scalar&) {
    return JoinZeroFlags{true, true};
  };
  return op;
}

BinaryOp KeepRightWhereIndicated(const Scalar& zero) {
  BinaryOp op;
  op.name = "keep-right";
  op.role = OpRole::kTimes;
  op.apply = [zero](const Scalar& indicator, const Scalar& b) {
    return indicator.Truthy() ? b : zero;
  };
  op.zero_flags = [](const Scalar&, const Scalar&) {
    return JoinZeroFlags{true, true};
  };
  return op;
}

bool RelaxedJoinIsStrict(const TableSchema& a, const TableSchema& b) {
  for (const auto& v : a.values()) {
    if (b.HasKey(v.name) || !b.HasValue(v.name)) return false;
  }
  for (const auto& v : b.values()) {
    if (a.HasKey(v.name) || !a.HasValue(v.name)) return false;
  }
  return true;
}

Table RelaxedJoin(const Table& a, const Table& b, const OpMap& times) {
  std::set<std::string> taken = a.schema().KeyNames();
  for (const auto& n : a.schema().ValueNames()) taken.insert(n);
  for (const auto& n : b.schema().KeyNames()) taken.insert(n);
  for (const auto& n : b.schema().ValueNames()) taken.insert(n);

  std::vector<std::string> indicators;
  auto promote_into_keys_of = [&](Table t, const TableSchema& other) {
    for (const auto& v : t.schema().ValueNameList()) {
      if (!other.HasKey(v)) continue;
      std::string ind = FreshName(v + "'", taken);
      taken.insert(ind);
      indicators.push_back(ind);
      t = Promote(t, v, ind);
    }
    return t;
  };
  Table pa = promote_into_keys_of(a, b.schema());
  Table pb = promote_into_keys_of(b, pa.schema());

  std::set<std::string> shared;
  std::vector<std::string> only_a, only_b;
  for (const auto& v : pa.schema().values()) {
    if (pb.schema().HasValue(v.name)) {
      shared.insert(v.name);
    } else {
      only_a.push_back(v.name);
    }
  }
  for (const auto& v : pb.schema().values()) {
    if (!pa.schema().HasValue(v.name)) only_b.push_back(v.name);
  }

  std::map<std::string, BinaryOp> per_attr;
  for (const auto& n : shared) {
    per_attr.emplace(n, times.Resolve(n, pa.schema().Value(n).default_value));
  }
  for (const auto& n : only_a) {
    per_attr.emplace(n, KeepLeftWhereIndicated(pa.schema().Value(n).default_value));
  }
  for (const auto& n : only_b) {
    per_attr.emplace(n, KeepRightWhereIndicated(pb.schema().Value(n).default_value));
  }
  Table ia = SupOne(pa, only_b);
  Table ib = SupOne(pb, only_a);
  Table joined = StrictJoin(ia, ib, OpMap(std::move(per_attr)));
  if (indicators.empty()) return joined;

  std::set<std::string> drop(indicators.begin(), indicators.end());
  std::vector<std::string> keep;
  for (const auto& v : joined.schema().values()) {
    if (!drop.count(v.name)) keep.push_back(v.name);
  }
  return ProjectValues(joined, keep);
}

TableSchema RelaxedJoinSchema(const TableSchema& a, const TableSchema& b,
                              const OpMap& times) {
  return RelaxedJoin(Table(a), Table(b), times).schema();
}

}  // namespace lara
