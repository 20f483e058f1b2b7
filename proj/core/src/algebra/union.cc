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

#include "lara/algebra/union.h"

#include <algorithm>
#include <map>
#include <optional>
#include <random>

#include "lara/table/error.h"

namespace lara {

namespace {

Scalar TreeReduce(std::vector<Scalar> xs, const BinaryOp& op) {
  while (xs.size() > 1) {
    std::vector<Scalar> next;
    next.reserve((xs.size() + 1) / 2);
    for (size_t i = 0; i + 1 < xs.size(); i += 2) {
      next.push_back(op(xs[i], xs[i + 1]));
    }
    if (xs.size() % 2 == 1) next.push_back(xs.back());
    xs = std::move(next);
  }
  return xs.front();
}

void RequireProperties(const BinaryOp& op, UnionStrategy strategy) {
  const OpProperties& p = op.properties;
  bool ok = true;
  switch (strategy) {
    case UnionStrategy::kLinearOrdered:
      break;
    case UnionStrategy::kParallelDisjointOrdered:
      ok = p.associative;
      break;
    case UnionStrategy::kParallelUnordered:
    case UnionStrategy::kOverlapTolerant:
      ok = p.associative && p.commutative;
      break;
  }
  if (!ok) {
    throw OperatorError("strategy " + std::string(UnionStrategyName(strategy)) +
                        " is not valid for operator '" + op.name + "'");
  }
}

// Shared key attributes of A and B, in A's order.
std::vector<KeyAttribute> SharedKeys(const TableSchema& a,
                                     const TableSchema& b) {
  std::vector<KeyAttribute> out;
  for (const auto& k : a.keys()) {
    if (auto j = b.KeyIndex(k.name)) {
      if (b.keys()[*j].kind != k.kind) {
        throw SchemaError("key attribute '" + k.name +
                          "' has different kinds in the union operands");
      }
      out.push_back(k);
    }
  }
  return out;
}

void CheckRoles(const TableSchema& a, const TableSchema& b) {
  for (const auto& k : a.keys()) {
    if (b.HasValue(k.name)) {
      throw SchemaError("'" + k.name +
                        "' is a key on the left and a value on the right");
    }
  }
  for (const auto& k : b.keys()) {
    if (a.HasValue(k.name)) {
      throw SchemaError("'" + k.name +
                        "' is a key on the right and a value on the left");
    }
  }
}

}  // namespace

std::string_view UnionStrategyName(UnionStrategy s) {
  switch (s) {
    case UnionStrategy::kLinearOrdered:
      return "linear-ordered";
    case UnionStrategy::kParallelDisjointOrdered:
      return "parallel-disjoint-ordered";
    case UnionStrategy::kParallelUnordered:
      return "parallel-unordered";
    case UnionStrategy::kOverlapTolerant:
      return "overlap-tolerant";
  }
  return "?";
}

TableSchema UnionSchema(const TableSchema& a, const TableSchema& b,
                        const OpMap& plus) {
  CheckRoles(a, b);
  std::vector<KeyAttribute> keys = SharedKeys(a, b);
  std::vector<ValueAttribute> values = a.values();
  for (const auto& v : b.values()) {
    auto i = a.ValueIndex(v.name);
    if (!i) {
      values.push_back(v);
      continue;
    }
    const ValueAttribute& va = a.values()[*i];
    if (va.kind != v.kind || !(va.default_value == v.default_value)) {
      throw SchemaError("value attribute '" + v.name +
                        "' differs between union operands: " +
                        std::string(KindName(va.kind)) + " [" +
                        va.default_value.ToString() + "] vs " +
                        std::string(KindName(v.kind)) + " [" +
                        v.default_value.ToString() + "]");
    }
  }
  for (const auto& v : values) {
    BinaryOp op = plus.Resolve(v.name, v.default_value);
    if (!op.identity) {
      throw OperatorError("union operator '" + op.name + "' for '" + v.name +
                          "' declares no identity");
    }
    if (!(*op.identity == v.default_value)) {
      throw OperatorError("default " + v.default_value.ToString() + " of '" +
                          v.name + "' is not the identity " +
                          op.identity->ToString() + " of '" + op.name + "'");
    }
  }
  return TableSchema(std::move(keys), std::move(values));
}

Scalar FoldValues(const std::vector<Scalar>& xs, const BinaryOp& op,
                  const Scalar& zero, UnionStrategy strategy) {
  if (xs.empty()) return zero;
  switch (strategy) {
    case UnionStrategy::kLinearOrdered: {
      Scalar acc = zero;
      for (auto it = xs.rbegin(); it != xs.rend(); ++it) acc = op(*it, acc);
      return acc;
    }
    case UnionStrategy::kParallelDisjointOrdered:
      return TreeReduce(xs, op);
    case UnionStrategy::kParallelUnordered: {
      std::vector<Scalar> shuffled = xs;
      std::mt19937_64 rng(0x5eed + xs.size());
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      return TreeReduce(std::move(shuffled), op);
    }
    case UnionStrategy::kOverlapTolerant: {
      // Chunks of three; neighbouring chunks share one element when the
      // operator tolerates double counting.
      const size_t step = op.properties.idempotent ? 2 : 3;
      std::vector<Scalar> partials;
      for (size_t start = 0; start < xs.size(); start += step) {
        size_t end = std::min(xs.size(), start + 3);
        Scalar acc = xs[start];
        for (size_t i = start + 1; i < end; ++i) acc = op(acc, xs[i]);
        partials.push_back(acc);
        if (end == xs.size()) break;
      }
      std::reverse(partials.begin(), partials.end());
      return TreeReduce(std::move(partials), op);
    }
  }
  return zero;
}

Table Union(const Table& a, const Table& b, const OpMap& plus,
            UnionStrategy strategy) {
  TableSchema schema = UnionSchema(a.schema(), b.schema(), plus);
  const size_t nv = schema.value_count();

  std::vector<BinaryOp> ops;
  std::vector<std::optional<size_t>> from_a(nv), from_b(nv);
  for (size_t i = 0; i < nv; ++i) {
    const ValueAttribute& v = schema.values()[i];
    ops.push_back(plus.Resolve(v.name, v.default_value));
    RequireProperties(ops.back(), strategy);
    from_a[i] = a.schema().ValueIndex(v.name);
    from_b[i] = b.schema().ValueIndex(v.name);
  }

  auto project = [&](const Table& t) {
    std::vector<size_t> idx;
    for (const auto& k : schema.keys()) idx.push_back(*t.schema().KeyIndex(k.name));
    return idx;
  };
  const std::vector<size_t> key_a = project(a);
  const std::vector<size_t> key_b = project(b);

  struct Group {
    std::vector<const Tuple*> a_rows;
    std::vector<const Tuple*> b_rows;
  };
  std::map<Tuple, Group> groups;
  auto collect = [&](const Table& t, const std::vector<size_t>& idx,
                     bool left) {
    for (const auto& [k, v] : t.rows()) {
      if (t.IsDefault(v)) continue;
      Tuple c;
      c.reserve(idx.size());
      for (size_t i : idx) c.push_back(k[i]);
      Group& g = groups[std::move(c)];
      (left ? g.a_rows : g.b_rows).push_back(&v);
    }
  };
  collect(a, key_a, true);
  collect(b, key_b, false);

  TableBuilder builder(schema);
  std::vector<Scalar> column;
  for (auto& [key, g] : groups) {
    Tuple values(nv);
    for (size_t i = 0; i < nv; ++i) {
      const Scalar& zero = schema.values()[i].default_value;
      auto fold_side = [&](const std::vector<const Tuple*>& rows,
                           const std::optional<size_t>& idx) {
        column.clear();
        for (const Tuple* r : rows) column.push_back((*r)[*idx]);
        return FoldValues(column, ops[i], zero, strategy);
      };
      if (from_a[i] && from_b[i]) {
        values[i] = ops[i](fold_side(g.a_rows, from_a[i]),
                           fold_side(g.b_rows, from_b[i]));
      } else if (from_a[i]) {
        values[i] = fold_side(g.a_rows, from_a[i]);
      } else {
        values[i] = fold_side(g.b_rows, from_b[i]);
      }
    }
    builder.Add(key, std::move(values));
  }
  return builder.Build();
}

}  // namespace lara
