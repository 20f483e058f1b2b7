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

#include "lara/algorithms/lu.h"

#include <algorithm>
#include <vector>

#include "lara/algebra/ext.h"
#include "lara/algebra/join.h"
#include "lara/algebra/registry.h"
#include "lara/algebra/union.h"
#include "lara/table/error.h"

namespace lara {

namespace {

TableSchema MatrixSchema() {
  return TableSchema({{"r", ScalarKind::kInt}, {"c", ScalarKind::kInt}},
                     {{"v", ScalarKind::kReal, Scalar(0.0)}});
}

double At(const Table& a, std::int64_t i, std::int64_t j) {
  return a.LookupTuple({Scalar(i), Scalar(j)})[0].AsReal();
}

}  // namespace

Table Identity(std::int64_t n) {
  TableBuilder b(MatrixSchema());
  for (std::int64_t i = 1; i <= n; ++i) b.Add({Scalar(i), Scalar(i)}, {Scalar(1.0)});
  return b.Build();
}

Table MatMul(const Table& a, const Table& b) {
  Table shifted = RenameAttributes(b, {{"c", "c'"}, {"r", "c"}});
  Table product = Union(StrictJoin(a, shifted, OpMap(ops::Times())),
                        EmptyTable({{"r", ScalarKind::kInt},
                                    {"c'", ScalarKind::kInt}}),
                        OpMap(ops::Plus()));
  return RenameAttributes(product, {{"c'", "c"}});
}

LuResult LuDecompose(const Table& input) {
  const TableSchema& s = input.schema();
  if (s.key_count() != 2 || !s.HasKey("r") || !s.HasKey("c") ||
      s.Key("r").kind != ScalarKind::kInt ||
      s.Key("c").kind != ScalarKind::kInt || s.value_count() != 1 ||
      !s.values()[0].default_value.is_numeric() ||
      s.values()[0].default_value.Truthy()) {
    throw SchemaError("lu: expected a matrix (r:int, c:int; v) with a numeric "
                      "value defaulting to 0, got " + s.ToString());
  }
  const std::string value_name = s.values()[0].name;
  Table a = MapNonZero(
      RenameAttributes(input, {{value_name, "v"}}).Reordered(
          TableSchema(MatrixSchema().keys(), {{"v", s.values()[0].kind,
                                               s.values()[0].default_value}})),
      MatrixSchema().values(),
      [](const Record& row) { return Tuple{Scalar(row.Get("v").AsReal())}; },
      "real");
  std::int64_t n = 0;
  for (const auto& k : a.Support()) {
    if (k[0].AsInt() < 1 || k[1].AsInt() < 1) {
      throw DomainError("lu: matrix indices must start at 1");
    }
    n = std::max({n, k[0].AsInt(), k[1].AsInt()});
  }

  OpMap plus(ops::Plus());
  Table lower = Identity(n);
  for (std::int64_t j = 1; j < n; ++j) {
    double pivot = At(a, j, j);
    if (pivot == 0.0) {
      throw DomainError("lu: zero pivot at (" + std::to_string(j) + ", " +
                        std::to_string(j) + ")");
    }
    TableBuilder multipliers(MatrixSchema());
    TableBuilder negated(MatrixSchema());
    for (std::int64_t i = j + 1; i <= n; ++i) {
      double r = At(a, i, j) / pivot;
      if (r == 0.0) continue;
      multipliers.Add({Scalar(i), Scalar(j)}, {Scalar(r)});
      negated.Add({Scalar(i), Scalar(j)}, {Scalar(-r)});
    }
    lower = Union(lower, multipliers.Build(), plus);
    Table t = Union(Identity(n), negated.Build(), plus);
    a = MatMul(t, a);
    // Rounding can leave residues where column j was eliminated.
    a = Map(a, a.schema().values(), [j](const Record& row) {
      bool eliminated =
          row.Get("c").AsInt() == j && row.Get("r").AsInt() > j;
      return Tuple{eliminated ? Scalar(0.0) : row.Get("v")};
    });
  }
  return {lower, a};
}

}  // namespace lara
