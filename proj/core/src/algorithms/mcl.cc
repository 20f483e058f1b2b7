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

#include "lara/algorithms/mcl.h"

#include <cmath>

#include "lara/algebra/ext.h"
#include "lara/algebra/join.h"
#include "lara/algebra/registry.h"
#include "lara/algebra/union.h"
#include "lara/table/error.h"

namespace lara {

namespace {

Table Valued(const Table& t, const std::string& name,
             double (*f)(const Record&)) {
  return MapNonZero(t, {{name, ScalarKind::kReal, Scalar(0.0)}},
                    [f](const Record& row) { return Tuple{Scalar(f(row))}; },
                    name);
}

double Square(const Record& row) {
  double v = row.Get("value").AsReal();
  return v * v;
}

}  // namespace

MclResult Mcl(const Table& matrix, const MclParams& params) {
  const TableSchema& s = matrix.schema();
  if (s.key_count() != 2 || s.value_count() != 1 ||
      !s.values()[0].default_value.is_numeric() ||
      s.values()[0].default_value.Truthy()) {
    throw SchemaError("mcl: expected a matrix (row, col; value) with a "
                      "numeric value defaulting to 0, got " + s.ToString());
  }
  if (s.keys()[0].kind != s.keys()[1].kind) {
    throw SchemaError("mcl: row and column keys must have the same kind");
  }
  if (params.prune_limit < 0) throw DomainError("mcl: prunelimit must be >= 0");
  if (!(params.epsilon > 0)) throw DomainError("mcl: epsilon must be > 0");

  const std::string row_name = s.keys()[0].name;
  const std::string col_name = s.keys()[1].name;
  const ScalarKind kind = s.keys()[0].kind;
  const std::string value_name = s.values()[0].name;

  Table mat = MapNonZero(
      RenameAttributes(matrix, {{row_name, "row"}, {col_name, "col"},
                                {value_name, "value"}}),
      {{"value", ScalarKind::kReal, Scalar(0.0)}},
      [](const Record& row) { return Tuple{Scalar(row.Get("value").AsReal())}; },
      "real");

  OpMap plus(ops::Plus());
  OpMap max(ops::Max0());
  const double limit = params.prune_limit;

  MclResult out;
  double new_chaos = 1000;
  double old_chaos;
  int iteration = 0;
  do {
    old_chaos = new_chaos;
    Table shifted = RenameAttributes(mat, {{"col", "col'"}, {"row", "col"}});
    Table product =
        Union(StrictJoin(mat, shifted, OpMap(ops::Times())),
              EmptyTable({{"row", kind}, {"col'", kind}}), plus);
    Table axa = RenameAttributes(product, {{"col'", "col"}});
    Table square = Valued(axa, "value", Square);
    Table colsums = Union(square, EmptyTable({{"col", kind}}), plus);
    Table temp = StrictJoin(square, colsums, OpMap(ops::SafeDivide()));
    Table pruned = MapNonZero(
        temp, temp.schema().values(),
        [limit](const Record& row) {
          double v = row.Get("value").AsReal();
          return Tuple{Scalar(v > limit ? v : 0.0)};
        },
        "prune");
    Table colssqs = Union(Valued(pruned, "sumSquare", Square),
                          EmptyTable({{"col", kind}}), plus);
    Table colmaxs = Valued(
        Union(pruned, EmptyTable({{"col", kind}}), max), "maxVal",
        [](const Record& row) { return row.Get("value").AsReal(); });
    Table gaps = Valued(
        RelaxedJoin(colmaxs, colssqs, OpMap(ops::Times())), "value",
        [](const Record& row) {
          return row.Get("maxVal").AsReal() - row.Get("sumSquare").AsReal();
        });
    new_chaos = Union(gaps, EmptyTable({}), max).LookupTuple({})[0].AsReal();
    out.chaos.push_back(new_chaos);
    mat = pruned;
    ++iteration;
  } while (old_chaos - new_chaos > params.epsilon &&
           iteration < params.max_iterations);
  out.converged = !(old_chaos - new_chaos > params.epsilon);

  out.matrix = RenameAttributes(
      mat, {{"row", row_name}, {"col", col_name}, {"value", value_name}});
  return out;
}

}  // namespace lara
