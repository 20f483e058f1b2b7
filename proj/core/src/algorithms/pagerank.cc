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

#include "lara/algorithms/pagerank.h"

#include <random>

#include "lara/algebra/ext.h"
#include "lara/algebra/join.h"
#include "lara/algebra/registry.h"
#include "lara/algebra/union.h"
#include "lara/table/error.h"

namespace lara {

namespace {

const char kVal[] = "val";

// Checks the (src, dst; val) shape and converts val to a real.
Table Normalized(const Table& s, const char* which) {
  const TableSchema& schema = s.schema();
  if (schema.key_count() != 2 || !schema.HasKey("src") ||
      !schema.HasKey("dst") || schema.value_count() != 1) {
    throw SchemaError(std::string("pagerank: ") + which +
                      " must have schema (src, dst; val), got " +
                      schema.ToString());
  }
  const ValueAttribute& v = schema.values()[0];
  if (!v.default_value.is_numeric() || v.default_value.Truthy()) {
    throw SchemaError(std::string("pagerank: ") + which +
                      " needs a numeric value with default 0");
  }
  if (schema.Key("src").kind != schema.Key("dst").kind) {
    throw SchemaError("pagerank: src and dst must have the same kind");
  }
  return MapNonZero(
      s, {{kVal, ScalarKind::kReal, Scalar(0.0)}},
      [name = v.name](const Record& row) {
        return Tuple{Scalar(row.Get(name).AsReal())};
      },
      "real");
}

Table Ones(const Table& t, ScalarKind kind = ScalarKind::kInt) {
  Scalar zero = kind == ScalarKind::kInt ? Scalar(0) : Scalar(0.0);
  Scalar one = kind == ScalarKind::kInt ? Scalar(1) : Scalar(1.0);
  return MapNonZero(t, {{kVal, kind, zero}},
                    [one](const Record&) { return Tuple{one}; }, "one");
}

Table ScaleValues(const Table& t, double factor) {
  return MapNonZero(
      t, {{kVal, ScalarKind::kReal, Scalar(0.0)}},
      [factor](const Record& row) {
        return Tuple{Scalar(row.Get(kVal).AsReal() * factor)};
      },
      "scale");
}

}  // namespace

PageRankResult JointPageRank(const Table& s1_in, const Table& s2_in,
                             const PageRankParams& params) {
  if (!(params.c > 0 && params.c < 1)) {
    throw DomainError("pagerank: c must lie strictly between 0 and 1");
  }
  if (params.iterations < 0) {
    throw DomainError("pagerank: iterations must be nonnegative");
  }
  Table s1 = Normalized(s1_in, "S1");
  Table s2 = Normalized(s2_in, "S2");
  const KeyAttribute src = s1.schema().Key("src");
  const KeyAttribute dst = s1.schema().Key("dst");
  OpMap plus(ops::Plus());
  OpMap times(ops::Times());
  OpMap divide(ops::SafeDivide());
  OpMap any(ops::Or());

  PageRankResult out;
  out.common = StrictJoin(Union(Ones(s1), EmptyTable({src}), any),
                          Union(Ones(s2), EmptyTable({src}), any),
                          OpMap(ops::And()));

  // Edges present in both networks average their weights: sum the weights
  // alongside a count, then divide.
  Table f1 = SupOne(StrictJoin(s1, out.common, times), {"n"});
  Table f2 = SupOne(StrictJoin(s2, out.common, times), {"n"});
  Table merged = Union(f1, f2, plus);
  Table adjacency = MapNonZero(
      merged, {{kVal, ScalarKind::kReal, Scalar(0.0)}},
      [](const Record& row) {
        return Tuple{Scalar(row.Get(kVal).AsReal() /
                            static_cast<double>(row.Get("n").AsInt()))};
      },
      "avg");

  Table out_degree = Union(adjacency, EmptyTable({src}), plus);
  Table inverse_degree = MapNonZero(
      out_degree, out_degree.schema().values(),
      [](const Record& row) {
        return Tuple{Scalar(1.0 / row.Get(kVal).AsReal())};
      },
      "inverse");
  out.adjacency = StrictJoin(adjacency, inverse_degree, times);

  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Table targets = Union(Ones(out.adjacency), EmptyTable({dst}), any);
  Table r = MapNonZero(
      targets, {{kVal, ScalarKind::kReal, Scalar(0.0)}},
      [&](const Record&) {
        double x = 0.0;
        while (x == 0.0) x = unit(rng);
        return Tuple{Scalar(x)};
      },
      "rand");
  r = StrictJoin(r, Union(r, EmptyTable({}), plus), divide);
  out.initial = r;
  out.restart = StrictJoin(ScaleValues(Ones(r, ScalarKind::kReal), 1 - params.c),
                           Union(Ones(r), EmptyTable({}), plus), divide);

  for (int i = 0; i < params.iterations; ++i) {
    Table by_src = RenameAttributes(ScaleValues(r, params.c), {{"dst", "src"}});
    r = Union(StrictJoin(out.adjacency, by_src, times), out.restart, plus);
  }
  out.rank = r;
  return out;
}

}  // namespace lara
