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

#include "lara/derived/relational.h"

#include <cmath>
#include <map>
#include <optional>
#include <set>

#include "lara/algebra/ext.h"
#include "lara/algebra/join.h"
#include "lara/algebra/registry.h"
#include "lara/algebra/union.h"
#include "lara/table/error.h"

namespace lara {

namespace {

// Int indicators named `names`: 1 on the support of `t`, 0 elsewhere.
Table IndicatorOf(const Table& t, const std::vector<std::string>& names) {
  std::vector<ValueAttribute> values;
  for (const auto& n : names) values.push_back({n, ScalarKind::kInt, Scalar(0)});
  Tuple ones(names.size(), Scalar(1));
  return MapNonZero(t, values, [ones](const Record&) { return ones; },
                    "indicator");
}

std::vector<KeyAttribute> KeysNotIn(const TableSchema& s,
                                    const TableSchema& other) {
  std::vector<KeyAttribute> out;
  for (const auto& k : s.keys()) {
    if (!other.HasKey(k.name)) out.push_back(k);
  }
  return out;
}

std::vector<KeyAttribute> SharedKeys(const TableSchema& a,
                                     const TableSchema& b) {
  std::vector<KeyAttribute> out;
  for (const auto& k : a.keys()) {
    if (b.HasKey(k.name)) out.push_back(k);
  }
  return out;
}

OpMap KeepLeftOps(const TableSchema& s) {
  std::map<std::string, BinaryOp> ops;
  for (const auto& v : s.values()) {
    ops.emplace(v.name, KeepLeftWhereIndicated(v.default_value));
  }
  return OpMap(std::move(ops));
}

// Checks shared by both division algorithms; returns the shared values.
std::vector<std::string> CheckDivision(const Table& a, const Table& b,
                                       const BinaryOp& times) {
  for (const auto& k : b.schema().keys()) {
    if (!a.schema().HasKey(k.name)) {
      throw SchemaError("divide: key '" + k.name +
                        "' of the divisor is not a key of the dividend");
    }
  }
  std::vector<std::string> shared;
  for (const auto& v : a.schema().values()) {
    if (b.schema().HasValue(v.name)) shared.push_back(v.name);
  }
  if (shared.empty()) {
    throw SchemaError("divide: the operands share no value attribute");
  }
  if (!times.inverse) {
    throw OperatorError("divide: operator '" + times.name +
                        "' declares no inverse");
  }
  return shared;
}

Table InvertValues(const Table& b, const BinaryOp& times) {
  const TableSchema& s = b.schema();
  TableBuilder out(s);
  for (const auto& [k, v] : b.rows()) {
    if (b.IsDefault(v)) continue;
    Tuple inv;
    for (size_t i = 0; i < v.size(); ++i) {
      const Scalar& zero = s.values()[i].default_value;
      if (v[i] == zero) {
        inv.push_back(zero);
        continue;
      }
      Scalar x = times.inverse(v[i]);
      if (x.is_numeric() && !std::isfinite(x.AsReal())) {
        throw DomainError("divide: value " + v[i].ToString() + " of '" +
                          s.values()[i].name + "' has no inverse under '" +
                          times.name + "'");
      }
      inv.push_back(std::move(x));
    }
    out.Add(k, std::move(inv));
  }
  return out.Build();
}

OpMap CoalesceOps() { return OpMap(ops::Coalesce()); }

}  // namespace

Table Select(const Table& a, const RowPredicate& keep) {
  const Tuple zero = a.schema().DefaultValues();
  const auto& values = a.schema().values();
  std::vector<std::string> names = a.schema().ValueNameList();
  return MapNonZero(
      a, values,
      [&keep, zero, names](const Record& row) {
        if (!keep(row)) return zero;
        Tuple out;
        for (const auto& n : names) out.push_back(row.Get(n));
        return out;
      },
      "select");
}

Table Difference(const Table& a, const Table& b) {
  const TableSchema& sa = a.schema();
  for (const auto& v : sa.values()) {
    if (!v.default_value.is_numeric()) {
      throw OperatorError("difference: value '" + v.name +
                          "' is not numeric and cannot be cancelled");
    }
  }
  Table marks = Union(IndicatorOf(b, sa.ValueNameList()),
                      EmptyTable(SharedKeys(b.schema(), sa)), OpMap(ops::Or()));
  Table removed = StrictJoin(a, marks, KeepLeftOps(sa));
  BinaryOp plus = ops::Plus();
  Table negated = MapNonZero(
      removed, removed.schema().values(),
      [&plus, names = removed.schema().ValueNameList()](const Record& row) {
        Tuple out;
        for (const auto& n : names) out.push_back(plus.inverse(row.Get(n)));
        return out;
      },
      "neg");
  return Union(a, negated, OpMap(plus));
}

DivisionTrace DivideTrace(const Table& a, const Table& b,
                          const BinaryOp& times) {
  std::vector<std::string> shared = CheckDivision(a, b, times);
  Table av = ProjectValues(a, shared);
  Table bv = ProjectValues(b, shared).Canonicalize();
  if (bv.SupportSize() == 0) {
    throw DomainError("divide: the divisor has empty support");
  }
  Table inverse = InvertValues(bv, times);
  std::vector<KeyAttribute> rest = KeysNotIn(a.schema(), b.schema());
  OpMap min_join(ops::Min0());

  DivisionTrace trace;
  std::optional<Table> acc;
  for (const auto& [k, v] : inverse.rows()) {
    Table row(inverse.schema(), {{k, v}});
    Table partial =
        Union(StrictJoin(av, row, OpMap(times)), EmptyTable(rest),
              CoalesceOps());
    acc = acc ? StrictJoin(*acc, partial, min_join) : partial;
    trace.steps.push_back({std::move(row), std::move(partial)});
  }
  trace.result = *acc;
  return trace;
}

Table Divide(const Table& a, const Table& b, const BinaryOp& times) {
  return DivideTrace(a, b, times).result;
}

DivideCounterTrace DivideCounterSteps(const Table& a, const Table& b,
                                      const BinaryOp& times) {
  std::vector<std::string> shared = CheckDivision(a, b, times);
  Table av = ProjectValues(a, shared);
  Table bv = ProjectValues(b, shared).Canonicalize();
  if (bv.SupportSize() == 0) {
    throw DomainError("divide: the divisor has empty support");
  }
  DivideCounterTrace trace;
  trace.inverse = InvertValues(bv, times);
  Table joined = StrictJoin(av, trace.inverse, OpMap(times));

  std::set<std::string> taken = a.schema().KeyNames();
  for (const auto& n : shared) taken.insert(n);
  trace.counter = FreshName("i", taken);

  std::vector<ValueAttribute> counted_values = joined.schema().values();
  counted_values.push_back({trace.counter, ScalarKind::kInt, Scalar(0)});
  trace.counted = MapNonZero(
      joined, counted_values,
      [shared](const Record& row) {
        Tuple out;
        for (const auto& n : shared) out.push_back(row.Get(n));
        out.push_back(Scalar(1));
        return out;
      },
      "count");

  std::map<std::string, BinaryOp> group_ops;
  for (const auto& n : shared) group_ops.emplace(n, ops::MinNonZero());
  group_ops.emplace(trace.counter, ops::Plus());
  trace.grouped =
      Union(trace.counted, EmptyTable(KeysNotIn(a.schema(), b.schema())),
            OpMap(std::move(group_ops)));

  // |B| as a keyless union over the divisor's indicator.
  Table count = Union(IndicatorOf(bv, {trace.counter}), EmptyTable({}),
                      OpMap(ops::Plus()));
  const Scalar needed = count.LookupTuple({})[0];

  std::vector<ValueAttribute> result_values;
  for (const auto& n : shared) {
    result_values.push_back(trace.grouped.schema().Value(n));
  }
  Tuple zero;
  for (const auto& v : result_values) zero.push_back(v.default_value);
  trace.result = MapNonZero(
      trace.grouped, result_values,
      [shared, zero, needed, counter = trace.counter](const Record& row) {
        if (row.Get(counter) != needed) return zero;
        Tuple out;
        for (const auto& n : shared) out.push_back(row.Get(n));
        return out;
      },
      "complete");
  return trace;
}

Table DivideCounter(const Table& a, const Table& b, const BinaryOp& times) {
  return DivideCounterSteps(a, b, times).result;
}

OuterJoinTrace OuterJoinSteps(const Table& a, const Table& b) {
  const TableSchema& sa = a.schema();
  const TableSchema& sb = b.schema();
  for (const auto& v : sa.values()) {
    if (sb.HasValue(v.name)) {
      throw SchemaError("outer join: value '" + v.name +
                        "' appears on both sides");
    }
  }
  OpMap or_op(ops::Or());
  Table marks_b = Union(IndicatorOf(b, sa.ValueNameList()),
                        EmptyTable(KeysNotIn(sb, sa)), or_op);
  Table marks_a = Union(IndicatorOf(a, sb.ValueNameList()),
                        EmptyTable(KeysNotIn(sa, sb)), or_op);
  OuterJoinTrace trace;
  trace.left = StrictJoin(a, marks_b, KeepLeftOps(sa));
  trace.right = StrictJoin(b, marks_a, KeepLeftOps(sb));
  trace.result = Union(trace.left, trace.right, CoalesceOps());
  return trace;
}

Table OuterJoin(const Table& a, const Table& b) {
  return OuterJoinSteps(a, b).result;
}

}  // namespace lara
