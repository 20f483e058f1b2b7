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

#include "lara/derived/convolution.h"

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

std::set<std::string> AllNames(const TableSchema& s) {
  std::set<std::string> names = s.KeyNames();
  for (const auto& n : s.ValueNames()) names.insert(n);
  return names;
}

}  // namespace

Table ShiftKeys(const Table& a, const KeyOffset& offset) {
  const TableSchema& s = a.schema();
  if (offset.size() != s.key_count()) {
    throw SchemaError("shift: offset has " + std::to_string(offset.size()) +
                      " components for " + s.ToString());
  }
  for (const auto& k : s.keys()) {
    if (k.kind != ScalarKind::kInt) {
      throw SchemaError("shift: key '" + k.name + "' is not an integer");
    }
  }
  // ext writes the moved key into fresh attributes, the union projects the
  // original key away and the rename restores the names.
  std::set<std::string> taken = AllNames(s);
  ExtFunction f;
  f.name = "shift";
  std::map<std::string, std::string> back;
  std::vector<std::string> key_names = s.KeyNameList();
  for (const auto& k : s.keys()) {
    std::string moved = FreshName(k.name + "'", taken);
    taken.insert(moved);
    f.output_keys.push_back({moved, k.kind});
    back.emplace(moved, k.name);
  }
  f.output_values = s.values();
  const Tuple zero = s.DefaultValues();
  std::vector<std::string> value_names = s.ValueNameList();
  f.apply = [&](const Record& row) {
    Tuple values;
    for (const auto& n : value_names) values.push_back(row.Get(n));
    ExtFunction::Rows out;
    if (values == zero) return out;
    Tuple key;
    for (size_t i = 0; i < key_names.size(); ++i) {
      key.push_back(Scalar(row.Get(key_names[i]).AsInt() + offset[i]));
    }
    out.emplace_back(std::move(key), std::move(values));
    return out;
  };
  Table moved = Union(Ext(a, f), EmptyTable(f.output_keys),
                      OpMap(ops::Coalesce()));
  return RenameAttributes(moved, back);
}

std::vector<Table> ShiftedCopies(const Table& a,
                                 const ConvolutionKernel& kernel) {
  std::vector<Table> out;
  for (const auto& o : kernel.offsets) out.push_back(ShiftKeys(a, o));
  return out;
}

Table ConvolveShift(const Table& a, const ConvolutionKernel& kernel) {
  if (kernel.offsets.empty()) {
    throw SchemaError("convolve: the kernel has no offsets");
  }
  std::vector<Table> copies = ShiftedCopies(a, kernel);
  OpMap combine(kernel.combine);
  Table acc = copies[0];
  for (size_t i = 1; i < copies.size(); ++i) {
    acc = StrictJoin(acc, copies[i], combine);
  }
  return acc;
}

BinaryOp WindowIndicator(double d) {
  BinaryOp op;
  op.name = "window";
  op.role = OpRole::kTimes;
  op.apply = [d](const Scalar& t, const Scalar& t2) {
    double x = t.AsReal();
    double y = t2.AsReal();
    return Scalar(std::int64_t{x != 0.0 && x <= y && y <= x + d ? 1 : 0});
  };
  // Times are positive, so a zero on either side always yields 0.
  op.zero_flags = [](const Scalar&, const Scalar&) {
    return JoinZeroFlags{true, true};
  };
  return op;
}

MovingSumTrace MovingSumSteps(const Table& t, double d) {
  const TableSchema& s = t.schema();
  if (s.key_count() != 1 || s.value_count() != 1) {
    throw SchemaError("moving sum: expected one key and one value, got " +
                      s.ToString());
  }
  const KeyAttribute& time = s.keys()[0];
  const ValueAttribute& value = s.values()[0];
  if (time.kind != ScalarKind::kReal && time.kind != ScalarKind::kInt) {
    throw SchemaError("moving sum: key '" + time.name + "' is not numeric");
  }
  if (!value.default_value.is_numeric() || value.default_value.Truthy()) {
    throw SchemaError("moving sum: value '" + value.name +
                      "' must be numeric with default 0");
  }
  if (!(d > 0) || !std::isfinite(d)) {
    throw DomainError("moving sum: window length must be positive");
  }
  for (const auto& k : t.Support()) {
    if (!(k[0].AsReal() > 0)) {
      throw DomainError("moving sum: support time " + k[0].ToString() +
                        " is not positive");
    }
  }

  MovingSumTrace trace;
  trace.times = MapNonZero(
      t, {{value.name, ScalarKind::kReal, Scalar(0.0)}},
      [name = time.name](const Record& row) {
        return Tuple{Scalar(row.Get(name).AsReal())};
      },
      "time");
  std::string later = FreshName(time.name + "'", AllNames(s));
  trace.renamed = RenameAttributes(trace.times, {{time.name, later}});
  trace.window =
      StrictJoin(trace.times, trace.renamed, OpMap(WindowIndicator(d)));
  trace.weighted = StrictJoin(trace.window, t, OpMap(ops::Times()));
  trace.result = Union(trace.weighted, EmptyTable({{later, time.kind}}),
                       OpMap(ops::Plus()));
  return trace;
}

Table MovingSum(const Table& t, double d) {
  MovingSumTrace trace = MovingSumSteps(t, d);
  const std::string& time = t.schema().keys()[0].name;
  return RenameAttributes(trace.result,
                          {{trace.result.schema().keys()[0].name, time}});
}

}  // namespace lara
