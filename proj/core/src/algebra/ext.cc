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

#include "lara/algebra/ext.h"

#include <set>

#include "lara/algebra/binary_op.h"
#include "lara/table/error.h"

namespace lara {

namespace {

SampleDomain DomainFor(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::kInt:
      return SampleDomain::kInt;
    case ScalarKind::kReal:
      return SampleDomain::kReal;
    case ScalarKind::kText:
      return SampleDomain::kText;
    case ScalarKind::kBool:
      return SampleDomain::kBool;
  }
  return SampleDomain::kInt;
}

// Keys at which the contract is checked: the support of A plus a few random
// keys.
std::vector<Tuple> ContractProbeKeys(const Table& a) {
  std::vector<Tuple> keys = a.Support();
  const auto& ka = a.schema().keys();
  std::vector<std::vector<Scalar>> columns;
  for (size_t i = 0; i < ka.size(); ++i) {
    columns.push_back(SampleScalars(DomainFor(ka[i].kind),
                                    kExtContractRandomKeys, 0xe87 + i));
  }
  for (int r = 0; r < kExtContractRandomKeys; ++r) {
    Tuple k;
    for (const auto& col : columns) k.push_back(col[r]);
    keys.push_back(std::move(k));
  }
  return keys;
}

void CheckContract(const Table& a, const ExtFunction& f,
                   const TableSchema& out_schema) {
  const Tuple zero_in = a.schema().DefaultValues();
  const Tuple zero_out = out_schema.DefaultValues();
  for (const Tuple& k : ContractProbeKeys(a)) {
    for (auto& [k2, v2] : f.apply(a.RowRecord(k, zero_in))) {
      Tuple values = v2;
      std::vector<ScalarKind> kinds;
      for (const auto& v : f.output_values) kinds.push_back(v.kind);
      ConformTuple(values, kinds, "ext '" + f.name + "' output value");
      if (values != zero_out) {
        throw ExtContractError(
            "ext '" + f.name + "' maps the default row at key " +
            TupleToString(k) + " to the non-default " + TupleToString(values) +
            " at " + TupleToString(k2));
      }
    }
  }
}

}  // namespace

TableSchema ExtSchema(const TableSchema& input, const ExtFunction& f) {
  if (f.input_schema && !(*f.input_schema == input)) {
    throw SchemaError("ext '" + f.name + "' expects input " +
                      f.input_schema->ToString() + ", got " + input.ToString());
  }
  std::vector<KeyAttribute> keys = input.keys();
  for (const auto& k : f.output_keys) {
    if (input.HasKey(k.name)) {
      throw SchemaError("ext '" + f.name + "' output key '" + k.name +
                        "' collides with an input key");
    }
    keys.push_back(k);
  }
  return TableSchema(std::move(keys), f.output_values);
}

Table Ext(const Table& a, const ExtFunction& f) {
  TableSchema schema = ExtSchema(a.schema(), f);
  CheckContract(a, f, schema);
  TableBuilder builder(schema);
  for (const auto& [k, v] : a.rows()) {
    if (a.IsDefault(v)) continue;
    std::set<Tuple> seen;
    for (auto& [k2, v2] : f.apply(a.RowRecord(k, v))) {
      if (!seen.insert(k2).second) {
        throw ExtContractError("ext '" + f.name + "' returned key " +
                               TupleToString(k2) + " twice for row " +
                               TupleToString(k));
      }
      Tuple key = k;
      key.insert(key.end(), k2.begin(), k2.end());
      builder.Add(std::move(key), std::move(v2));
    }
  }
  return builder.Build();
}

Table Map(const Table& a, std::vector<ValueAttribute> output_values, RowFn g,
          std::string name) {
  ExtFunction f;
  f.name = std::move(name);
  f.output_values = std::move(output_values);
  f.apply = [g = std::move(g)](const Record& row) {
    return ExtFunction::Rows{{Tuple{}, g(row)}};
  };
  return Ext(a, f);
}

Table MapNonZero(const Table& a, std::vector<ValueAttribute> output_values,
                 RowFn g, std::string name) {
  ExtFunction f;
  f.name = std::move(name);
  f.output_values = std::move(output_values);
  TableSchema schema = ExtSchema(a.schema(), f);
  TableBuilder builder(schema);
  for (const auto& [k, v] : a.rows()) {
    if (a.IsDefault(v)) continue;
    builder.Add(k, g(a.RowRecord(k, v)));
  }
  return builder.Build();
}

Table ProjectValues(const Table& a, const std::vector<std::string>& names) {
  std::set<std::string> keep(names.begin(), names.end());
  for (const auto& n : keep) {
    if (!a.schema().HasValue(n)) {
      throw SchemaError("cannot project onto '" + n + "': not a value of " +
                        a.schema().ToString());
    }
  }
  std::vector<size_t> idx;
  std::vector<ValueAttribute> values;
  for (size_t i = 0; i < a.schema().value_count(); ++i) {
    if (keep.count(a.schema().values()[i].name)) {
      idx.push_back(i);
      values.push_back(a.schema().values()[i]);
    }
  }
  TableBuilder builder(TableSchema(a.schema().keys(), std::move(values)));
  for (const auto& [k, v] : a.rows()) {
    Tuple nv;
    for (size_t i : idx) nv.push_back(v[i]);
    builder.Add(k, std::move(nv));
  }
  return builder.Build();
}

Table RenameAttributes(const Table& a,
                       const std::map<std::string, std::string>& renaming) {
  for (const auto& [from, to] : renaming) {
    if (!a.schema().HasAttribute(from)) {
      throw SchemaError("cannot rename '" + from + "': not in " +
                        a.schema().ToString());
    }
  }
  auto renamed = [&](const std::string& n) {
    auto it = renaming.find(n);
    return it == renaming.end() ? n : it->second;
  };
  std::vector<KeyAttribute> keys = a.schema().keys();
  for (auto& k : keys) k.name = renamed(k.name);
  std::vector<ValueAttribute> values = a.schema().values();
  for (auto& v : values) v.name = renamed(v.name);
  TableBuilder builder(TableSchema(std::move(keys), std::move(values)));
  for (const auto& [k, v] : a.rows()) builder.Add(k, v);
  return builder.Build();
}

Table SupOne(const Table& a, const std::vector<std::string>& names) {
  std::vector<ValueAttribute> values = a.schema().values();
  for (const auto& n : names) {
    if (a.schema().HasAttribute(n)) {
      throw SchemaError("supone attribute '" + n + "' already in " +
                        a.schema().ToString());
    }
    values.push_back({n, ScalarKind::kInt, Scalar(0)});
  }
  TableBuilder builder(TableSchema(a.schema().keys(), std::move(values)));
  for (const auto& [k, v] : a.rows()) {
    if (a.IsDefault(v)) continue;
    Tuple nv = v;
    nv.insert(nv.end(), names.size(), Scalar(1));
    builder.Add(k, std::move(nv));
  }
  return builder.Build();
}

std::string PromoteIndicatorName(const TableSchema& a, const std::string& v) {
  std::set<std::string> taken = a.KeyNames();
  for (const auto& n : a.ValueNames()) taken.insert(n);
  return FreshName(v + "'", taken);
}

TableSchema PromoteSchema(const TableSchema& a, const std::string& v,
                          const std::string& indicator) {
  const ValueAttribute& promoted = a.Value(v);
  std::vector<KeyAttribute> keys = a.keys();
  keys.push_back({promoted.name, promoted.kind});
  std::vector<ValueAttribute> values;
  for (const auto& x : a.values()) {
    if (x.name != v) values.push_back(x);
  }
  values.push_back({indicator, ScalarKind::kInt, Scalar(0)});
  return TableSchema(std::move(keys), std::move(values));
}

Table Promote(const Table& a, const std::string& v,
              std::optional<std::string> indicator) {
  std::string ind = indicator ? *indicator : PromoteIndicatorName(a.schema(), v);
  TableSchema schema = PromoteSchema(a.schema(), v, ind);
  const size_t vi = *a.schema().ValueIndex(v);
  TableBuilder builder(schema);
  for (const auto& [k, vals] : a.rows()) {
    if (a.IsDefault(vals)) continue;
    Tuple key = k;
    key.push_back(vals[vi]);
    Tuple nv;
    for (size_t i = 0; i < vals.size(); ++i) {
      if (i != vi) nv.push_back(vals[i]);
    }
    nv.push_back(Scalar(1));
    builder.Add(std::move(key), std::move(nv));
  }
  return builder.Build();
}

}  // namespace lara
