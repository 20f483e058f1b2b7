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

#include "lara/derived/combblas.h"

#include <map>
#include <set>

#include "lara/algebra/ext.h"
#include "lara/algebra/join.h"
#include "lara/algebra/registry.h"
#include "lara/algebra/union.h"
#include "lara/derived/relational.h"
#include "lara/table/error.h"

namespace lara {

namespace {

void RequireKeyCount(const Table& t, size_t n, const char* op,
                     const char* what) {
  if (t.schema().key_count() != n) {
    throw SchemaError(std::string(op) + ": " + what + " must have " +
                      std::to_string(n) + " key attribute(s), got " +
                      t.schema().ToString());
  }
}

void RequireSameKeys(const Table& a, const Table& b, const char* op) {
  if (a.schema().KeyNames() != b.schema().KeyNames()) {
    throw SchemaError(std::string(op) + ": operands need the same keys, got " +
                      a.schema().ToString() + " and " + b.schema().ToString());
  }
}

std::vector<KeyAttribute> KeysExcept(const TableSchema& s,
                                     const std::string& name) {
  std::vector<KeyAttribute> out;
  for (const auto& k : s.keys()) {
    if (k.name != name) out.push_back(k);
  }
  return out;
}

// Renames v's value attribute to A's when both have exactly one.
Table AlignValueName(const Table& a, const Table& v) {
  const TableSchema& sa = a.schema();
  const TableSchema& sv = v.schema();
  if (sa.value_count() == 1 && sv.value_count() == 1 &&
      sa.values()[0].name != sv.values()[0].name) {
    return RenameAttributes(v, {{sv.values()[0].name, sa.values()[0].name}});
  }
  return v;
}

}  // namespace

Table Transpose(const Table& a) {
  RequireKeyCount(a, 2, "transpose", "the matrix");
  const auto& k = a.schema().keys();
  return RenameAttributes(a, {{k[0].name, k[1].name}, {k[1].name, k[0].name}});
}

Table SpGEMM(const Table& a, const Table& b, const OpMap& plus,
             const OpMap& times) {
  RequireKeyCount(a, 2, "spgemm", "the left matrix");
  RequireKeyCount(b, 2, "spgemm", "the right matrix");
  std::vector<std::string> shared;
  for (const auto& k : a.schema().keys()) {
    if (b.schema().HasKey(k.name)) shared.push_back(k.name);
  }
  if (shared.size() != 1) {
    throw SchemaError("spgemm: the matrices must share exactly one key, got " +
                      a.schema().ToString() + " and " + b.schema().ToString());
  }
  std::vector<KeyAttribute> out = KeysExcept(a.schema(), shared[0]);
  for (const auto& k : KeysExcept(b.schema(), shared[0])) out.push_back(k);
  return Union(StrictJoin(a, b, times), EmptyTable(std::move(out)), plus);
}

Table SpMV(const Table& a, const Table& v, const OpMap& plus,
           const OpMap& times) {
  RequireKeyCount(a, 2, "spmv", "the matrix");
  RequireKeyCount(v, 1, "spmv", "the vector");
  const std::string& key = v.schema().keys()[0].name;
  if (!a.schema().HasKey(key)) {
    throw SchemaError("spmv: vector key '" + key + "' is not a matrix key");
  }
  return Union(StrictJoin(a, v, times), EmptyTable(KeysExcept(a.schema(), key)),
               plus);
}

Table SpEWiseX(const Table& a, const Table& b, const OpMap& times, bool not_a,
               bool not_b) {
  RequireSameKeys(a, b, "spewisex");
  if (not_a && not_b) {
    throw OperatorError("spewisex: notA and notB cannot both be set");
  }
  if (not_b) return Difference(a, b);
  if (not_a) return Difference(b, a);
  return StrictJoin(a, b, times);
}

Table SpEWiseSum(const Table& a, const Table& b, const OpMap& plus) {
  RequireSameKeys(a, b, "spewisesum");
  return Union(a, b, plus);
}

Table Reduce(const Table& a, const OpMap& plus,
             const std::vector<std::string>& keep) {
  std::vector<KeyAttribute> keys;
  for (const auto& n : keep) {
    if (!a.schema().HasKey(n)) {
      throw SchemaError("reduce: '" + n + "' is not a key of " +
                        a.schema().ToString());
    }
    keys.push_back(a.schema().Key(n));
  }
  return Union(a, EmptyTable(std::move(keys)), plus);
}

Table SpRef(const Table& a,
            const std::function<bool(const Record& key)>& keep) {
  std::set<std::string> keys = a.schema().KeyNames();
  return Select(a, [&keep, keys](const Record& row) {
    return keep(ProjectRecord(row, keys));
  });
}

Table SpRef(const Table& a, const Table& positions) {
  RequireSameKeys(a, positions, "spref");
  std::vector<ValueAttribute> ones;
  std::map<std::string, BinaryOp> ops;
  for (const auto& v : a.schema().values()) {
    ones.push_back({v.name, ScalarKind::kInt, Scalar(0)});
    ops.emplace(v.name, KeepLeftWhereIndicated(v.default_value));
  }
  Tuple one(ones.size(), Scalar(1));
  Table r = MapNonZero(positions, std::move(ones),
                       [one](const Record&) { return one; }, "indicator");
  return StrictJoin(a, r, OpMap(std::move(ops)));
}

Table SpAsgn(const Table& a, const Table& b) {
  RequireSameKeys(a, b, "spasgn");
  return Union(Difference(a, b), b, OpMap(ops::Plus()));
}

Table Scale(const Table& a, const Table& v, const OpMap& times,
            bool sparse_default_one) {
  RequireKeyCount(v, 1, "scale", "the vector");
  const std::string& key = v.schema().keys()[0].name;
  if (!a.schema().HasKey(key)) {
    throw SchemaError("scale: vector key '" + key + "' is not a key of " +
                      a.schema().ToString());
  }
  Table aligned = AlignValueName(a, v);
  if (!sparse_default_one) return StrictJoin(a, aligned, times);

  if (a.schema().key_count() < 2) {
    throw SchemaError("scale: a sparse default-one vector needs a table with "
                      "more keys than the vector");
  }
  std::vector<ValueAttribute> values = aligned.schema().values();
  for (auto& val : values) {
    val.default_value = val.kind == ScalarKind::kInt ? Scalar(1) : Scalar(1.0);
  }
  TableBuilder ones(TableSchema(aligned.schema().keys(), std::move(values)));
  for (const auto& [k, val] : aligned.rows()) {
    if (!aligned.IsDefault(val)) ones.Add(k, val);
  }
  return StrictJoin(a, ones.Build(), times);
}

Table Apply(const Table& a, const std::function<Scalar(const Scalar&)>& g) {
  std::vector<std::string> names = a.schema().ValueNameList();
  return MapNonZero(
      a, a.schema().values(),
      [&g, names](const Record& row) {
        Tuple out;
        for (const auto& n : names) out.push_back(g(row.Get(n)));
        return out;
      },
      "apply");
}

}  // namespace lara
