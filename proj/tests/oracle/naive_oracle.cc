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

#include "oracle/naive_oracle.h"

#include <optional>

namespace lara::oracle {

namespace {

Tuple ProjectByName(const Tuple& key, const std::vector<KeyAttribute>& from,
                    const std::vector<KeyAttribute>& onto) {
  Tuple out;
  for (const auto& k : onto) {
    for (size_t i = 0; i < from.size(); ++i) {
      if (from[i].name == k.name) out.push_back(key[i]);
    }
  }
  return out;
}

std::optional<size_t> ValueIndex(const TableSchema& s, const std::string& n) {
  for (size_t i = 0; i < s.values().size(); ++i) {
    if (s.values()[i].name == n) return i;
  }
  return std::nullopt;
}

bool HasKey(const std::vector<KeyAttribute>& keys, const std::string& n) {
  for (const auto& k : keys) {
    if (k.name == n) return true;
  }
  return false;
}

}  // namespace

std::vector<Tuple> EnumerateKeys(const std::vector<KeyAttribute>& keys,
                                 const Universe& universe) {
  std::vector<Tuple> out = {Tuple{}};
  for (const auto& k : keys) {
    const auto& dom = universe.at(k.name);
    std::vector<Tuple> next;
    for (const auto& prefix : out) {
      for (const auto& v : dom) {
        Tuple t = prefix;
        t.push_back(v);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

Table NaiveUnion(const Table& a, const Table& b, const OpMap& plus,
                 const Universe& universe) {
  const TableSchema& sa = a.schema();
  const TableSchema& sb = b.schema();
  std::vector<KeyAttribute> shared;
  for (const auto& k : sa.keys()) {
    if (HasKey(sb.keys(), k.name)) shared.push_back(k);
  }
  std::vector<ValueAttribute> values = sa.values();
  for (const auto& v : sb.values()) {
    if (!ValueIndex(sa, v.name)) values.push_back(v);
  }
  TableSchema schema(shared, values);

  const auto keys_a = EnumerateKeys(sa.keys(), universe);
  const auto keys_b = EnumerateKeys(sb.keys(), universe);
  TableBuilder out(schema);
  for (const Tuple& c : EnumerateKeys(shared, universe)) {
    Tuple result;
    for (const auto& v : values) {
      BinaryOp op = plus.Resolve(v.name, v.default_value);
      auto fold = [&](const Table& t, const std::vector<Tuple>& keys)
          -> std::optional<Scalar> {
        auto idx = ValueIndex(t.schema(), v.name);
        if (!idx) return std::nullopt;
        Scalar acc = v.default_value;
        for (const Tuple& k : keys) {
          if (ProjectByName(k, t.schema().keys(), shared) != c) continue;
          acc = op(acc, t.LookupTuple(k)[*idx]);
        }
        return acc;
      };
      auto fa = fold(a, keys_a);
      auto fb = fold(b, keys_b);
      if (fa && fb) {
        result.push_back(op(*fa, *fb));
      } else {
        result.push_back(fa ? *fa : *fb);
      }
    }
    out.Add(c, std::move(result));
  }
  return out.Build();
}

Table NaiveStrictJoin(const Table& a, const Table& b, const OpMap& times,
                      const Universe& universe) {
  const TableSchema& sa = a.schema();
  const TableSchema& sb = b.schema();
  std::vector<KeyAttribute> keys = sa.keys();
  for (const auto& k : sb.keys()) {
    if (!HasKey(sa.keys(), k.name)) keys.push_back(k);
  }
  std::vector<ValueAttribute> values;
  std::vector<BinaryOp> ops;
  std::vector<std::pair<size_t, size_t>> idx;
  for (size_t i = 0; i < sa.values().size(); ++i) {
    const auto& va = sa.values()[i];
    auto j = ValueIndex(sb, va.name);
    if (!j) continue;
    BinaryOp op = times.Resolve(va.name, va.default_value);
    Scalar zero = op(va.default_value, sb.values()[*j].default_value);
    values.push_back({va.name, zero.kind(), zero});
    ops.push_back(op);
    idx.emplace_back(i, *j);
  }
  TableBuilder out(TableSchema(keys, values));
  for (const Tuple& k : EnumerateKeys(keys, universe)) {
    const Tuple& va = a.LookupTuple(ProjectByName(k, keys, sa.keys()));
    const Tuple& vb = b.LookupTuple(ProjectByName(k, keys, sb.keys()));
    Tuple result;
    for (size_t i = 0; i < ops.size(); ++i) {
      result.push_back(ops[i](va[idx[i].first], vb[idx[i].second]));
    }
    out.Add(k, std::move(result));
  }
  return out.Build();
}

Table NaiveExt(const Table& a, const ExtFunction& f, const Universe& universe) {
  std::vector<KeyAttribute> keys = a.schema().keys();
  keys.insert(keys.end(), f.output_keys.begin(), f.output_keys.end());
  TableBuilder out(TableSchema(keys, f.output_values));
  for (const Tuple& k : EnumerateKeys(a.schema().keys(), universe)) {
    for (auto& [k2, v2] : f.apply(a.RowRecord(k, a.LookupTuple(k)))) {
      Tuple key = k;
      key.insert(key.end(), k2.begin(), k2.end());
      out.Add(std::move(key), std::move(v2));
    }
  }
  return out.Build();
}

}  // namespace lara::oracle
