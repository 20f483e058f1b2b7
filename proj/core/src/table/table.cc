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

#include "lara/table/table.h"

#include <algorithm>
#include <sstream>

#include "lara/table/error.h"

namespace lara {

namespace {

std::vector<ScalarKind> KeyKinds(const TableSchema& s) {
  std::vector<ScalarKind> out;
  for (const auto& k : s.keys()) out.push_back(k.kind);
  return out;
}

std::vector<ScalarKind> ValueKinds(const TableSchema& s) {
  std::vector<ScalarKind> out;
  for (const auto& v : s.values()) out.push_back(v.kind);
  return out;
}

bool TuplesApproxEqual(const Tuple& a, const Tuple& b, double tolerance) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!ApproxEqual(a[i], b[i], tolerance)) return false;
  }
  return true;
}

// Canonical rows of `b` with columns permuted into `a`'s order.
Table::RowMap AlignedRows(const Table& a, const Table& b) {
  return b.Reordered(a.schema()).Canonicalize().rows();
}

}  // namespace

void ConformTuple(Tuple& tuple, const std::vector<ScalarKind>& kinds,
                  const std::string& what) {
  if (tuple.size() != kinds.size()) {
    throw SchemaError(what + " " + TupleToString(tuple) + " has " +
                      std::to_string(tuple.size()) + " components, expected " +
                      std::to_string(kinds.size()));
  }
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i].kind() == kinds[i]) continue;
    if (tuple[i].kind() == ScalarKind::kInt && kinds[i] == ScalarKind::kReal) {
      tuple[i] = Scalar(tuple[i].AsReal());
      continue;
    }
    throw SchemaError(what + " " + TupleToString(tuple) + ": component " +
                      std::to_string(i) + " is " +
                      std::string(KindName(tuple[i].kind())) + ", expected " +
                      std::string(KindName(kinds[i])));
  }
}

Table::Table(TableSchema schema)
    : schema_(std::move(schema)), defaults_(schema_.DefaultValues()) {}

Table::Table(TableSchema schema, std::vector<std::pair<Tuple, Tuple>> rows) {
  TableBuilder builder(std::move(schema));
  for (auto& [k, v] : rows) builder.Add(std::move(k), std::move(v));
  *this = builder.Build(/*canonical=*/false);
}

const Tuple& Table::LookupTuple(const Tuple& key) const {
  auto it = rows_.find(key);
  return it == rows_.end() ? defaults_ : it->second;
}

Record Table::Lookup(const Record& key) const {
  if (key.size() != schema_.key_count()) {
    throw SchemaError("key record " + key.ToString() +
                      " does not match key header of " + schema_.ToString());
  }
  Tuple t;
  for (const auto& k : schema_.keys()) t.push_back(key.Get(k.name));
  ConformTuple(t, KeyKinds(schema_), "key");
  return ValueRecord(LookupTuple(t));
}

bool Table::IsDefault(const Tuple& values) const { return values == defaults_; }

std::vector<Tuple> Table::Support() const {
  std::vector<Tuple> out;
  for (const auto& [k, v] : rows_) {
    if (!IsDefault(v)) out.push_back(k);
  }
  return out;
}

size_t Table::SupportSize() const {
  return std::count_if(rows_.begin(), rows_.end(),
                       [this](const auto& row) { return !IsDefault(row.second); });
}

Table Table::Canonicalize() const {
  Table out(schema_);
  for (const auto& [k, v] : rows_) {
    if (!IsDefault(v)) out.rows_.emplace_hint(out.rows_.end(), k, v);
  }
  return out;
}

Table Table::Reordered(const TableSchema& target) const {
  if (!(target == schema_)) {
    throw SchemaError("cannot reorder " + schema_.ToString() + " into " +
                      target.ToString());
  }
  std::vector<size_t> key_perm, value_perm;
  for (const auto& k : target.keys()) key_perm.push_back(*schema_.KeyIndex(k.name));
  for (const auto& v : target.values()) {
    value_perm.push_back(*schema_.ValueIndex(v.name));
  }
  Table out(target);
  for (const auto& [k, v] : rows_) {
    Tuple nk, nv;
    for (size_t i : key_perm) nk.push_back(k[i]);
    for (size_t i : value_perm) nv.push_back(v[i]);
    out.rows_.emplace(std::move(nk), std::move(nv));
  }
  return out;
}

Record Table::KeyRecord(const Tuple& key) const {
  std::vector<Record::Field> f;
  for (size_t i = 0; i < key.size(); ++i) {
    f.emplace_back(schema_.keys()[i].name, key[i]);
  }
  return Record(std::move(f));
}

Record Table::ValueRecord(const Tuple& values) const {
  std::vector<Record::Field> f;
  for (size_t i = 0; i < values.size(); ++i) {
    f.emplace_back(schema_.values()[i].name, values[i]);
  }
  return Record(std::move(f));
}

Record Table::RowRecord(const Tuple& key, const Tuple& values) const {
  return ConcatRecords(KeyRecord(key), ValueRecord(values));
}

TableBuilder::TableBuilder(TableSchema schema) : table_(std::move(schema)) {}

void TableBuilder::Conform(Tuple& key, Tuple& values) const {
  ConformTuple(key, KeyKinds(table_.schema_), "key");
  ConformTuple(values, ValueKinds(table_.schema_), "value");
}

TableBuilder& TableBuilder::Add(Tuple key, Tuple values) {
  Conform(key, values);
  auto [it, inserted] = table_.rows_.emplace(std::move(key), std::move(values));
  if (!inserted) {
    throw SchemaError("duplicate key " + TupleToString(it->first) +
                      " in table " + table_.schema_.ToString());
  }
  return *this;
}

TableBuilder& TableBuilder::Upsert(Tuple key, Tuple values,
                                   const Merge& merge) {
  Conform(key, values);
  auto it = table_.rows_.find(key);
  if (it == table_.rows_.end()) {
    table_.rows_.emplace(std::move(key), std::move(values));
    return *this;
  }
  Tuple merged = merge(it->second, values);
  ConformTuple(merged, ValueKinds(table_.schema_), "merged value");
  it->second = std::move(merged);
  return *this;
}

TableBuilder& TableBuilder::Set(Tuple key, Tuple values) {
  Conform(key, values);
  table_.rows_[std::move(key)] = std::move(values);
  return *this;
}

bool TableBuilder::Contains(const Tuple& key) const {
  return table_.rows_.count(key) > 0;
}

Table TableBuilder::Build(bool canonical) {
  Table out = std::move(table_);
  table_ = Table(out.schema_);
  return canonical ? out.Canonicalize() : out;
}

bool TablesEqual(const Table& a, const Table& b, double tolerance) {
  return DescribeDifference(a, b, tolerance).empty();
}

std::string DescribeDifference(const Table& a, const Table& b,
                               double tolerance) {
  if (!(a.schema() == b.schema())) {
    return "schemas differ: " + a.schema().ToString() + " vs " +
           b.schema().ToString();
  }
  Table::RowMap ra = a.Canonicalize().rows();
  Table::RowMap rb = AlignedRows(a, b);
  auto ia = ra.begin();
  auto ib = rb.begin();
  for (; ia != ra.end() && ib != rb.end(); ++ia, ++ib) {
    if (!TuplesApproxEqual(ia->first, ib->first, tolerance)) {
      const auto& first = ia->first < ib->first ? *ia : *ib;
      return "key " + TupleToString(first.first) + " -> " +
             TupleToString(first.second) + " is only in the " +
             (ia->first < ib->first ? "left" : "right") + " table";
    }
    if (!TuplesApproxEqual(ia->second, ib->second, tolerance)) {
      return "key " + TupleToString(ia->first) + ": " +
             TupleToString(ia->second) + " vs " + TupleToString(ib->second);
    }
  }
  if (ia != ra.end()) {
    return "key " + TupleToString(ia->first) + " -> " +
           TupleToString(ia->second) + " is only in the left table";
  }
  if (ib != rb.end()) {
    return "key " + TupleToString(ib->first) + " -> " +
           TupleToString(ib->second) + " is only in the right table";
  }
  return "";
}

Table EmptyTable(std::vector<KeyAttribute> keys) {
  return Table(TableSchema(std::move(keys), {}));
}

std::vector<Table> Decompose(const Table& a) {
  const auto& values = a.schema().values();
  if (values.empty()) {
    throw SchemaError("table " + a.schema().ToString() +
                      " has no value attributes to decompose");
  }
  std::vector<Table> out;
  for (size_t i = 0; i < values.size(); ++i) {
    TableBuilder builder(TableSchema(a.schema().keys(), {values[i]}));
    for (const auto& [k, v] : a.rows()) builder.Add(k, {v[i]});
    out.push_back(builder.Build());
  }
  return out;
}

std::string FormatTable(const Table& a) {
  const TableSchema& s = a.schema();
  std::vector<std::vector<std::string>> lines;
  std::vector<std::string> header;
  for (const auto& k : s.keys()) header.push_back(k.name);
  header.push_back("|");
  for (const auto& v : s.values()) header.push_back(v.name);
  lines.push_back(header);

  std::vector<std::string> defaults(s.key_count(), "");
  if (!defaults.empty()) defaults[0] = "(default)";
  defaults.push_back("|");
  for (const auto& v : s.values()) defaults.push_back(v.default_value.ToString());
  lines.push_back(defaults);

  const Table canonical = a.Canonicalize();
  for (const auto& [k, v] : canonical.rows()) {
    std::vector<std::string> line;
    for (const auto& x : k) line.push_back(x.ToString());
    line.push_back("|");
    for (const auto& x : v) line.push_back(x.ToString());
    lines.push_back(line);
  }

  std::vector<size_t> width(header.size(), 0);
  for (const auto& line : lines) {
    for (size_t i = 0; i < line.size(); ++i) {
      width[i] = std::max(width[i], line[i].size());
    }
  }
  std::ostringstream os;
  for (const auto& line : lines) {
    std::string text;
    for (size_t i = 0; i < line.size(); ++i) {
      if (i) text += ' ';
      text += line[i];
      if (i + 1 < line.size()) text.append(width[i] - line[i].size(), ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    os << text << '\n';
  }
  return os.str();
}

}  // namespace lara
