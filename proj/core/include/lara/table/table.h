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

#ifndef LARA_TABLE_TABLE_H_
#define LARA_TABLE_TABLE_H_

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lara/table/record.h"
#include "lara/table/scalar.h"
#include "lara/table/schema.h"

namespace lara {

// An associative table: a total map from key tuples to value tuples that
// differs from the schema's default value tuple on finitely many keys.
//
// Only the stored rows are kept; every other key looks up to the defaults.
// Stored rows may include all-default rows, which Canonicalize() removes.
// Rows are ordered by key, lexicographically over the schema's key order.
// Tables are immutable once built.
class Table {
 public:
  using RowMap = std::map<Tuple, Tuple>;

  Table() = default;
  explicit Table(TableSchema schema);
  // Throws SchemaError on malformed or duplicate keys.
  Table(TableSchema schema, std::vector<std::pair<Tuple, Tuple>> rows);

  const TableSchema& schema() const { return schema_; }
  const RowMap& rows() const { return rows_; }
  size_t stored_size() const { return rows_.size(); }

  // The value at `key`; the schema defaults when the key is not stored.
  // Positional and unchecked: `key` must already conform to the key kinds.
  const Tuple& LookupTuple(const Tuple& key) const;
  Record Lookup(const Record& key) const;

  bool IsDefault(const Tuple& values) const;

  // Keys whose value differs from the defaults, in canonical order.
  std::vector<Tuple> Support() const;
  size_t SupportSize() const;

  // Drops all-default rows.
  Table Canonicalize() const;

  // Same table with columns permuted into `target` order. `target` must be
  // equal to schema() as an order-insensitive schema.
  Table Reordered(const TableSchema& target) const;

  Record KeyRecord(const Tuple& key) const;
  Record ValueRecord(const Tuple& values) const;
  // Key and value components together.
  Record RowRecord(const Tuple& key, const Tuple& values) const;

 private:
  friend class TableBuilder;

  TableSchema schema_;
  RowMap rows_;
  Tuple defaults_;
};

// Accumulates rows for a Table, checking and coercing each tuple against the
// schema.
class TableBuilder {
 public:
  using Merge = std::function<Tuple(const Tuple& existing, const Tuple& added)>;

  explicit TableBuilder(TableSchema schema);

  // Throws SchemaError if the key was already added.
  TableBuilder& Add(Tuple key, Tuple values);
  // Combines with an existing entry through `merge`.
  TableBuilder& Upsert(Tuple key, Tuple values, const Merge& merge);
  // Replaces any existing entry.
  TableBuilder& Set(Tuple key, Tuple values);

  bool Contains(const Tuple& key) const;

  // Returns the table; all-default rows are kept unless `canonical`.
  Table Build(bool canonical = true);

 private:
  void Conform(Tuple& key, Tuple& values) const;

  Table table_;
};

// Conforms a tuple to a list of kinds: int promotes to real, everything else
// must match exactly. Throws SchemaError. `what` names the tuple in messages.
void ConformTuple(Tuple& tuple, const std::vector<ScalarKind>& kinds,
                  const std::string& what);

// Equivalence: equal schemas (order-insensitive) and equal canonical rows,
// numeric values within `tolerance`.
bool TablesEqual(const Table& a, const Table& b,
                 double tolerance = kRealTolerance);

// Human-readable description of the first difference, empty when equal.
std::string DescribeDifference(const Table& a, const Table& b,
                               double tolerance = kRealTolerance);

// E_K: keys K, no value attributes, empty support.
Table EmptyTable(std::vector<KeyAttribute> keys);

// One single-value table per value attribute, each with all of A's keys.
// Throws SchemaError when A has no value attributes.
std::vector<Table> Decompose(const Table& a);

// Multi-line text rendering: header, defaults row, then canonical rows.
std::string FormatTable(const Table& a);

}  // namespace lara

#endif  // LARA_TABLE_TABLE_H_
