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

#ifndef LARA_TABLE_SCHEMA_H_
#define LARA_TABLE_SCHEMA_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lara/table/scalar.h"

namespace lara {

struct KeyAttribute {
  std::string name;
  ScalarKind kind;

  friend bool operator==(const KeyAttribute&, const KeyAttribute&) = default;
};

struct ValueAttribute {
  std::string name;
  ScalarKind kind;
  Scalar default_value;

  friend bool operator==(const ValueAttribute& a, const ValueAttribute& b) {
    return a.name == b.name && a.kind == b.kind &&
           a.default_value == b.default_value;
  }
};

// The type [[k1..km -> v1..vn : 01..0n]] of an associative table: an ordered
// key header, an ordered value header, and one default per value attribute.
//
// Key and value names are disjoint. The order of attributes fixes the column
// order of tuples and of written files; equality ignores it.
class TableSchema {
 public:
  TableSchema() = default;
  TableSchema(std::vector<KeyAttribute> keys,
              std::vector<ValueAttribute> values);

  const std::vector<KeyAttribute>& keys() const { return keys_; }
  const std::vector<ValueAttribute>& values() const { return values_; }
  size_t key_count() const { return keys_.size(); }
  size_t value_count() const { return values_.size(); }

  std::optional<size_t> KeyIndex(std::string_view name) const;
  std::optional<size_t> ValueIndex(std::string_view name) const;
  bool HasKey(std::string_view name) const { return KeyIndex(name).has_value(); }
  bool HasValue(std::string_view name) const {
    return ValueIndex(name).has_value();
  }
  bool HasAttribute(std::string_view name) const {
    return HasKey(name) || HasValue(name);
  }

  const KeyAttribute& Key(std::string_view name) const;
  const ValueAttribute& Value(std::string_view name) const;

  std::set<std::string> KeyNames() const;
  std::set<std::string> ValueNames() const;
  std::vector<std::string> KeyNameList() const;
  std::vector<std::string> ValueNameList() const;

  // The default value record 0 as a tuple in value order.
  Tuple DefaultValues() const;

  std::string ToString() const;

  // Order-insensitive: same key name->kind map, same value
  // name->(kind, default) map.
  friend bool operator==(const TableSchema& a, const TableSchema& b);

 private:
  std::vector<KeyAttribute> keys_;
  std::vector<ValueAttribute> values_;
};

// Builds a key header from names and kinds; convenience for tests and
// generators.
std::vector<KeyAttribute> Keys(
    std::initializer_list<std::pair<std::string, ScalarKind>> keys);

// Returns `base` with apostrophes appended until it collides with nothing in
// `taken`.
std::string FreshName(std::string base, const std::set<std::string>& taken);

}  // namespace lara

#endif  // LARA_TABLE_SCHEMA_H_
