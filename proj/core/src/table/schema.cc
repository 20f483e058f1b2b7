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

#include "lara/table/schema.h"

#include <map>
#include <sstream>
#include <utility>

#include "lara/table/error.h"

namespace lara {

TableSchema::TableSchema(std::vector<KeyAttribute> keys,
                         std::vector<ValueAttribute> values)
    : keys_(std::move(keys)), values_(std::move(values)) {
  std::set<std::string> seen;
  for (const auto& k : keys_) {
    if (k.name.empty()) throw SchemaError("empty key attribute name");
    if (!seen.insert(k.name).second) {
      throw SchemaError("duplicate attribute '" + k.name + "' in schema");
    }
  }
  for (auto& v : values_) {
    if (v.name.empty()) throw SchemaError("empty value attribute name");
    if (!seen.insert(v.name).second) {
      throw SchemaError("attribute '" + v.name +
                        "' appears twice (keys and values must be disjoint)");
    }
    auto converted = v.default_value.ConvertTo(v.kind);
    if (!converted) {
      throw SchemaError("default " + v.default_value.ToString() +
                        " of attribute '" + v.name + "' is not of kind " +
                        std::string(KindName(v.kind)));
    }
    v.default_value = *converted;
  }
}

std::optional<size_t> TableSchema::KeyIndex(std::string_view name) const {
  for (size_t i = 0; i < keys_.size(); ++i) {
    if (keys_[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<size_t> TableSchema::ValueIndex(std::string_view name) const {
  for (size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].name == name) return i;
  }
  return std::nullopt;
}

const KeyAttribute& TableSchema::Key(std::string_view name) const {
  auto i = KeyIndex(name);
  if (!i) {
    throw SchemaError("no key attribute '" + std::string(name) + "' in " +
                      ToString());
  }
  return keys_[*i];
}

const ValueAttribute& TableSchema::Value(std::string_view name) const {
  auto i = ValueIndex(name);
  if (!i) {
    throw SchemaError("no value attribute '" + std::string(name) + "' in " +
                      ToString());
  }
  return values_[*i];
}

std::set<std::string> TableSchema::KeyNames() const {
  std::set<std::string> out;
  for (const auto& k : keys_) out.insert(k.name);
  return out;
}

std::set<std::string> TableSchema::ValueNames() const {
  std::set<std::string> out;
  for (const auto& v : values_) out.insert(v.name);
  return out;
}

std::vector<std::string> TableSchema::KeyNameList() const {
  std::vector<std::string> out;
  for (const auto& k : keys_) out.push_back(k.name);
  return out;
}

std::vector<std::string> TableSchema::ValueNameList() const {
  std::vector<std::string> out;
  for (const auto& v : values_) out.push_back(v.name);
  return out;
}

Tuple TableSchema::DefaultValues() const {
  Tuple out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(v.default_value);
  return out;
}

std::string TableSchema::ToString() const {
  std::ostringstream os;
  os << "[[";
  for (size_t i = 0; i < keys_.size(); ++i) {
    if (i) os << ", ";
    os << keys_[i].name << ":" << KindName(keys_[i].kind);
  }
  os << " -> ";
  for (size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ", ";
    os << values_[i].name << ":" << KindName(values_[i].kind) << " ["
       << values_[i].default_value << "]";
  }
  os << "]]";
  return os.str();
}

bool operator==(const TableSchema& a, const TableSchema& b) {
  if (a.keys_.size() != b.keys_.size() ||
      a.values_.size() != b.values_.size()) {
    return false;
  }
  for (const auto& k : a.keys_) {
    auto i = b.KeyIndex(k.name);
    if (!i || b.keys_[*i].kind != k.kind) return false;
  }
  for (const auto& v : a.values_) {
    auto i = b.ValueIndex(v.name);
    if (!i || !(b.values_[*i] == v)) return false;
  }
  return true;
}

std::vector<KeyAttribute> Keys(
    std::initializer_list<std::pair<std::string, ScalarKind>> keys) {
  std::vector<KeyAttribute> out;
  for (const auto& [name, kind] : keys) out.push_back({name, kind});
  return out;
}

std::string FreshName(std::string base, const std::set<std::string>& taken) {
  while (taken.count(base)) base += '\'';
  return base;
}

}  // namespace lara
