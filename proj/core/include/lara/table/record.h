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

#ifndef LARA_TABLE_RECORD_H_
#define LARA_TABLE_RECORD_H_

#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lara/table/scalar.h"

namespace lara {

// A tuple whose components are identified by unique names.
//
// Component order carries no meaning: two records are equal when they map the
// same names to the same values. Components are kept sorted by name.
class Record {
 public:
  using Field = std::pair<std::string, Scalar>;

  Record() = default;
  Record(std::initializer_list<Field> fields);
  explicit Record(std::vector<Field> fields);

  // Throws SchemaError when `name` is not in the header.
  const Scalar& Get(std::string_view name) const;
  const Scalar* Find(std::string_view name) const;
  bool Has(std::string_view name) const { return Find(name) != nullptr; }

  std::vector<std::string> Header() const;
  size_t size() const { return fields_.size(); }
  bool empty() const { return fields_.empty(); }

  auto begin() const { return fields_.begin(); }
  auto end() const { return fields_.end(); }

  std::string ToString() const;

  friend bool operator==(const Record& a, const Record& b) {
    return a.fields_ == b.fields_;
  }

 private:
  std::vector<Field> fields_;
};

// The projection of `r` onto `names`. Every name must be in r's header.
Record ProjectRecord(const Record& r, const std::set<std::string>& names);

// Concatenation of two records with disjoint headers.
Record ConcatRecords(const Record& a, const Record& b);

}  // namespace lara

#endif  // LARA_TABLE_RECORD_H_
