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

#ifndef LARA_PLAN_EXT_CATALOG_H_
#define LARA_PLAN_EXT_CATALOG_H_

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lara/table/table.h"

namespace lara {

// A named, argument-taking ext that plans can refer to, e.g.
// `(ext (project v) ...)` or `(ext tokenize ...)`.
struct ExtCall {
  std::string function;
  std::vector<std::string> args;

  std::string ToString() const;
  friend bool operator==(const ExtCall&, const ExtCall&) = default;
};

class ExtCatalog {
 public:
  struct Entry {
    std::string name;
    std::string usage;
    std::function<TableSchema(const TableSchema&, const std::vector<std::string>&)>
        schema;
    std::function<Table(const Table&, const std::vector<std::string>&)> apply;
  };

  void Register(Entry entry);
  bool Has(const std::string& name) const { return entries_.count(name) > 0; }
  // Throws SchemaError for unknown names.
  const Entry& Get(const std::string& name) const;
  std::vector<std::string> Names() const;

  TableSchema ResultSchema(const TableSchema& input, const ExtCall& call) const;
  Table Apply(const Table& input, const ExtCall& call) const;

  // project V..., rename OLD=NEW..., supone NAME..., promote V [IND],
  // indicator [NAME], neg, inverse, scale C, wordcount [ATTR],
  // tokenize [ATTR].
  static const ExtCatalog& Builtins();

 private:
  std::map<std::string, Entry> entries_;
};

}  // namespace lara

#endif  // LARA_PLAN_EXT_CATALOG_H_
