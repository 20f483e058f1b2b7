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

#ifndef LARA_ALGEBRA_EXT_H_
#define LARA_ALGEBRA_EXT_H_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lara/table/record.h"
#include "lara/table/table.h"

namespace lara {

// A row-to-table function for ext. `apply` receives one row of the input
// (key and value components together) and returns the rows of a finite
// table over (output_keys -> output_values); rows it omits take the output
// defaults.
//
// Contract: a row whose values are all defaults must produce only default
// rows. Ext checks this on samples and throws ExtContractError otherwise.
struct ExtFunction {
  using Rows = std::vector<std::pair<Tuple, Tuple>>;

  std::string name;
  // When set, the input table's schema must equal it.
  std::optional<TableSchema> input_schema;
  std::vector<KeyAttribute> output_keys;
  std::vector<ValueAttribute> output_values;
  std::function<Rows(const Record& row)> apply;
};

// Number of random keys, beyond the support, used to check the contract.
inline constexpr int kExtContractRandomKeys = 10;

TableSchema ExtSchema(const TableSchema& input, const ExtFunction& f);

// ext_f(A)(k . k') = f(k . A(k))(k').
Table Ext(const Table& a, const ExtFunction& f);

// Value-to-value function for map-shaped exts. Receives the full row.
using RowFn = std::function<Tuple(const Record& row)>;

// ext with no new keys: each row's values are replaced by g(row). g must
// send default rows to the new defaults.
Table Map(const Table& a, std::vector<ValueAttribute> output_values, RowFn g,
          std::string name = "map");

// Like Map, but g runs only on support rows; default rows map to the new
// defaults without consulting g.
Table MapNonZero(const Table& a, std::vector<ValueAttribute> output_values,
                 RowFn g, std::string name = "mapnz");

// Keeps the listed value attributes, in A's order. Throws SchemaError for
// unknown names.
Table ProjectValues(const Table& a, const std::vector<std::string>& names);

// Renames attributes, keeping their role, kind and default.
Table RenameAttributes(const Table& a,
                       const std::map<std::string, std::string>& renaming);

// Appends int indicator attributes, 1 on support rows and default 0.
Table SupOne(const Table& a, const std::vector<std::string>& names);

// Turns value attribute `v` into a trailing key attribute and appends an int
// indicator value (1 on former support rows, default 0). The indicator is
// named `indicator` if given, else v followed by enough apostrophes to be
// fresh.
Table Promote(const Table& a, const std::string& v,
              std::optional<std::string> indicator = std::nullopt);
TableSchema PromoteSchema(const TableSchema& a, const std::string& v,
                          const std::string& indicator);
std::string PromoteIndicatorName(const TableSchema& a, const std::string& v);

}  // namespace lara

#endif  // LARA_ALGEBRA_EXT_H_
