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

#ifndef LARA_TABLE_DELIMITED_H_
#define LARA_TABLE_DELIMITED_H_

#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lara/table/schema.h"
#include "lara/table/table.h"

namespace lara {

// Schema sidecar for a delimited file. One declaration per line:
//
//   key NAME KIND
//   value NAME KIND DEFAULT [COLLISION_OP]
//
// KIND is int, real, text or bool. Tokens may be double-quoted ("" is the
// empty text). Blank lines and lines starting with '#' are ignored.
struct Sidecar {
  TableSchema schema;
  // Value attribute -> name of the operator that merges duplicate keys.
  std::map<std::string, std::string> collision_ops;
};

Sidecar ParseSidecar(std::istream& in);
Sidecar ReadSidecarFile(const std::string& path);
void WriteSidecar(const Sidecar& sidecar, std::ostream& out);

using CollisionFn = std::function<Scalar(const Scalar&, const Scalar&)>;

struct DelimitedOptions {
  char delimiter = ',';
  // Per value attribute. A duplicate key whose attributes lack a collision
  // function is a ParseError.
  std::map<std::string, CollisionFn> collision;
};

// Reads a delimited file with a header line. Columns may appear in any order
// but must be exactly the schema's attributes. An empty cell in a non-text
// value column stands for the default. Throws ParseError with line/column.
Table ReadDelimited(std::istream& in, const TableSchema& schema,
                    const DelimitedOptions& options = {});
Table ReadDelimitedFile(const std::string& path, const TableSchema& schema,
                        const DelimitedOptions& options = {});

// Writes the header, then one line per support row in canonical order.
void WriteDelimited(const Table& a, std::ostream& out, char delimiter = ',');
void WriteDelimitedFile(const Table& a, const std::string& path,
                        char delimiter = ',');

// Splits one line into fields, honoring double quotes. Exposed for tests.
std::vector<std::string> SplitDelimitedLine(const std::string& line,
                                            char delimiter, int line_number);

// Delimiter implied by a file name: tab for .tsv, comma otherwise.
char DelimiterForPath(const std::string& path);

}  // namespace lara

#endif  // LARA_TABLE_DELIMITED_H_
