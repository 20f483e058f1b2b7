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

#ifndef LARA_TABLE_TRIPLES_H_
#define LARA_TABLE_TRIPLES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lara/table/schema.h"
#include "lara/table/table.h"

namespace lara {

// Sparse tensor form of a table. Each key attribute gets a lookup list that
// assigns ids 1..n to its distinct support values in sorted order; each
// support row becomes one entry of ids plus values.
//
// With value encoding, each value attribute also gets a lookup list over its
// distinct non-default values and entries carry those ids (0 = default)
// instead of the values themselves.
struct TripleEncoding {
  struct Entry {
    std::vector<std::int64_t> ids;
    Tuple values;
  };

  TableSchema schema;
  std::vector<std::vector<Scalar>> key_lookups;
  std::vector<std::optional<std::vector<Scalar>>> value_lookups;
  std::vector<Entry> entries;
};

TripleEncoding ToTriples(const Table& a, bool encode_values = false);

// Inverse of ToTriples. Throws DomainError for ids outside the lookup lists.
Table FromTriples(const TripleEncoding& encoding);

// Writes `dir`/triples.tsv and `dir`/lookup_<attr>.tsv for every lookup list.
void WriteTriplesTsv(const TripleEncoding& encoding, const std::string& dir);
// Reads the files written by WriteTriplesTsv back. `schema` supplies kinds
// and defaults; value encoding is detected from the lookup files present.
TripleEncoding ReadTriplesTsv(const TableSchema& schema,
                              const std::string& dir);

}  // namespace lara

#endif  // LARA_TABLE_TRIPLES_H_
