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

#ifndef LARA_DERIVED_COMBBLAS_H_
#define LARA_DERIVED_COMBBLAS_H_

#include <functional>
#include <string>
#include <vector>

#include "lara/algebra/binary_op.h"
#include "lara/table/table.h"

namespace lara {

// Sparse matrix and vector operations over associative tables. A matrix is
// a table with two key attributes, a vector a table with one. Matrix
// operands are matched by attribute name, so transposition is a rename
// (see Transpose).

// Swaps the names of a matrix's two key attributes.
Table Transpose(const Table& a);

// (A join B) u E_{r,c}: A and B have two keys each and share exactly one,
// which is summed out. A and B must share a value attribute.
Table SpGEMM(const Table& a, const Table& b, const OpMap& plus,
             const OpMap& times);

// (A join v) u E_r: v's single key must be one of A's keys; the result is
// keyed by A's other key.
Table SpMV(const Table& a, const Table& v, const OpMap& plus,
           const OpMap& times);

// Element-wise product of tables with the same keys. With `not_b`, the
// result is A with the entries in B's support zeroed (relational
// difference); `not_a` is the mirror image. Both set is an OperatorError.
Table SpEWiseX(const Table& a, const Table& b, const OpMap& times,
               bool not_a = false, bool not_b = false);

// Element-wise sum of tables with the same keys.
Table SpEWiseSum(const Table& a, const Table& b, const OpMap& plus);

// Aggregates away every key not in `keep`.
Table Reduce(const Table& a, const OpMap& plus,
             const std::vector<std::string>& keep);

// Keeps the entries whose key satisfies `keep`, zeroing the rest.
Table SpRef(const Table& a, const std::function<bool(const Record& key)>& keep);
// Keeps the entries of A whose key is in the support of `positions`, a
// table with A's keys.
Table SpRef(const Table& a, const Table& positions);

// Overwrites A with B wherever B has support; B has A's keys and values.
// A's values must be numeric with default 0.
Table SpAsgn(const Table& a, const Table& b);

// Multiplies every row or column of A by the matching entry of v, whose
// single key is one of A's. When v's value attribute is named differently
// from A's (single) value attribute it is renamed to match.
//
// With `sparse_default_one`, entries outside v's support leave A unchanged:
// v is reinterpreted with default 1.
Table Scale(const Table& a, const Table& v, const OpMap& times,
            bool sparse_default_one = false);

// Applies g to every value of A's support rows; default rows stay default.
Table Apply(const Table& a, const std::function<Scalar(const Scalar&)>& g);

}  // namespace lara

#endif  // LARA_DERIVED_COMBBLAS_H_
