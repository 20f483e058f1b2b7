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

#ifndef LARA_ALGORITHMS_LU_H_
#define LARA_ALGORITHMS_LU_H_

#include <cstdint>

#include "lara/table/table.h"

namespace lara {

// The N x N identity matrix as a table (r, c; v) with real values.
Table Identity(std::int64_t n);

// Matrix product over (+, *) for tables keyed (r, c).
Table MatMul(const Table& a, const Table& b);

struct LuResult {
  Table lower;  // unit lower triangular
  Table upper;  // upper triangular
};

// LU decomposition without pivoting of a square matrix (r, c; v) whose
// integer keys run over 1..N, N being the largest key in the support.
// Throws DomainError when a pivot is zero at elimination time.
LuResult LuDecompose(const Table& a);

}  // namespace lara

#endif  // LARA_ALGORITHMS_LU_H_
