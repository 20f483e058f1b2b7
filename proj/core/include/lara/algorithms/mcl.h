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

#ifndef LARA_ALGORITHMS_MCL_H_
#define LARA_ALGORITHMS_MCL_H_

#include <vector>

#include "lara/table/table.h"

namespace lara {

struct MclParams {
  // Entries at or below this value are pruned after inflation.
  double prune_limit = 1e-4;
  // Iteration stops once chaos drops by no more than this.
  double epsilon = 1e-6;
  // Safety bound on the number of iterations.
  int max_iterations = 1000;
};

struct MclResult {
  Table matrix;
  // Chaos after each iteration.
  std::vector<double> chaos;
  // False when max_iterations was reached first.
  bool converged = false;
};

// Markov clustering. The input is a matrix (row, col; value) with default
// 0, normally column-stochastic; any two integer or text keys and one
// numeric value are accepted and the result uses the input's names. Each
// iteration squares the matrix, squares every entry, normalizes columns,
// prunes small entries and measures chaos as the largest per-column gap
// between the column maximum and the column's sum of squares.
MclResult Mcl(const Table& matrix, const MclParams& params = {});

}  // namespace lara

#endif  // LARA_ALGORITHMS_MCL_H_
