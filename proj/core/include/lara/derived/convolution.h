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

#ifndef LARA_DERIVED_CONVOLUTION_H_
#define LARA_DERIVED_CONVOLUTION_H_

#include <cstdint>
#include <vector>

#include "lara/algebra/binary_op.h"
#include "lara/table/table.h"

namespace lara {

using KeyOffset = std::vector<std::int64_t>;

// A convolution kernel given by the keys each entry influences: A(k)
// contributes to the result at k + o for every offset o. Contributions
// landing on the same key are combined with `combine`.
struct ConvolutionKernel {
  std::vector<KeyOffset> offsets;
  BinaryOp combine;
};

// A copy of A with every key moved by `offset`, one component per key
// attribute. Keys must be integers.
Table ShiftKeys(const Table& a, const KeyOffset& offset);

// The shifted copies of A, one per kernel offset, in kernel order.
std::vector<Table> ShiftedCopies(const Table& a,
                                 const ConvolutionKernel& kernel);

// Convolution for kernels that do not depend on A's support: the shifted
// copies joined together with the kernel's operator.
Table ConvolveShift(const Table& a, const ConvolutionKernel& kernel);

// Join operator building the moving-window indicator: 1 when the left time
// is nonzero and right - d <= left <= right, else 0.
BinaryOp WindowIndicator(double d);

struct MovingSumTrace {
  Table times;     // T0: each support row's time copied into its value
  Table renamed;   // T0 with the key renamed to t'
  Table window;    // R: indicator of pairs (t, t') with t' - d <= t <= t'
  Table weighted;  // R join T
  Table result;    // (R join T) u+ E_{t'}
};

// d-moving sum of a time series: every support entry at time t' becomes the
// sum of the entries with time in [t' - d, t']. T has one real key with
// positive support times and one numeric value with default 0; d > 0.
// The result keeps T's key name. Throws DomainError on bad times or d.
Table MovingSum(const Table& t, double d);
MovingSumTrace MovingSumSteps(const Table& t, double d);

}  // namespace lara

#endif  // LARA_DERIVED_CONVOLUTION_H_
