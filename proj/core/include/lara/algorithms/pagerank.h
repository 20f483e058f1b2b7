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

#ifndef LARA_ALGORITHMS_PAGERANK_H_
#define LARA_ALGORITHMS_PAGERANK_H_

#include <cstdint>

#include "lara/table/table.h"

namespace lara {

struct PageRankParams {
  // Probability of following an edge; 1 - c is the restart probability.
  double c = 0.85;
  int iterations = 20;
  // Seeds the random initial rank vector.
  std::uint64_t seed = 0;
};

struct PageRankResult {
  Table common;     // src nodes present in both networks, indicator-valued
  Table adjacency;  // merged edges, each row normalized by its out-degree
  Table initial;    // r after the random start and normalization
  Table restart;    // a: (1 - c) / |supp r| on every dst node
  Table rank;       // r after the iterations
};

// PageRank over the users common to two networks. S1 and S2 have schema
// (src, dst; val) with default 0. Edges whose src occurs in both networks
// are kept; an edge present in both takes the average weight. The rank
// vector is keyed by dst and updated as
//   r(dst) = c * sum_src A(src, dst) * r(src) + a(dst).
// An empty common support yields an empty rank table.
PageRankResult JointPageRank(const Table& s1, const Table& s2,
                             const PageRankParams& params = {});

}  // namespace lara

#endif  // LARA_ALGORITHMS_PAGERANK_H_
