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

#include "oracle/dense.h"

#include <algorithm>
#include <cmath>
#include <set>

namespace lara::oracle {

Dense MakeDense(size_t rows, size_t cols, double fill) {
  return Dense(rows, std::vector<double>(cols, fill));
}

Dense ToDense(const Table& t, const std::string& row, const std::string& col,
              const std::string& value, size_t rows, size_t cols) {
  const TableSchema& s = t.schema();
  Dense out = MakeDense(rows, cols, s.Value(value).default_value.AsReal());
  size_t ri = *s.KeyIndex(row);
  size_t ci = *s.KeyIndex(col);
  size_t vi = *s.ValueIndex(value);
  for (const auto& [k, v] : t.rows()) {
    out[k[ri].AsInt() - 1][k[ci].AsInt() - 1] = v[vi].AsReal();
  }
  return out;
}

std::vector<double> ToDenseVector(const Table& t, const std::string& key,
                                  const std::string& value, size_t n) {
  const TableSchema& s = t.schema();
  std::vector<double> out(n, s.Value(value).default_value.AsReal());
  size_t ki = *s.KeyIndex(key);
  size_t vi = *s.ValueIndex(value);
  for (const auto& [k, v] : t.rows()) out[k[ki].AsInt() - 1] = v[vi].AsReal();
  return out;
}

Dense DenseMultiply(const Dense& a, const Dense& b, const ScalarFn& plus,
                    const ScalarFn& times, double zero) {
  size_t n = a.size();
  size_t m = b.empty() ? 0 : b[0].size();
  size_t inner = b.size();
  Dense out = MakeDense(n, m, zero);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) {
      double acc = zero;
      for (size_t k = 0; k < inner; ++k) acc = plus(acc, times(a[i][k], b[k][j]));
      out[i][j] = acc;
    }
  }
  return out;
}

PointMap ToPoints(const Table& t, const std::string& value) {
  const TableSchema& s = t.schema();
  size_t vi = *s.ValueIndex(value);
  PointMap out;
  for (const auto& k : t.Support()) {
    Coord c;
    for (const auto& x : k) c.push_back(x.AsInt());
    out[c] = t.LookupTuple(k)[vi].AsReal();
  }
  return out;
}

PointMap DirectConvolution(const PointMap& a, const std::vector<Coord>& offsets) {
  // Every output coordinate is some input coordinate plus an offset.
  std::set<Coord> targets;
  for (const auto& [k, v] : a) {
    for (const auto& o : offsets) {
      Coord t = k;
      for (size_t i = 0; i < t.size(); ++i) t[i] += o[i];
      targets.insert(t);
    }
  }
  PointMap out;
  for (const auto& t : targets) {
    double sum = 0;
    for (const auto& o : offsets) {
      Coord src = t;
      for (size_t i = 0; i < src.size(); ++i) src[i] -= o[i];
      auto it = a.find(src);
      if (it != a.end()) sum += it->second;
    }
    if (sum != 0) out[t] = sum;
  }
  return out;
}

std::map<double, double> WindowedSum(const std::map<double, double>& series,
                                     double d) {
  std::map<double, double> out;
  for (const auto& [u, unused] : series) {
    double sum = 0;
    for (const auto& [t, v] : series) {
      if (t <= u && u <= t + d) sum += v;
    }
    if (sum != 0) out[u] = sum;
  }
  return out;
}

std::vector<double> DensePageRank(const PageRankInput& in) {
  const size_t n = in.n;
  std::vector<bool> out1(n, false), out2(n, false);
  for (const auto& [e, w] : in.edges1) {
    if (w != 0) out1[e.first - 1] = true;
  }
  for (const auto& [e, w] : in.edges2) {
    if (w != 0) out2[e.first - 1] = true;
  }
  // Edges leaving sources active in both networks; weights seen in both are
  // averaged.
  Dense a = MakeDense(n, n, 0.0);
  Dense seen = MakeDense(n, n, 0.0);
  for (const auto* edges : {&in.edges1, &in.edges2}) {
    for (const auto& [e, w] : *edges) {
      size_t s = e.first - 1, t = e.second - 1;
      if (w == 0 || !out1[s] || !out2[s]) continue;
      a[s][t] += w;
      seen[s][t] += 1;
    }
  }
  for (size_t s = 0; s < n; ++s) {
    double degree = 0;
    for (size_t t = 0; t < n; ++t) {
      if (seen[s][t] > 0) a[s][t] /= seen[s][t];
      degree += a[s][t];
    }
    if (degree != 0) {
      for (size_t t = 0; t < n; ++t) a[s][t] /= degree;
    }
  }
  std::vector<double> r = in.initial;
  size_t support = std::count_if(r.begin(), r.end(),
                                 [](double x) { return x != 0; });
  std::vector<double> restart(n, 0.0);
  for (size_t i = 0; i < n; ++i) {
    if (r[i] != 0) restart[i] = (1 - in.c) / static_cast<double>(support);
  }
  for (int it = 0; it < in.iterations; ++it) {
    std::vector<double> next = restart;
    for (size_t s = 0; s < n; ++s) {
      for (size_t t = 0; t < n; ++t) next[t] += in.c * a[s][t] * r[s];
    }
    r = next;
  }
  return r;
}

MclOutcome DenseMcl(Dense m, double prune_limit, double epsilon,
                    int max_iterations) {
  const size_t n = m.size();
  MclOutcome out;
  double new_chaos = 1000, old_chaos;
  int iteration = 0;
  do {
    old_chaos = new_chaos;
    Dense sq = DenseMultiply(
        m, m, [](double x, double y) { return x + y; },
        [](double x, double y) { return x * y; }, 0.0);
    for (auto& row : sq) {
      for (auto& x : row) x *= x;
    }
    new_chaos = 0;
    for (size_t j = 0; j < n; ++j) {
      double sum = 0;
      for (size_t i = 0; i < n; ++i) sum += sq[i][j];
      double max = 0, sum_sq = 0;
      for (size_t i = 0; i < n; ++i) {
        double x = sum == 0 ? 0 : sq[i][j] / sum;
        x = x > prune_limit ? x : 0;
        sq[i][j] = x;
        max = std::max(max, x);
        sum_sq += x * x;
      }
      new_chaos = std::max(new_chaos, max - sum_sq);
    }
    out.chaos.push_back(new_chaos);
    m = sq;
    ++iteration;
  } while (old_chaos - new_chaos > epsilon && iteration < max_iterations);
  out.matrix = m;
  return out;
}

double MaxAbsDifference(const Dense& a, const Dense& b) {
  double worst = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a[i].size(); ++j) {
      worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
    }
  }
  return worst;
}

}  // namespace lara::oracle
