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

#include <gtest/gtest.h>

#include <cmath>

#include "lara/algorithms/lu.h"
#include "lara/algorithms/mcl.h"
#include "lara/algorithms/pagerank.h"
#include "lara/table/error.h"
#include "oracle/dense.h"
#include "oracle/random_tables.h"

namespace lara {
namespace {

using oracle::Dense;

constexpr ScalarKind kInt = ScalarKind::kInt;
constexpr ScalarKind kReal = ScalarKind::kReal;

TableSchema EdgeSchema() {
  return TableSchema(Keys({{"src", kInt}, {"dst", kInt}}),
                     {{"val", kReal, Scalar(0.0)}});
}

Table Edges(const std::map<std::pair<int, int>, double>& edges) {
  TableBuilder b(EdgeSchema());
  for (const auto& [e, w] : edges) b.Add({e.first, e.second}, {w});
  return b.Build();
}

TEST(PageRankTest, SingleEdgeKeepsOnlyTheRestartMass) {
  Table s = Edges({{{1, 2}, 1.0}});
  PageRankResult got = JointPageRank(s, s);
  Table want(TableSchema(Keys({{"dst", kInt}}), {{"val", kReal, Scalar(0.0)}}),
             {{{2}, {0.15}}});
  EXPECT_TRUE(TablesEqual(got.rank, want)) << FormatTable(got.rank);
}

TEST(PageRankTest, InitialVectorSumsToOne) {
  Table s = Edges({{{1, 2}, 1.0}, {{2, 3}, 2.0}, {{3, 1}, 1.0}, {{1, 3}, 1.0}});
  for (std::uint64_t seed : {0u, 1u, 7u}) {
    PageRankResult got = JointPageRank(s, s, {.seed = seed});
    double sum = 0;
    for (const auto& [k, v] : got.initial.rows()) sum += v[0].AsReal();
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
}

TEST(PageRankTest, TinyFollowProbabilityGivesTheRestartVector) {
  Table s = Edges({{{1, 2}, 1.0}, {{2, 3}, 2.0}, {{3, 1}, 1.0}});
  PageRankResult got = JointPageRank(s, s, {.c = 1e-12, .iterations = 1});
  EXPECT_TRUE(TablesEqual(got.rank, got.restart, 1e-9)) << FormatTable(got.rank);
}

TEST(PageRankTest, MatchesDensePowerIteration) {
  oracle::PageRankInput in;
  in.n = 5;
  in.edges1 = {{{1, 2}, 1.0}, {{1, 3}, 2.0}, {{2, 3}, 1.0}, {{3, 1}, 1.0},
               {{4, 1}, 3.0}, {{5, 4}, 1.0}};
  in.edges2 = {{{1, 2}, 3.0}, {{2, 4}, 1.0}, {{3, 1}, 1.0}, {{3, 5}, 2.0},
               {{5, 1}, 1.0}};
  PageRankResult got = JointPageRank(Edges(in.edges1), Edges(in.edges2),
                                     {.seed = 3});
  in.initial = oracle::ToDenseVector(got.initial, "dst", "val", in.n);
  std::vector<double> want = oracle::DensePageRank(in);
  std::vector<double> have = oracle::ToDenseVector(got.rank, "dst", "val", in.n);
  for (size_t i = 0; i < in.n; ++i) EXPECT_NEAR(have[i], want[i], 1e-9) << i;
}

TEST(PageRankTest, NoCommonSourcesGiveAnEmptyRank) {
  PageRankResult got =
      JointPageRank(Edges({{{1, 2}, 1.0}}), Edges({{{2, 1}, 1.0}}));
  EXPECT_EQ(got.rank.SupportSize(), 0u);
}

TEST(PageRankTest, RejectsBadParameters) {
  Table s = Edges({{{1, 2}, 1.0}});
  EXPECT_THROW(JointPageRank(s, s, {.c = 1.0}), DomainError);
  EXPECT_THROW(JointPageRank(s, s, {.c = 0.0}), DomainError);
  Table wrong(TableSchema(Keys({{"a", kInt}, {"b", kInt}}),
                          {{"val", kReal, Scalar(0.0)}}));
  EXPECT_THROW(JointPageRank(wrong, s), SchemaError);
}

Table MclMatrix(const Dense& m) {
  TableBuilder b(TableSchema(Keys({{"row", kInt}, {"col", kInt}}),
                             {{"value", kReal, Scalar(0.0)}}));
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = 0; j < m.size(); ++j) {
      b.Add({static_cast<int>(i + 1), static_cast<int>(j + 1)}, {m[i][j]});
    }
  }
  return b.Build();
}

Dense TwoCliques() {
  // Columns sum to one; {1, 2} and {3, 4} are disconnected, and each column
  // already leans toward one attractor.
  return {{0.9, 0.7, 0, 0}, {0.1, 0.3, 0, 0}, {0, 0, 0.2, 0.1},
          {0, 0, 0.8, 0.9}};
}

TEST(MclTest, TwoCliquesMatchTheDenseOracle) {
  MclResult got = Mcl(MclMatrix(TwoCliques()));
  oracle::MclOutcome want = oracle::DenseMcl(TwoCliques(), 1e-4, 1e-6, 1000);
  EXPECT_TRUE(got.converged);
  ASSERT_EQ(got.chaos.size(), want.chaos.size());
  for (size_t i = 0; i < want.chaos.size(); ++i) {
    EXPECT_NEAR(got.chaos[i], want.chaos[i], 1e-9);
  }
  Dense have = oracle::ToDense(got.matrix, "row", "col", "value", 4, 4);
  EXPECT_LT(oracle::MaxAbsDifference(have, want.matrix), 1e-9);
  // Row 1 attracts the first clique and row 4 the second.
  Dense clusters = {{1, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 1}};
  EXPECT_LT(oracle::MaxAbsDifference(have, clusters), 1e-9);
}

TEST(MclTest, TwoCliqueChaosIsMonotone) {
  MclResult got = Mcl(MclMatrix(TwoCliques()));
  for (size_t i = 1; i < got.chaos.size(); ++i) {
    EXPECT_LE(got.chaos[i], got.chaos[i - 1]) << i;
  }
}

// The loop only continues after a drop larger than epsilon, so every value
// but the last is below its predecessor by more than epsilon. The last may
// rise: that is what ends the loop.
TEST(MclTest, ChaosDropsWhileIterating) {
  Dense m = {{0.2, 0.3, 0.1, 0.0, 0.0},
             {0.3, 0.2, 0.4, 0.0, 0.2},
             {0.5, 0.3, 0.2, 0.1, 0.0},
             {0.0, 0.1, 0.3, 0.5, 0.3},
             {0.0, 0.1, 0.0, 0.4, 0.5}};
  MclResult got = Mcl(MclMatrix(m));
  for (size_t i = 1; i + 1 < got.chaos.size(); ++i) {
    EXPECT_GT(got.chaos[i - 1] - got.chaos[i], 1e-6) << i;
  }
  oracle::MclOutcome want = oracle::DenseMcl(m, 1e-4, 1e-6, 1000);
  EXPECT_LT(oracle::MaxAbsDifference(
                oracle::ToDense(got.matrix, "row", "col", "value", 5, 5),
                want.matrix),
            1e-9);
}

TEST(MclTest, DiagonalMatrixIsAFixedPoint) {
  Dense id = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  MclResult got = Mcl(MclMatrix(id));
  EXPECT_EQ(got.chaos.front(), 0.0);
  EXPECT_TRUE(TablesEqual(got.matrix, MclMatrix(id)));
}

TEST(MclTest, StopsAtTheIterationLimit) {
  MclResult got = Mcl(MclMatrix(TwoCliques()), {.max_iterations = 1});
  EXPECT_EQ(got.chaos.size(), 1u);
  EXPECT_FALSE(got.converged);
  EXPECT_THROW(Mcl(MclMatrix(TwoCliques()), {.epsilon = 0}), DomainError);
}

Table Square(const Dense& m) {
  TableBuilder b(TableSchema(Keys({{"r", kInt}, {"c", kInt}}),
                             {{"v", kReal, Scalar(0.0)}}));
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = 0; j < m.size(); ++j) {
      b.Add({static_cast<int>(i + 1), static_cast<int>(j + 1)}, {m[i][j]});
    }
  }
  return b.Build();
}

void ExpectValidLu(const Dense& a, const LuResult& lu) {
  size_t n = a.size();
  Dense l = oracle::ToDense(lu.lower, "r", "c", "v", n, n);
  Dense u = oracle::ToDense(lu.upper, "r", "c", "v", n, n);
  for (size_t i = 0; i < n; ++i) {
    EXPECT_EQ(l[i][i], 1.0);
    for (size_t j = i + 1; j < n; ++j) {
      EXPECT_EQ(l[i][j], 0.0);
      EXPECT_EQ(u[j][i], 0.0);
    }
  }
  Dense back = oracle::DenseMultiply(
      l, u, [](double x, double y) { return x + y; },
      [](double x, double y) { return x * y; }, 0.0);
  EXPECT_LT(oracle::MaxAbsDifference(back, a), 1e-9);
}

TEST(LuTest, IdentityFactorsIntoIdentities) {
  LuResult lu = LuDecompose(Identity(3));
  EXPECT_TRUE(TablesEqual(lu.lower, Identity(3)));
  EXPECT_TRUE(TablesEqual(lu.upper, Identity(3)));
}

TEST(LuTest, TwoByTwo) {
  Dense a = {{4, 3}, {6, 3}};
  LuResult lu = LuDecompose(Square(a));
  EXPECT_TRUE(TablesEqual(lu.lower, Square({{1, 0}, {1.5, 1}})))
      << FormatTable(lu.lower);
  EXPECT_TRUE(TablesEqual(lu.upper, Square({{4, 3}, {0, -1.5}})))
      << FormatTable(lu.upper);
  ExpectValidLu(a, lu);
}

TEST(LuTest, RandomDiagonallyDominantMatrices) {
  oracle::Rng rng(81);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  for (int n = 0; n < 10; ++n) {
    Dense a = oracle::MakeDense(6, 6, 0);
    for (size_t i = 0; i < 6; ++i) {
      double row = 0;
      for (size_t j = 0; j < 6; ++j) {
        if (i != j && rng() % 3) a[i][j] = entry(rng);
        row += std::abs(a[i][j]);
      }
      a[i][i] = row + 1 + std::abs(entry(rng));
    }
    ExpectValidLu(a, LuDecompose(Square(a)));
  }
}

TEST(LuTest, ZeroPivotIsReported) {
  EXPECT_THROW(LuDecompose(Square({{0, 1}, {1, 0}})), DomainError);
  // The last pivot is never divided by, so a singular U is fine.
  ExpectValidLu({{1, 1}, {1, 1}}, LuDecompose(Square({{1, 1}, {1, 1}})));
  Table bad(TableSchema(Keys({{"r", kInt}, {"c", kInt}}),
                        {{"v", kReal, Scalar(1.0)}}));
  EXPECT_THROW(LuDecompose(bad), SchemaError);
}

TEST(LuTest, MatMulMatchesDenseProduct) {
  Dense a = {{1, 2}, {3, 4}}, b = {{5, 6}, {7, 8}};
  EXPECT_TRUE(TablesEqual(MatMul(Square(a), Square(b)),
                          Square({{19, 22}, {43, 50}})));
}

}  // namespace
}  // namespace lara
