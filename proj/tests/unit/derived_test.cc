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
#include <limits>
#include <set>

#include "lara/algebra/ext.h"
#include "lara/algebra/join.h"
#include "lara/algebra/registry.h"
#include "lara/algebra/union.h"
#include "lara/derived/combblas.h"
#include "lara/derived/convolution.h"
#include "lara/derived/relational.h"
#include "lara/table/error.h"
#include "oracle/dense.h"
#include "oracle/random_tables.h"

namespace lara {
namespace {

using oracle::IntKeys;
using oracle::IntUniverse;
using oracle::IntValues;
using oracle::RandomTable;
using oracle::Rng;

constexpr ScalarKind kInt = ScalarKind::kInt;
constexpr ScalarKind kReal = ScalarKind::kReal;
constexpr ScalarKind kText = ScalarKind::kText;
constexpr double kInf = std::numeric_limits<double>::infinity();

#define EXPECT_TABLES_EQ(got, want)                                  \
  EXPECT_TRUE(TablesEqual(got, want)) << DescribeDifference(got, want) \
                                      << "\n" << FormatTable(got)

Table Parts() {
  return Table(TableSchema(Keys({{"pid", kText}}),
                           {{"color", kText, Scalar("white")},
                            {"wgt", kInt, Scalar(0)}}),
               {{{"p01"}, {"blue", 3}},
                {{"p02"}, {"red", 4}},
                {{"p04"}, {"blue", 2}}});
}

TEST(SelectTest, ResetsRowsFailingThePredicate) {
  Table heavy = Select(Parts(), [](const Record& r) {
    return r.Get("wgt").AsInt() > 2;
  });
  EXPECT_EQ(heavy.Support(), (std::vector<Tuple>{{"p01"}, {"p02"}}));
  EXPECT_TABLES_EQ(Select(Parts(), [](const Record&) { return true; }), Parts());
  EXPECT_EQ(Select(Parts(), [](const Record&) { return false; }).SupportSize(),
            0u);
}

TEST(DifferenceTest, SubtractingItselfLeavesNothing) {
  Table a(TableSchema(IntKeys({"i", "j"}), IntValues({"v"})),
          {{{1, 1}, {2}}, {{1, 2}, {3}}, {{2, 1}, {4}}});
  EXPECT_EQ(Difference(a, ProjectValues(SupOne(a, {"w"}), {"w"})).SupportSize(), 0u);
  EXPECT_TABLES_EQ(Difference(a, Table(TableSchema(IntKeys({"i"}), IntValues({"w"})))),
                   a);
}

TEST(DifferenceTest, MatchesASetDifferenceOnSupports) {
  Rng rng(21);
  oracle::Universe u = IntUniverse({"i", "j"}, 3);
  for (int n = 0; n < 100; ++n) {
    Table a = RandomTable(TableSchema(IntKeys({"i", "j"}), IntValues({"v"})), u,
                          6, rng);
    Table b = RandomTable(TableSchema(IntKeys({"i"}), IntValues({"w"})), u, 2,
                          rng);
    std::set<Scalar> removed;
    for (const auto& k : b.Support()) removed.insert(k[0]);
    TableBuilder want(a.schema());
    for (const auto& k : a.Support()) {
      if (!removed.count(k[0])) want.Add(k, a.LookupTuple(k));
    }
    EXPECT_TABLES_EQ(Difference(a, b), want.Build());
  }
}

Table CarFuel(const std::vector<std::pair<Tuple, double>>& rows) {
  TableBuilder b(TableSchema(Keys({{"car", kText}, {"fuel", kText}}),
                             {{"v", kReal, Scalar(0.0)}}));
  for (const auto& [k, v] : rows) b.Add(k, {v});
  return b.Build();
}

Table Fuels() {
  return Table(TableSchema(Keys({{"fuel", kText}}), {{"v", kReal, Scalar(0.0)}}),
               {{{"reg"}, {2.0}}, {{"prem"}, {3.0}}});
}

TEST(DivideTest, NonProductTable) {
  Table t = CarFuel({{{"compact", "reg"}, 4.0},
                     {{"SUV", "prem"}, 21.0},
                     {{"electric", "reg"}, 3.0},
                     {{"electric", "prem"}, 7.0}});
  Table want(TableSchema(Keys({{"car", kText}}), {{"v", kReal, Scalar(0.0)}}),
             {{{"electric"}, {1.5}}});
  EXPECT_TABLES_EQ(Divide(t, Fuels(), ops::Times()), want);
  EXPECT_TABLES_EQ(DivideCounter(t, Fuels(), ops::Times()), want);
}

TEST(DivideTest, ByASingleUnitRowSelectsThatRow) {
  Table t = CarFuel({{{"compact", "reg"}, 4.0}, {{"electric", "prem"}, 7.0}});
  Table unit(Fuels().schema(), {{{"reg"}, {1.0}}});
  Table want(TableSchema(Keys({{"car", kText}}), {{"v", kReal, Scalar(0.0)}}),
             {{{"compact"}, {4.0}}});
  EXPECT_TABLES_EQ(Divide(t, unit, ops::Times()), want);
}

TEST(DivideTest, RejectsBadShapes) {
  Table t = CarFuel({{{"compact", "reg"}, 4.0}});
  EXPECT_THROW(Divide(t, Table(Fuels().schema()), ops::Times()), DomainError);
  Table other(TableSchema(Keys({{"size", kText}}), {{"v", kReal, Scalar(0.0)}}),
              {{{"big"}, {1.0}}});
  EXPECT_THROW(Divide(t, other, ops::Times()), SchemaError);
  EXPECT_THROW(Divide(t, Fuels(), ops::Max0()), OperatorError);
}

// The largest C with C(c) * B(b) <= A(c, b) for every b in supp(B).
Table DivisionByDefinition(const Table& a, const Table& b,
                           const std::vector<Scalar>& cars) {
  TableBuilder out(TableSchema(IntKeys({"c"}), {{"v", kReal, Scalar(0.0)}}));
  for (const auto& c : cars) {
    double best = kInf;
    for (const auto& k : b.Support()) {
      double q = a.LookupTuple({c, k[0]})[0].AsReal() /
                 b.LookupTuple(k)[0].AsReal();
      best = std::min(best, q);
    }
    out.Add({c}, {std::max(best, 0.0)});
  }
  return out.Build();
}

oracle::ValueGen PositiveReals() {
  return [](const ValueAttribute&, Rng& rng) {
    return Scalar(static_cast<double>(1 + rng() % 6) / 2.0);
  };
}

TEST(DivideTest, BothAlgorithmsMatchTheDefinition) {
  Rng rng(31);
  oracle::Universe u = IntUniverse({"c", "f"}, 3);
  TableSchema sa(IntKeys({"c", "f"}), {{"v", kReal, Scalar(0.0)}});
  TableSchema sb(IntKeys({"f"}), {{"v", kReal, Scalar(0.0)}});
  for (int n = 0; n < 100; ++n) {
    Table a = RandomTable(sa, u, 9, rng, PositiveReals());
    Table b = RandomTable(sb, u, 3, rng, PositiveReals());
    if (b.SupportSize() == 0) continue;
    Table want = DivisionByDefinition(a, b, u["c"]);
    EXPECT_TABLES_EQ(Divide(a, b, ops::Times()), want);
    EXPECT_TABLES_EQ(DivideCounter(a, b, ops::Times()), want);
  }
}

TEST(DivideTest, UndoesAJoinWithDisjointKeys) {
  Rng rng(32);
  oracle::Universe u = IntUniverse({"c", "f"}, 4);
  for (int n = 0; n < 100; ++n) {
    Table c = RandomTable(TableSchema(IntKeys({"c"}), {{"v", kReal, Scalar(0.0)}}),
                          u, 4, rng, PositiveReals());
    Table p = RandomTable(TableSchema(IntKeys({"f"}), {{"v", kReal, Scalar(0.0)}}),
                          u, 4, rng, PositiveReals());
    if (p.SupportSize() == 0) continue;
    EXPECT_TABLES_EQ(Divide(StrictJoin(c, p, ops::Times()), p, ops::Times()), c);
  }
}

// Keys of the outer join: each side's support rows extended by the other
// side's unshared key combinations, with both sides looked up.
Table OuterJoinByDefinition(const Table& a, const Table& b) {
  const TableSchema& sa = a.schema();
  const TableSchema& sb = b.schema();
  std::vector<KeyAttribute> keys = sa.keys();
  for (const auto& k : sb.keys()) {
    if (!sa.HasKey(k.name)) keys.push_back(k);
  }
  std::vector<ValueAttribute> values = sa.values();
  for (const auto& v : sb.values()) values.push_back(v);
  TableBuilder out(TableSchema(keys, values));
  auto project = [](const TableSchema& s, const Record& r) {
    Tuple t;
    for (const auto& k : s.keys()) t.push_back(r.Get(k.name));
    return t;
  };
  auto add = [&](const Table& self, const Table& other) {
    std::set<Tuple> extensions;
    for (const auto& k : other.Support()) {
      Tuple e;
      for (size_t i = 0; i < k.size(); ++i) {
        if (!self.schema().HasKey(other.schema().keys()[i].name)) e.push_back(k[i]);
      }
      extensions.insert(e);
    }
    for (const auto& k : self.Support()) {
      for (const auto& e : extensions) {
        std::vector<Record::Field> fields;
        for (size_t i = 0; i < k.size(); ++i) {
          fields.push_back({self.schema().keys()[i].name, k[i]});
        }
        size_t j = 0;
        for (const auto& ko : other.schema().keys()) {
          if (!self.schema().HasKey(ko.name)) fields.push_back({ko.name, e[j++]});
        }
        Record row(fields);
        Tuple key;
        for (const auto& kk : keys) key.push_back(row.Get(kk.name));
        Tuple v = a.LookupTuple(project(sa, row));
        for (const auto& x : b.LookupTuple(project(sb, row))) v.push_back(x);
        out.Set(key, v);
      }
    }
  };
  add(a, b);
  add(b, a);
  return out.Build();
}

TEST(OuterJoinTest, MatchesTheDefinitionOnRandomTables) {
  Rng rng(41);
  oracle::Universe u = IntUniverse({"i", "j", "k"}, 3);
  for (int n = 0; n < 100; ++n) {
    Table a = RandomTable(TableSchema(IntKeys({"i", "j"}), IntValues({"v"})), u,
                          4, rng);
    Table b = RandomTable(TableSchema(IntKeys({"i", "k"}), IntValues({"w"})), u,
                          4, rng);
    EXPECT_TABLES_EQ(OuterJoin(a, b), OuterJoinByDefinition(a, b));
  }
}

TEST(OuterJoinTest, AgreesWithInnerJoinWhereTheInnerJoinHasSupport) {
  Rng rng(42);
  oracle::Universe u = IntUniverse({"i", "j", "k"}, 3);
  for (int n = 0; n < 50; ++n) {
    Table a = RandomTable(TableSchema(IntKeys({"i", "j"}), IntValues({"v"})), u,
                          4, rng);
    Table b = RandomTable(TableSchema(IntKeys({"i", "k"}), IntValues({"w"})), u,
                          4, rng);
    Table inner = RelaxedJoin(a, b, ops::Times());
    Table outer = OuterJoin(a, b);
    for (const auto& k : inner.Support()) {
      EXPECT_EQ(outer.LookupTuple(k), inner.LookupTuple(k));
    }
  }
}

TEST(OuterJoinTest, DisjointKeysGiveTheInnerJoin) {
  Rng rng(43);
  oracle::Universe u = IntUniverse({"i", "k"}, 3);
  for (int n = 0; n < 50; ++n) {
    Table a = RandomTable(TableSchema(IntKeys({"i"}), IntValues({"v"})), u, 3, rng);
    Table b = RandomTable(TableSchema(IntKeys({"k"}), IntValues({"w"})), u, 3, rng);
    EXPECT_TABLES_EQ(OuterJoin(a, b), RelaxedJoin(a, b, ops::Times()));
  }
}

TableSchema MatrixSchema(const char* r, const char* c, Scalar zero = Scalar(0)) {
  return TableSchema(IntKeys({r, c}), {{"v", zero.kind(), zero}});
}

Table Matrix(const char* r, const char* c, const oracle::Dense& m) {
  TableBuilder b(MatrixSchema(r, c));
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = 0; j < m[i].size(); ++j) {
      b.Add({static_cast<int>(i + 1), static_cast<int>(j + 1)},
            {static_cast<int>(m[i][j])});
    }
  }
  return b.Build();
}

TEST(SpGEMMTest, SmallProducts) {
  Table a = Matrix("r", "k", {{1, 2}, {3, 4}});
  Table id = Matrix("k", "c", {{1, 0}, {0, 1}});
  EXPECT_TABLES_EQ(SpGEMM(a, id, ops::Plus(), ops::Times()),
                   Matrix("r", "c", {{1, 2}, {3, 4}}));
  Table b = Matrix("k", "c", {{5, 6}, {7, 8}});
  EXPECT_TABLES_EQ(SpGEMM(a, b, ops::Plus(), ops::Times()),
                   Matrix("r", "c", {{19, 22}, {43, 50}}));
}

TEST(SpGEMMTest, NeedsExactlyOneSharedKey) {
  Table a = Matrix("r", "k", {{1}});
  EXPECT_THROW(SpGEMM(a, a, ops::Plus(), ops::Times()), SchemaError);
  EXPECT_THROW(SpGEMM(a, Matrix("x", "y", {{1}}), ops::Plus(), ops::Times()),
               SchemaError);
}

TEST(SpMVTest, MatchesDenseProduct) {
  Rng rng(51);
  for (int n = 0; n < 30; ++n) {
    size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    oracle::Dense m = oracle::MakeDense(rows, cols, 0);
    for (auto& row : m) {
      for (auto& x : row) x = rng() % 3 == 0 ? static_cast<double>(rng() % 5) : 0;
    }
    oracle::Dense v = oracle::MakeDense(cols, 1, 0);
    for (auto& row : v) row[0] = static_cast<double>(rng() % 4);
    Table vt = ProjectValues(
        RenameAttributes(Matrix("c", "one", v), {}), {"v"});
    vt = Union(vt, EmptyTable(IntKeys({"c"})), ops::Plus());
    Table got = SpMV(Matrix("r", "c", m), vt, ops::Plus(), ops::Times());
    oracle::Dense want = oracle::DenseMultiply(
        m, v, [](double x, double y) { return x + y; },
        [](double x, double y) { return x * y; }, 0);
    EXPECT_EQ(oracle::ToDenseVector(got, "r", "v", rows),
              [&] {
                std::vector<double> w;
                for (auto& row : want) w.push_back(row[0]);
                return w;
              }());
  }
}

TEST(ElementWiseTest, ProductSupportIsWithinTheIntersection) {
  Rng rng(52);
  oracle::Universe u = IntUniverse({"r", "c"}, 4);
  for (int n = 0; n < 50; ++n) {
    Table a = RandomTable(MatrixSchema("r", "c"), u, 8, rng);
    Table b = RandomTable(MatrixSchema("r", "c"), u, 8, rng);
    Table x = SpEWiseX(a, b, ops::Times());
    for (const auto& k : x.Support()) {
      EXPECT_FALSE(a.IsDefault(a.LookupTuple(k)));
      EXPECT_FALSE(b.IsDefault(b.LookupTuple(k)));
    }
    Table sum = SpEWiseSum(a, b, ops::Plus());
    std::set<Tuple> either;
    for (const auto& k : a.Support()) either.insert(k);
    for (const auto& k : b.Support()) either.insert(k);
    // Values are nonnegative, so no two entries cancel.
    EXPECT_EQ(sum.Support(), std::vector<Tuple>(either.begin(), either.end()));
  }
}

TEST(ElementWiseTest, NegatedOperandsMaskTheOtherSide) {
  Table a = Matrix("r", "c", {{1, 2}, {3, 4}});
  Table b = Matrix("r", "c", {{0, 9}, {9, 0}});
  EXPECT_TABLES_EQ(SpEWiseX(a, b, ops::Times(), false, true),
                   Matrix("r", "c", {{1, 0}, {0, 4}}));
  EXPECT_TABLES_EQ(SpEWiseX(b, a, ops::Times(), true, false),
                   Matrix("r", "c", {{1, 0}, {0, 4}}));
  EXPECT_THROW(SpEWiseX(a, b, ops::Times(), true, true), OperatorError);
}

TEST(ReduceTest, ColumnSums) {
  Table a = Matrix("i", "j", {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  Table want(TableSchema(IntKeys({"j"}), IntValues({"v"})),
             {{{1}, {12}}, {{2}, {15}}, {{3}, {18}}});
  EXPECT_TABLES_EQ(Reduce(a, ops::Plus(), {"j"}), want);
}

TEST(SpRefTest, MaskFunctionAndPositionTableAgree) {
  Table a = Matrix("r", "c", {{1, 2}, {3, 4}});
  Table diag = SpRef(a, [](const Record& k) {
    return k.Get("r").AsInt() == k.Get("c").AsInt();
  });
  EXPECT_TABLES_EQ(diag, Matrix("r", "c", {{1, 0}, {0, 4}}));
  Table positions(TableSchema(IntKeys({"r", "c"}), IntValues({"keep"})),
                  {{{1, 1}, {1}}, {{2, 2}, {1}}});
  EXPECT_TABLES_EQ(SpRef(a, positions), diag);
}

TEST(SpAsgnTest, OverwritesWhereTheSourceHasSupport) {
  Table a = Matrix("r", "c", {{1, 2}, {3, 4}});
  Table b = Matrix("r", "c", {{0, 7}, {0, 0}});
  EXPECT_TABLES_EQ(SpAsgn(a, b), Matrix("r", "c", {{1, 7}, {3, 4}}));
}

TEST(ScaleTest, SparseDefaultOneLeavesOtherColumnsAlone) {
  Table a = Matrix("r", "c", {{1, 2, 3}, {4, 5, 6}});
  Table v(TableSchema(IntKeys({"c"}), IntValues({"s"})), {{{2}, {10}}});
  EXPECT_TABLES_EQ(Scale(a, v, ops::Times(), /*sparse_default_one=*/true),
                   Matrix("r", "c", {{1, 20, 3}, {4, 50, 6}}));
  EXPECT_TABLES_EQ(Scale(a, v, ops::Times()),
                   Matrix("r", "c", {{0, 20, 0}, {0, 50, 0}}));
}

TEST(ApplyTest, LeavesDefaultsAlone) {
  Table a = Matrix("r", "c", {{1, 0}, {0, 4}});
  EXPECT_TABLES_EQ(Apply(a, [](const Scalar& x) { return Scalar(x.AsInt() * 3); }),
                   Matrix("r", "c", {{3, 0}, {0, 12}}));
  EXPECT_TABLES_EQ(Transpose(Transpose(a)), a);
}

Table Grid(const oracle::PointMap& points) {
  TableBuilder b(MatrixSchema("i", "j"));
  for (const auto& [k, v] : points) {
    b.Add({k[0], k[1]}, {static_cast<std::int64_t>(v)});
  }
  return b.Build();
}

TEST(ConvolveShiftTest, MatchesDirectConvolution) {
  std::vector<std::vector<KeyOffset>> kernels = {
      {{1, -1}, {0, -1}, {-1, -1}},
      {{0, 0}, {1, 0}, {0, 1}, {1, 1}},
      {{-1, 0}, {1, 0}, {0, -1}, {0, 1}, {0, 0}}};
  Rng rng(61);
  for (int n = 0; n < 20; ++n) {
    oracle::PointMap a;
    for (int i = 1; i <= 5; ++i) {
      for (int j = 1; j <= 5; ++j) {
        if (rng() % 2) a[{i, j}] = static_cast<double>(1 + rng() % 9);
      }
    }
    for (const auto& offsets : kernels) {
      Table got = ConvolveShift(Grid(a), {offsets, ops::Plus()});
      EXPECT_TABLES_EQ(got, Grid(oracle::DirectConvolution(a, offsets)));
    }
  }
}

TEST(ConvolveShiftTest, ZeroOffsetIsTheIdentity) {
  Table a = Matrix("i", "j", {{1, 2}, {0, 4}});
  EXPECT_TABLES_EQ(ConvolveShift(a, {{{0, 0}}, ops::Plus()}), a);
}

TEST(ConvolveShiftTest, PrefixSumInOneDimension) {
  Table ones(TableSchema(IntKeys({"t"}), IntValues({"v"})),
             {{{1}, {1}}, {{2}, {1}}, {{3}, {1}}});
  Table got = ConvolveShift(ones, {{{0}, {1}, {2}}, ops::Plus()});
  Table want(ones.schema(),
             {{{1}, {1}}, {{2}, {2}}, {{3}, {3}}, {{4}, {2}}, {{5}, {1}}});
  EXPECT_TABLES_EQ(got, want);
  EXPECT_EQ(got.LookupTuple({3}), (Tuple{3}));
}

Table Series(const std::map<double, double>& points) {
  TableBuilder b(TableSchema(Keys({{"t", kReal}}), {{"v", kReal, Scalar(0.0)}}));
  for (const auto& [t, v] : points) b.Add({t}, {v});
  return b.Build();
}

TEST(MovingSumTest, MatchesDirectWindowedSums) {
  Rng rng(71);
  for (int n = 0; n < 50; ++n) {
    std::map<double, double> points;
    int count = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < count; ++i) {
      points[0.5 * static_cast<double>(1 + rng() % 20)] =
          static_cast<double>(1 + rng() % 9);
    }
    double d = 0.5 * static_cast<double>(1 + rng() % 8);
    EXPECT_TABLES_EQ(MovingSum(Series(points), d),
                     Series(oracle::WindowedSum(points, d)));
  }
}

TEST(MovingSumTest, EdgeCases) {
  std::map<double, double> one = {{2.0, 5.0}};
  EXPECT_TABLES_EQ(MovingSum(Series(one), 1.0), Series(one));
  std::map<double, double> pts = {{1.0, 1.0}, {2.0, 2.0}, {4.0, 3.0}};
  EXPECT_TABLES_EQ(MovingSum(Series(pts), 100.0),
                   Series({{1.0, 1.0}, {2.0, 3.0}, {4.0, 6.0}}));
  EXPECT_THROW(MovingSum(Series(one), 0.0), DomainError);
  EXPECT_THROW(MovingSum(Series({{-1.0, 2.0}}), 1.0), DomainError);
}

}  // namespace
}  // namespace lara
