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

#include "lara/table/table.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <random>
#include <sstream>

#include "lara/algebra/registry.h"
#include "lara/algebra/union.h"
#include "lara/table/delimited.h"
#include "lara/table/error.h"
#include "lara/table/record.h"
#include "lara/table/triples.h"

namespace lara {
namespace {

constexpr ScalarKind kInt = ScalarKind::kInt;
constexpr ScalarKind kText = ScalarKind::kText;

TableSchema PartSchema() {
  return TableSchema(Keys({{"pid", kText}}),
                     {{"color", kText, Scalar("white")},
                      {"wgt", kInt, Scalar(0)}});
}

Table Parts() {
  return Table(PartSchema(), {{{"p01"}, {"blue", 3}},
                              {{"p02"}, {"red", 4}},
                              {{"p04"}, {"blue", 2}}});
}

TEST(RecordTest, ProjectsOntoNamedComponents) {
  Record r{{"temperature", 73.5}, {"coverage", "low"}, {"humidity", 0.75}};
  EXPECT_EQ(ProjectRecord(r, {"humidity"}), (Record{{"humidity", 0.75}}));
  EXPECT_TRUE(ProjectRecord(r, {}).empty());
  EXPECT_EQ(ProjectRecord(r, {"temperature", "coverage", "humidity"}), r);
  EXPECT_THROW(ProjectRecord(r, {"pressure"}), SchemaError);
}

TEST(RecordTest, ConcatenatesDisjointHeaders) {
  Record h{{"humidity", 0.75}};
  Record c{{"coverage", "low"}};
  EXPECT_EQ(ConcatRecords(h, c),
            (Record{{"coverage", "low"}, {"humidity", 0.75}}));
  EXPECT_EQ(ConcatRecords(h, Record{}), h);
  EXPECT_TRUE(ConcatRecords(Record{}, Record{}).empty());
  EXPECT_THROW(ConcatRecords(h, h), SchemaError);
}

TEST(RecordTest, ComponentOrderDoesNotMatter) {
  EXPECT_EQ((Record{{"a", 1}, {"b", 2}}), (Record{{"b", 2}, {"a", 1}}));
  EXPECT_THROW((Record{{"a", 1}, {"a", 2}}), SchemaError);
}

TEST(SchemaTest, RejectsOverlappingHeadersAndMistypedDefaults) {
  EXPECT_THROW(TableSchema(Keys({{"a", kInt}}), {{"a", kInt, Scalar(0)}}),
               SchemaError);
  EXPECT_THROW(TableSchema(Keys({{"a", kInt}}), {{"v", kInt, Scalar("x")}}),
               SchemaError);
}

TEST(TableTest, LookupIsTotal) {
  Table p = Parts();
  EXPECT_EQ(p.Lookup(Record{{"pid", "p02"}}),
            (Record{{"color", "red"}, {"wgt", 4}}));
  EXPECT_EQ(p.Lookup(Record{{"pid", "p03"}}),
            (Record{{"color", "white"}, {"wgt", 0}}));
  EXPECT_THROW(p.Lookup(Record{{"sid", "p03"}}), SchemaError);
  EXPECT_THROW(p.Lookup(Record{{"pid", 1}}), SchemaError);

  Table e = EmptyTable(Keys({{"s", kText}}));
  EXPECT_TRUE(e.Lookup(Record{{"s", "anything"}}).empty());
}

TEST(TableTest, SupportExcludesDefaultRows) {
  Table r(TableSchema(Keys({{"sid", kText}, {"pid", kText}}),
                      {{"qty", kInt, Scalar(0)}, {"urgent", kText, Scalar("n")}}),
          {{{"s01", "p02"}, {3, "n"}}, {{"s02", "p03"}, {1, "n"}}});
  EXPECT_EQ(r.Support(), (std::vector<Tuple>{{"s01", "p02"}, {"s02", "p03"}}));

  Table spurious(PartSchema(), {{{"p09"}, {"white", 0}}});
  EXPECT_EQ(spurious.SupportSize(), 0u);
  EXPECT_EQ(EmptyTable(Keys({{"k", kInt}})).SupportSize(), 0u);
}

TEST(TableTest, EmptyTableWithoutKeysHasTheUnitMapping) {
  Table e = EmptyTable({});
  EXPECT_EQ(e.schema().key_count(), 0u);
  EXPECT_EQ(e.schema().value_count(), 0u);
  EXPECT_TRUE(e.LookupTuple({}).empty());
  EXPECT_EQ(e.SupportSize(), 0u);
}

TEST(TableTest, CanonicalizeDropsDefaultRowsAndIsIdempotent) {
  TableBuilder b(PartSchema());
  b.Add({"p07"}, {"white", 0}).Add({"p02"}, {"red", 4});
  Table raw = b.Build(/*canonical=*/false);
  EXPECT_EQ(raw.stored_size(), 2u);
  Table c = raw.Canonicalize();
  EXPECT_EQ(c.stored_size(), 1u);
  EXPECT_EQ(c.Canonicalize().rows(), c.rows());
  EXPECT_TRUE(TablesEqual(raw, c));
}

TEST(TableTest, EqualityIgnoresRowAndColumnOrder) {
  std::vector<std::pair<Tuple, Tuple>> rows = {{{"p01"}, {"blue", 3}},
                                               {{"p02"}, {"red", 4}},
                                               {{"p04"}, {"blue", 2}}};
  std::mt19937 rng(7);
  for (int i = 0; i < 5; ++i) {
    std::shuffle(rows.begin(), rows.end(), rng);
    EXPECT_TRUE(TablesEqual(Table(PartSchema(), rows), Parts()));
  }
  Table permuted(TableSchema(Keys({{"pid", kText}}),
                             {{"wgt", kInt, Scalar(0)},
                              {"color", kText, Scalar("white")}}),
                 {{{"p04"}, {2, "blue"}},
                  {{"p01"}, {3, "blue"}},
                  {{"p02"}, {4, "red"}}});
  EXPECT_TRUE(TablesEqual(permuted, Parts()));
}

TEST(TableTest, AppendingADefaultRowChangesNothing) {
  TableBuilder b(PartSchema());
  const Table parts = Parts();
  for (const auto& [k, v] : parts.rows()) b.Add(k, v);
  b.Add({"p76"}, {"white", 0});
  EXPECT_TRUE(TablesEqual(b.Build(false), Parts()));

  Table changed(PartSchema(), {{{"p01"}, {"blue", 3}},
                               {{"p02"}, {"red", 5}},
                               {{"p04"}, {"blue", 2}}});
  EXPECT_FALSE(TablesEqual(changed, Parts()));
}

TEST(TableTest, EqualityComparesDefaults) {
  Table other(TableSchema(Keys({{"pid", kText}}),
                          {{"color", kText, Scalar("black")},
                           {"wgt", kInt, Scalar(0)}}),
              {{{"p01"}, {"blue", 3}},
               {{"p02"}, {"red", 4}},
               {{"p04"}, {"blue", 2}}});
  EXPECT_FALSE(TablesEqual(other, Parts()));
}

TEST(TableTest, RealsCompareWithinTolerance) {
  TableSchema s(Keys({{"k", kInt}}), {{"v", ScalarKind::kReal, Scalar(0.0)}});
  EXPECT_TRUE(TablesEqual(Table(s, {{{1}, {0.1 + 0.2}}}),
                          Table(s, {{{1}, {0.3}}})));
  EXPECT_FALSE(TablesEqual(Table(s, {{{1}, {0.3001}}}),
                           Table(s, {{{1}, {0.3}}})));
}

TEST(TableTest, DecomposesIntoSingleValueTables) {
  std::vector<Table> parts = Decompose(Parts());
  ASSERT_EQ(parts.size(), 2u);
  Table colors(TableSchema(Keys({{"pid", kText}}),
                           {{"color", kText, Scalar("white")}}),
               {{{"p01"}, {"blue"}}, {{"p02"}, {"red"}}, {{"p04"}, {"blue"}}});
  Table weights(TableSchema(Keys({{"pid", kText}}), {{"wgt", kInt, Scalar(0)}}),
                {{{"p01"}, {3}}, {{"p02"}, {4}}, {{"p04"}, {2}}});
  EXPECT_TRUE(TablesEqual(parts[0], colors));
  EXPECT_TRUE(TablesEqual(parts[1], weights));

  OpMap any(std::map<std::string, BinaryOp>{}, ops::Coalesce());
  EXPECT_TRUE(TablesEqual(Union(parts[0], parts[1], any), Parts()));

  std::vector<Table> single = Decompose(weights);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_TRUE(TablesEqual(single[0], weights));
  EXPECT_THROW(Decompose(EmptyTable(Keys({{"pid", kText}}))), SchemaError);
}

TEST(DelimitedTest, ReadsCsvWithSidecar) {
  Sidecar sc = ReadSidecarFile(LARA_TEST_DATA_DIR "/shifts.schema");
  Table t = ReadDelimitedFile(LARA_TEST_DATA_DIR "/shifts.csv", sc.schema);
  EXPECT_EQ(t.SupportSize(), 6u);
  EXPECT_EQ(t.LookupTuple({"0730", "Casey"}), (Tuple{30}));
  EXPECT_EQ(t.LookupTuple({"0730", "Bob"}), (Tuple{0}));
}

TEST(DelimitedTest, MergesDuplicateKeysWithTheCollisionFunction) {
  TableSchema s(Keys({{"k", kText}}), {{"v", kInt, Scalar(0)}});
  std::istringstream in("k,v\na,2\nb,1\na,3\n");
  DelimitedOptions opts;
  BinaryOp plus = ops::Plus();
  opts.collision["v"] = plus.apply;
  Table t = ReadDelimited(in, s, opts);
  EXPECT_EQ(t.LookupTuple({"a"}), (Tuple{5}));

  std::istringstream again("k,v\na,2\na,3\n");
  EXPECT_THROW(ReadDelimited(again, s), ParseError);
}

TEST(DelimitedTest, HeaderOnlyFileIsEmpty) {
  std::istringstream in("pid,color,wgt\n");
  EXPECT_EQ(ReadDelimited(in, PartSchema()).SupportSize(), 0u);
}

TEST(DelimitedTest, ReportsMalformedInputWithPosition) {
  std::istringstream short_row("pid,color,wgt\np01,blue\n");
  try {
    ReadDelimited(short_row, PartSchema());
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  std::istringstream bad_int("pid,color,wgt\np01,blue,heavy\n");
  EXPECT_THROW(ReadDelimited(bad_int, PartSchema()), ParseError);
  std::istringstream missing("pid,color\np01,blue\n");
  EXPECT_THROW(ReadDelimited(missing, PartSchema()), ParseError);
}

TEST(DelimitedTest, RoundTripsCanonicalTables) {
  std::stringstream out;
  WriteDelimited(Parts(), out);
  EXPECT_EQ(out.str(), "pid,color,wgt\np01,blue,3\np02,red,4\np04,blue,2\n");
  EXPECT_TRUE(TablesEqual(ReadDelimited(out, PartSchema()), Parts()));

  std::stringstream empty;
  WriteDelimited(Table(PartSchema()), empty);
  EXPECT_EQ(empty.str(), "pid,color,wgt\n");
}

TEST(DelimitedTest, QuotesFieldsThatNeedIt) {
  TableSchema s(Keys({{"doc", kText}}), {{"txt", kText, Scalar("")}});
  Table t(s, {{{"d1"}, {"a, \"quoted\" word"}}});
  std::stringstream out;
  WriteDelimited(t, out);
  EXPECT_TRUE(TablesEqual(ReadDelimited(out, s), t));
}

TEST(DelimitedTest, SidecarRoundTrips) {
  Sidecar sc{PartSchema(), {{"wgt", "+"}}};
  std::stringstream out;
  WriteSidecar(sc, out);
  Sidecar back = ParseSidecar(out);
  EXPECT_EQ(back.schema, sc.schema);
  EXPECT_EQ(back.collision_ops, sc.collision_ops);
}

Table Shifts() {
  Sidecar sc = ReadSidecarFile(LARA_TEST_DATA_DIR "/shifts.schema");
  return ReadDelimitedFile(LARA_TEST_DATA_DIR "/shifts.csv", sc.schema);
}

TEST(TriplesTest, AssignsIdsInSortedKeyOrder) {
  TripleEncoding enc = ToTriples(Shifts(), /*encode_values=*/true);
  EXPECT_EQ(enc.key_lookups[0], (std::vector<Scalar>{"0730", "1145", "1400"}));
  EXPECT_EQ(enc.key_lookups[1],
            (std::vector<Scalar>{"Alice", "Bob", "Casey", "Joe"}));
  ASSERT_TRUE(enc.value_lookups[0].has_value());
  EXPECT_EQ(*enc.value_lookups[0], (std::vector<Scalar>{15, 30, 60}));
  // The sparse matrix of value ids.
  std::map<std::pair<std::int64_t, std::int64_t>, Scalar> cells;
  for (const auto& e : enc.entries) cells[{e.ids[0], e.ids[1]}] = e.values[0];
  std::map<std::pair<std::int64_t, std::int64_t>, Scalar> want = {
      {{1, 1}, 2}, {{1, 3}, 2}, {{2, 2}, 3}, {{2, 4}, 3}, {{3, 2}, 1},
      {{3, 3}, 1}};
  EXPECT_EQ(cells, want);
  EXPECT_TRUE(TablesEqual(FromTriples(enc), Shifts()));
}

TEST(TriplesTest, RoundTripsWithoutValueEncoding) {
  TripleEncoding enc = ToTriples(Parts());
  EXPECT_EQ(enc.entries.size(), 3u);
  EXPECT_TRUE(TablesEqual(FromTriples(enc), Parts()));

  Table one(PartSchema(), {{{"p01"}, {"blue", 3}}});
  EXPECT_EQ(ToTriples(one).entries.size(), 1u);
}

TEST(TriplesTest, RejectsIdsOutOfRange) {
  TripleEncoding enc = ToTriples(Parts());
  enc.entries[0].ids[0] = 9;
  EXPECT_THROW(FromTriples(enc), DomainError);
}

TEST(TriplesTest, RoundTripsThroughFiles) {
  auto dir = std::filesystem::temp_directory_path() / "lara_triples_test";
  std::filesystem::create_directories(dir);
  TripleEncoding enc = ToTriples(Shifts(), true);
  WriteTriplesTsv(enc, dir.string());
  TripleEncoding back = ReadTriplesTsv(Shifts().schema(), dir.string());
  EXPECT_TRUE(TablesEqual(FromTriples(back), Shifts()));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace lara
