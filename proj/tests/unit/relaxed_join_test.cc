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

#include "lara/algebra/join.h"

#include <gtest/gtest.h>

#include "lara/algebra/registry.h"
#include "lara/table/error.h"

namespace lara {
namespace {

constexpr ScalarKind kText = ScalarKind::kText;

Table PartsByCustomer() {
  return Table(TableSchema(Keys({{"cid", kText}, {"pid", kText}}),
                           {{"color", kText, Scalar("white")}}),
               {{{"M", "p01"}, {"blue"}},
                {{"T", "p01"}, {"red"}},
                {{"M", "p02"}, {"green"}},
                {{"W", "p01"}, {"yellow"}}});
}

Table SuppliersByCustomer() {
  return Table(TableSchema(Keys({{"cid", kText}, {"sid", kText}}),
                           {{"state", kText, Scalar("GA")}}),
               {{{"M", "s01"}, {"WA"}},
                {{"M", "s02"}, {"NJ"}},
                {{"T", "s02"}, {"DE"}},
                {{"F", "s01"}, {"CA"}}});
}

TEST(RelaxedJoinTest, CarriesValuesAcrossDisjointValueHeaders) {
  Table got = RelaxedJoin(PartsByCustomer(), SuppliersByCustomer(),
                          ops::Times());
  Table want(TableSchema(Keys({{"cid", kText}, {"pid", kText}, {"sid", kText}}),
                         {{"color", kText, Scalar("white")},
                          {"state", kText, Scalar("GA")}}),
             {{{"M", "p01", "s01"}, {"blue", "WA"}},
              {{"M", "p01", "s02"}, {"blue", "NJ"}},
              {{"M", "p02", "s01"}, {"green", "WA"}},
              {{"M", "p02", "s02"}, {"green", "NJ"}},
              {{"T", "p01", "s02"}, {"red", "DE"}}});
  EXPECT_TRUE(TablesEqual(got, want)) << DescribeDifference(got, want) << "\n"
                                      << FormatTable(got);
  // The closed-world reading: a key with no entry looks up to the defaults.
  EXPECT_EQ(got.LookupTuple({"T", "p01", "s01"}), (Tuple{"white", "GA"}));
}

TEST(RelaxedJoinTest, PromotesValuesThatAreKeysOfTheOtherSide) {
  Table parts(TableSchema(Keys({{"pid", kText}}),
                          {{"color", kText, Scalar("white")}}),
              {{{"p01"}, {"blue"}}, {{"p02"}, {"red"}}, {{"p03"}, {"blue"}}});
  Table colors(TableSchema(Keys({{"color", kText}}),
                           {{"pretty", kText, Scalar("n")}}),
               {{{"blue"}, {"y"}}, {{"green"}, {"y"}}});
  Table got = RelaxedJoin(parts, colors, ops::Times());
  Table want(TableSchema(Keys({{"pid", kText}, {"color", kText}}),
                         {{"pretty", kText, Scalar("n")}}),
             {{{"p01", "blue"}, {"y"}}, {{"p03", "blue"}, {"y"}}});
  EXPECT_TRUE(TablesEqual(got, want)) << DescribeDifference(got, want) << "\n"
                                      << FormatTable(got);
}

}  // namespace
}  // namespace lara
