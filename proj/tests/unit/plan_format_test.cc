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

#include "lara/plan/plan_format.h"

#include <gtest/gtest.h>

#include "lara/algebra/registry.h"
#include "lara/table/error.h"

namespace lara {
namespace {

SchemaEnv Env() {
  return {
      {"A", TableSchema({{"i", ScalarKind::kInt}, {"j", ScalarKind::kInt}},
                        {{"v", ScalarKind::kReal, Scalar(0.0)}})},
      {"B", TableSchema({{"j", ScalarKind::kInt}, {"k", ScalarKind::kInt}},
                        {{"v", ScalarKind::kReal, Scalar(0.0)}})},
      {"D", TableSchema({{"doc", ScalarKind::kInt}},
                        {{"txt", ScalarKind::kText, Scalar("")}})},
  };
}

int ErrorLine(const std::string& text) {
  try {
    ParsePlan(text, Env());
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(PlanFormatTest, MatrixProductTypes) {
  Plan p = ParsePlan("(union + (join * (table A) (table B)) (empty i k))", Env());
  EXPECT_EQ(p.kind(), PlanKind::kUnion);
  EXPECT_EQ(p.schema().KeyNames(), (std::set<std::string>{"i", "k"}));
  EXPECT_EQ(p.left().kind(), PlanKind::kStrictJoin);
  EXPECT_EQ(p.Size(), 5u);
}

TEST(PlanFormatTest, RoundTrips) {
  const char* plans[] = {
      "(table A)",
      "(union + (join * (table A) (table B)) (empty i:int k:int))",
      "(rjoin {v:* *:+} (table A) (table B))",
      "(ext tokenize (table D))",
      "(ext (rename \"v=odd name\") (table A))",
      "(union + (empty j:int) (ext (project v) (table B)))",
  };
  for (const char* text : plans) {
    Plan p = ParsePlan(text, Env());
    std::string once = SerializePlan(p);
    Plan q = ParsePlan(once, Env());
    EXPECT_EQ(SerializePlan(q), once) << text;
    EXPECT_TRUE(q.schema() == p.schema()) << text;
    EXPECT_EQ(q.Size(), p.Size()) << text;
  }
}

TEST(PlanFormatTest, CanonicalTextTypesEmptyKeys) {
  Plan p = ParsePlan("(union + (join * (table A) (table B)) (empty i k))", Env());
  EXPECT_EQ(SerializePlan(p),
            "(union + (join * (table A) (table B)) (empty i:int k:int))");
}

TEST(PlanFormatTest, UntypedEmptyTakesKindFromSibling) {
  Plan p = ParsePlan("(union concat (empty doc) (table D))", Env());
  EXPECT_EQ(p.left().schema().Key("doc").kind, ScalarKind::kInt);
}

TEST(PlanFormatTest, CommentsAndWhitespace) {
  Plan p = ParsePlan("; word counts\n(ext wordcount\n  (table D)) ; done\n",
                     Env());
  EXPECT_EQ(p.schema().values().at(0).name, "cnt");
}

TEST(PlanFormatTest, EmptyDocumentIsAParseError) {
  EXPECT_THROW(ParsePlan("", Env()), ParseError);
  EXPECT_THROW(ParsePlan("  ; only a comment\n", Env()), ParseError);
}

TEST(PlanFormatTest, ErrorsCarryLineAndColumn) {
  try {
    ParsePlan("(union +\n  (table A)\n  (table Q))", Env());
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 10);
  }
  EXPECT_EQ(ErrorLine("(join\n  nosuchop (table A) (table B))"), 2);
  EXPECT_EQ(ErrorLine("(table A"), 1);
  EXPECT_EQ(ErrorLine("(table A))"), 1);
  EXPECT_EQ(ErrorLine("(frob (table A))"), 1);
  EXPECT_EQ(ErrorLine("(table A)\n(table B)"), 2);
  EXPECT_EQ(ErrorLine("(ext\n nosuchext (table A))"), 2);
  EXPECT_EQ(ErrorLine("(union + (table A))"), 1);
  EXPECT_EQ(ErrorLine("(empty z)"), 1);
  EXPECT_EQ(ErrorLine("(empty z:complex)"), 1);
  EXPECT_EQ(ErrorLine("(ext (project v) (table \"A)"), 1);
}

TEST(PlanFormatTest, TypeErrorsAreNotParseErrors) {
  // Well-formed text whose operands do not fit together.
  EXPECT_THROW(ParsePlan("(union + (table A) (table D))", Env()), LaraError);
  try {
    ParsePlan("(union + (table A) (table D))", Env());
  } catch (const ParseError&) {
    FAIL() << "schema clash reported as a parse error";
  } catch (const LaraError&) {
  }
  EXPECT_THROW(ParsePlan("(ext (project w) (table A))", Env()), SchemaError);
}

TEST(PlanEvaluateTest, FailuresNameTheNode) {
  SchemaEnv env = Env();
  Plan p = ParsePlan("(ext wordcount (table D))", env);
  try {
    Evaluate(p, {});
    FAIL() << "expected PlanEvaluationError";
  } catch (const PlanEvaluationError& e) {
    EXPECT_EQ(e.node(), "(table D)");
    EXPECT_THROW(std::rethrow_exception(e.cause()), SchemaError);
  }
}

TEST(ExtCatalogTest, BuiltinsAreListed) {
  std::vector<std::string> names = ExtCatalog::Builtins().Names();
  for (const char* n : {"project", "rename", "supone", "promote", "indicator",
                        "neg", "inverse", "scale", "wordcount", "tokenize"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  }
  EXPECT_THROW(ExtCatalog::Builtins().Get("frob"), SchemaError);
}

TEST(ExtCatalogTest, AppliesThroughPlans) {
  SchemaEnv env = Env();
  Table a(env.at("A"), {{{1, 1}, {2.0}}, {{1, 2}, {-4.0}}});
  Table scaled = Evaluate(ParsePlan("(ext (scale 0.5) (table A))", env),
                          {{"A", a}});
  EXPECT_TRUE(TablesEqual(scaled, Table(env.at("A"), {{{1, 1}, {1.0}},
                                                      {{1, 2}, {-2.0}}})));
  Table inverted = Evaluate(ParsePlan("(ext inverse (ext neg (table A)))", env),
                            {{"A", a}});
  EXPECT_TRUE(TablesEqual(inverted, Table(env.at("A"), {{{1, 1}, {-0.5}},
                                                        {{1, 2}, {0.25}}})));
  EXPECT_THROW(ParsePlan("(ext (scale) (table A))", env), LaraError);
  EXPECT_THROW(ParsePlan("(ext (rename v) (table A))", env), SchemaError);
}

}  // namespace
}  // namespace lara
