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

#include "lara/figures/figures.h"

#include <cctype>
#include <functional>
#include <sstream>
#include <tuple>
#include <utility>

#include "lara/algebra/ext.h"
#include "lara/algebra/join.h"
#include "lara/algebra/registry.h"
#include "lara/derived/convolution.h"
#include "lara/derived/relational.h"
#include "lara/plan/ext_catalog.h"
#include "lara/table/delimited.h"
#include "lara/table/error.h"

namespace lara {

namespace {

constexpr ScalarKind kInt = ScalarKind::kInt;
constexpr ScalarKind kReal = ScalarKind::kReal;
constexpr ScalarKind kText = ScalarKind::kText;
constexpr double kExact = kRealTolerance;
constexpr double kThreeDecimals = 1e-3;

using Rows = std::vector<std::pair<Tuple, Tuple>>;

Table Make(std::vector<KeyAttribute> keys, std::vector<ValueAttribute> values,
           const Rows& rows) {
  TableBuilder b(TableSchema(std::move(keys), std::move(values)));
  for (const auto& [k, v] : rows) b.Add(k, v);
  return b.Build();
}

// Parts, suppliers and requests.
Table Parts() {
  return Make({{"pid", kText}},
              {{"color", kText, Scalar("white")}, {"wgt", kInt, Scalar(0)}},
              {{{"p01"}, {"blue", 3}}, {{"p02"}, {"red", 4}},
               {{"p04"}, {"blue", 2}}});
}

Table Suppliers() {
  return Make({{"sid", kText}},
              {{"fav", kText, Scalar("unknown")},
               {"state", kText, Scalar("WA")}},
              {{{"s01"}, {"blue", "WA"}}, {{"s02"}, {"red", "NJ"}},
               {{"s04"}, {"blue", "NJ"}}});
}

Table Requests() {
  return Make({{"sid", kText}, {"pid", kText}},
              {{"qty", kInt, Scalar(0)}, {"urgent", kText, Scalar("n")}},
              {{{"s01", "p02"}, {3, "n"}}, {{"s02", "p03"}, {1, "n"}}});
}

Table Documents() {
  return Make({{"doc", kText}}, {{"txt", kText, Scalar("")}},
              {{{"d01"}, {"she sells seashells"}},
               {{"d02"}, {"shells she sells are shells from sea"}},
               {{"d04"}, {"so she sells seashore shells"}}});
}

Table PartsByCustomer() {
  return Make({{"cid", kText}, {"pid", kText}},
              {{"color", kText, Scalar("white")}},
              {{{"M", "p01"}, {"blue"}}, {{"T", "p01"}, {"red"}},
               {{"M", "p02"}, {"green"}}, {{"W", "p01"}, {"yellow"}}});
}

Table SuppliersByCustomer() {
  return Make({{"cid", kText}, {"sid", kText}},
              {{"state", kText, Scalar("GA")}},
              {{{"M", "s01"}, {"WA"}}, {{"M", "s02"}, {"NJ"}},
               {{"T", "s02"}, {"DE"}}, {{"F", "s01"}, {"CA"}}});
}

Table PartColors() {
  return Make({{"pid", kText}}, {{"color", kText, Scalar("white")}},
              {{{"p01"}, {"blue"}}, {{"p02"}, {"red"}}, {{"p03"}, {"blue"}}});
}

Table PrettyColors() {
  return Make({{"color", kText}}, {{"pretty", kText, Scalar("n")}},
              {{{"blue"}, {"y"}}, {{"green"}, {"y"}}});
}

const ValueAttribute kRealValue{"v", kReal, Scalar(0.0)};

Table Cars() {
  return Make({{"car", kText}}, {kRealValue},
              {{{"compact"}, {2.0}}, {{"SUV"}, {5.0}}, {{"electric"}, {1.0}}});
}

Table Fuels() {
  return Make({{"fuel", kText}}, {kRealValue},
              {{{"reg"}, {2.0}}, {{"prem"}, {3.0}}});
}

// Car-fuel prices that are not a product of per-car and per-fuel factors.
Table Prices() {
  return Make({{"car", kText}, {"fuel", kText}}, {kRealValue},
              {{{"compact", "reg"}, {4.0}},
               {{"SUV", "prem"}, {21.0}},
               {{"electric", "reg"}, {3.0}},
               {{"electric", "prem"}, {7.0}}});
}

Table CarsOnly(const Rows& rows) {
  return Make({{"car", kText}}, {kRealValue}, rows);
}

Table FuelOnly(const char* fuel, double v) {
  return Make({{"fuel", kText}}, {kRealValue}, {{{fuel}, {v}}});
}

const DivisionStep& StepFor(const DivisionTrace& trace, const char* fuel) {
  for (const auto& s : trace.steps) {
    if (s.inverse_row.rows().begin()->first == Tuple{fuel}) return s;
  }
  throw DomainError(std::string("no division step for ") + fuel);
}

Table Grid() {
  Rows rows;
  int v = 1;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) rows.push_back({{i, j}, {v++}});
  }
  return Make({{"i", kInt}, {"j", kInt}}, {{"v", kInt, Scalar(0)}}, rows);
}

ConvolutionKernel RightColumnKernel() {
  return {{{1, -1}, {0, -1}, {-1, -1}}, ops::Plus()};
}

Table GridTable(const std::vector<std::tuple<int, int, int>>& entries) {
  Rows rows;
  for (const auto& [i, j, v] : entries) rows.push_back({{i, j}, {v}});
  return Make({{"i", kInt}, {"j", kInt}}, {{"v", kInt, Scalar(0)}}, rows);
}

Table Series() {
  return Make({{"t", kReal}}, {{"v", kInt, Scalar(0)}},
              {{{1.0}, {4}}, {{1.3}, {8}}, {{2.5}, {6}},
               {{3.1}, {2}}, {{5.0}, {3}}, {{9.0}, {42}}});
}

const std::vector<double> kSeriesTimes = {1.0, 1.3, 2.5, 3.1, 5.0, 9.0};

Table RoundTrip(const Table& t) {
  std::stringstream sidecar;
  WriteSidecar({t.schema(), {}}, sidecar);
  Sidecar parsed = ParseSidecar(sidecar);
  std::stringstream csv;
  WriteDelimited(t, csv);
  return ReadDelimited(csv, parsed.schema);
}

using PanelFn = std::function<FigurePanel()>;

FigurePanel Panel(std::string id, std::string caption,
                  std::vector<FigureCheck> checks) {
  return {std::move(id), std::move(caption), std::move(checks)};
}

const std::vector<std::pair<std::string, PanelFn>>& Panels() {
  static const auto* panels = new std::vector<std::pair<std::string, PanelFn>>{
      {"2",
       [] {
         return Panel("2", "part, supplier and request tables through CSV",
                      {{"P", Parts(), RoundTrip(Parts()), kExact},
                       {"S", Suppliers(), RoundTrip(Suppliers()), kExact},
                       {"R", Requests(), RoundTrip(Requests()), kExact}});
       }},
      {"3b",
       [] {
         Table want = Make({{"doc", kText}}, {{"cnt", kInt, Scalar(0)}},
                           {{{"d01"}, {3}}, {{"d02"}, {7}}, {{"d04"}, {5}}});
         Table got = ExtCatalog::Builtins().Apply(Documents(),
                                                  {"wordcount", {"txt"}});
         return Panel("3b", "ext wordcount(D)", {{"ext", want, got, kExact}});
       }},
      {"3c",
       [] {
         Table want = Make(
             {{"doc", kText}, {"wrd", kText}}, {{"cnt", kInt, Scalar(0)}},
             {{{"d01", "she"}, {1}},      {{"d01", "sells"}, {1}},
              {{"d01", "seashells"}, {1}}, {{"d02", "shells"}, {2}},
              {{"d02", "she"}, {1}},      {{"d02", "sells"}, {1}},
              {{"d02", "are"}, {1}},      {{"d02", "from"}, {1}},
              {{"d02", "sea"}, {1}},      {{"d04", "so"}, {1}},
              {{"d04", "she"}, {1}},      {{"d04", "sells"}, {1}},
              {{"d04", "seashore"}, {1}}, {{"d04", "shells"}, {1}}});
         Table got = ExtCatalog::Builtins().Apply(Documents(),
                                                  {"tokenize", {"txt"}});
         return Panel("3c", "ext tokenize(D)", {{"ext", want, got, kExact}});
       }},
      {"5b",
       [] {
         Table want = Make({{"cid", kText}, {"pid", kText}},
                           {{"color", kText, Scalar("white")},
                            {"state", kInt, Scalar(0)}},
                           {{{"M", "p01"}, {"blue", 1}},
                            {{"T", "p01"}, {"red", 1}},
                            {{"M", "p02"}, {"green", 1}},
                            {{"W", "p01"}, {"yellow", 1}}});
         return Panel("5b", "supone(state) of P",
                      {{"supone", want, SupOne(PartsByCustomer(), {"state"}),
                        kExact}});
       }},
      {"5d",
       [] {
         Table want = Make({{"cid", kText}, {"sid", kText}},
                           {{"state", kText, Scalar("GA")},
                            {"color", kInt, Scalar(0)}},
                           {{{"M", "s01"}, {"WA", 1}},
                            {{"M", "s02"}, {"NJ", 1}},
                            {{"T", "s02"}, {"DE", 1}},
                            {{"F", "s01"}, {"CA", 1}}});
         return Panel("5d", "supone(color) of S",
                      {{"supone", want, SupOne(SuppliersByCustomer(), {"color"}),
                        kExact}});
       }},
      {"5e",
       [] {
         Table want = Make({{"cid", kText}, {"pid", kText}, {"sid", kText}},
                           {{"color", kText, Scalar("white")},
                            {"state", kText, Scalar("GA")}},
                           {{{"M", "p01", "s01"}, {"blue", "WA"}},
                            {{"M", "p01", "s02"}, {"blue", "NJ"}},
                            {{"M", "p02", "s01"}, {"green", "WA"}},
                            {{"M", "p02", "s02"}, {"green", "NJ"}},
                            {{"T", "p01", "s02"}, {"red", "DE"}}});
         Table got = RelaxedJoin(PartsByCustomer(), SuppliersByCustomer(),
                                 ops::Times());
         return Panel("5e", "relaxed join of P and S",
                      {{"join", want, got, kExact}});
       }},
      {"7b",
       [] {
         Table want = Make({{"pid", kText}, {"color", kText}},
                           {{"ind", kInt, Scalar(0)}},
                           {{{"p01", "blue"}, {1}},
                            {{"p02", "red"}, {1}},
                            {{"p03", "blue"}, {1}}});
         return Panel("7b", "promote(color) of P",
                      {{"promote", want, Promote(PartColors(), "color", "ind"),
                        kExact}});
       }},
      {"7d",
       [] {
         Table want = Make({{"pid", kText}, {"color", kText}},
                           {{"pretty", kText, Scalar("n")}},
                           {{{"p01", "blue"}, {"y"}}, {{"p03", "blue"}, {"y"}}});
         Table got = RelaxedJoin(PartColors(), PrettyColors(), ops::Times());
         return Panel("7d", "relaxed join with automatic promotion",
                      {{"join", want, got, kExact}});
       }},
      {"8c",
       [] {
         Table want = Make({{"car", kText}, {"fuel", kText}}, {kRealValue},
                           {{{"compact", "reg"}, {4.0}},
                            {{"compact", "prem"}, {6.0}},
                            {{"SUV", "reg"}, {10.0}},
                            {{"SUV", "prem"}, {15.0}},
                            {{"electric", "reg"}, {2.0}},
                            {{"electric", "prem"}, {3.0}}});
         Table got = StrictJoin(Cars(), Fuels(), ops::Times());
         return Panel("8c", "T := C join P", {{"T", want, got, kExact}});
       }},
      {"8d",
       [] {
         Table t = StrictJoin(Cars(), Fuels(), ops::Times());
         DivisionTrace trace = DivideTrace(t, Fuels(), ops::Times());
         return Panel("8d", "inverse of the reg row",
                      {{"p1^-1", FuelOnly("reg", 0.5),
                        StepFor(trace, "reg").inverse_row, kExact}});
       }},
      {"8e",
       [] {
         Table t = StrictJoin(Cars(), Fuels(), ops::Times());
         DivisionTrace trace = DivideTrace(t, Fuels(), ops::Times());
         Table want = CarsOnly(
             {{{"compact"}, {2.0}}, {{"SUV"}, {5.0}}, {{"electric"}, {1.0}}});
         return Panel("8e", "quotient by the reg row",
                      {{"partial", want, StepFor(trace, "reg").partial,
                        kExact}});
       }},
      {"8f",
       [] {
         Table t = StrictJoin(Cars(), Fuels(), ops::Times());
         DivisionTrace trace = DivideTrace(t, Fuels(), ops::Times());
         return Panel("8f", "inverse of the prem row",
                      {{"p2^-1", FuelOnly("prem", 0.333),
                        StepFor(trace, "prem").inverse_row, kThreeDecimals}});
       }},
      {"8g",
       [] {
         Table t = StrictJoin(Cars(), Fuels(), ops::Times());
         DivisionTrace trace = DivideTrace(t, Fuels(), ops::Times());
         Table want = CarsOnly(
             {{{"compact"}, {2.0}}, {{"SUV"}, {5.0}}, {{"electric"}, {1.0}}});
         return Panel("8g", "quotient by the prem row",
                      {{"partial", want, StepFor(trace, "prem").partial,
                        kExact}});
       }},
      {"8h",
       [] {
         Table t = StrictJoin(Cars(), Fuels(), ops::Times());
         return Panel("8h", "(C join P) / P recovers C",
                      {{"T / P", Cars(), Divide(t, Fuels(), ops::Times()),
                        kExact}});
       }},
      {"9d",
       [] {
         DivisionTrace trace = DivideTrace(Prices(), Fuels(), ops::Times());
         Table want = CarsOnly({{{"compact"}, {2.0}}, {{"electric"}, {1.5}}});
         return Panel("9d", "quotient by the reg row",
                      {{"partial", want, StepFor(trace, "reg").partial,
                        kExact}});
       }},
      {"9f",
       [] {
         DivisionTrace trace = DivideTrace(Prices(), Fuels(), ops::Times());
         Table want = CarsOnly({{{"SUV"}, {7.0}}, {{"electric"}, {2.333}}});
         return Panel("9f", "quotient by the prem row",
                      {{"partial", want, StepFor(trace, "prem").partial,
                        kThreeDecimals}});
       }},
      {"9g",
       [] {
         return Panel("9g", "division without a product structure",
                      {{"T / P", CarsOnly({{{"electric"}, {1.5}}}),
                        Divide(Prices(), Fuels(), ops::Times()), kExact}});
       }},
      {"10b",
       [] {
         OuterJoinTrace trace =
             OuterJoinSteps(PartsByCustomer(), SuppliersByCustomer());
         Table want = Make(
             {{"cid", kText}, {"pid", kText}, {"sid", kText}},
             {{"color", kText, Scalar("white")}},
             {{{"M", "p01", "s01"}, {"blue"}},  {{"M", "p01", "s02"}, {"blue"}},
              {{"M", "p02", "s01"}, {"green"}}, {{"M", "p02", "s02"}, {"green"}},
              {{"T", "p01", "s01"}, {"red"}},   {{"T", "p01", "s02"}, {"red"}},
              {{"W", "p01", "s01"}, {"yellow"}},
              {{"W", "p01", "s02"}, {"yellow"}}});
         return Panel("10b", "P side of the outer join",
                      {{"left", want, trace.left, kExact}});
       }},
      {"10d",
       [] {
         OuterJoinTrace trace =
             OuterJoinSteps(PartsByCustomer(), SuppliersByCustomer());
         Table want = Make(
             {{"cid", kText}, {"pid", kText}, {"sid", kText}},
             {{"state", kText, Scalar("GA")}},
             {{{"M", "p01", "s01"}, {"WA"}}, {{"M", "p01", "s02"}, {"NJ"}},
              {{"M", "p02", "s01"}, {"WA"}}, {{"M", "p02", "s02"}, {"NJ"}},
              {{"T", "p01", "s02"}, {"DE"}}, {{"T", "p02", "s02"}, {"DE"}},
              {{"F", "p01", "s01"}, {"CA"}}, {{"F", "p02", "s01"}, {"CA"}}});
         return Panel("10d", "S side of the outer join",
                      {{"right", want, trace.right, kExact}});
       }},
      {"10e",
       [] {
         Table want = Make(
             {{"cid", kText}, {"pid", kText}, {"sid", kText}},
             {{"color", kText, Scalar("white")},
              {"state", kText, Scalar("GA")}},
             {{{"M", "p01", "s01"}, {"blue", "WA"}},
              {{"M", "p01", "s02"}, {"blue", "NJ"}},
              {{"M", "p02", "s01"}, {"green", "WA"}},
              {{"M", "p02", "s02"}, {"green", "NJ"}},
              {{"T", "p01", "s02"}, {"red", "DE"}},
              {{"T", "p01", "s01"}, {"red", "GA"}},
              {{"T", "p02", "s02"}, {"white", "DE"}},
              {{"W", "p01", "s01"}, {"yellow", "GA"}},
              {{"W", "p01", "s02"}, {"yellow", "GA"}},
              {{"F", "p01", "s01"}, {"white", "CA"}},
              {{"F", "p02", "s01"}, {"white", "CA"}}});
         return Panel("10e", "outer join of P and S",
                      {{"outer", want,
                        OuterJoin(PartsByCustomer(), SuppliersByCustomer()),
                        kExact}});
       }},
      {"11c",
       [] {
         DivideCounterTrace trace =
             DivideCounterSteps(Prices(), Fuels(), ops::Times());
         Table want = Make({{"car", kText}, {"fuel", kText}},
                           {kRealValue, {"i", kInt, Scalar(0)}},
                           {{{"compact", "reg"}, {2.0, 1}},
                            {{"SUV", "prem"}, {7.0, 1}},
                            {{"electric", "reg"}, {1.5, 1}},
                            {{"electric", "prem"}, {2.333, 1}}});
         return Panel("11c", "quotients with a counter column",
                      {{"X", want, trace.counted, kThreeDecimals}});
       }},
      {"11d",
       [] {
         DivideCounterTrace trace =
             DivideCounterSteps(Prices(), Fuels(), ops::Times());
         Table want = Make({{"car", kText}}, {kRealValue, {"i", kInt, Scalar(0)}},
                           {{{"compact"}, {2.0, 1}},
                            {{"SUV"}, {7.0, 1}},
                            {{"electric"}, {1.5, 2}}});
         return Panel("11d", "least quotient and match count per car",
                      {{"Y", want, trace.grouped, kExact}});
       }},
      {"11e",
       [] {
         return Panel("11e", "division with a counter column",
                      {{"T / P", CarsOnly({{{"electric"}, {1.5}}}),
                        DivideCounter(Prices(), Fuels(), ops::Times()),
                        kExact}});
       }},
      {"12c",
       [] {
         Table want = GridTable({{0, 0, 1},  {0, 1, 2},  {0, 2, 3},  {1, 0, 5},
                                 {1, 1, 7},  {1, 2, 9},  {1, 3, 0},  {2, 0, 12},
                                 {2, 1, 15}, {2, 2, 18}, {2, 3, 0},  {3, 0, 11},
                                 {3, 1, 13}, {3, 2, 15}, {3, 3, 0},  {4, 0, 7},
                                 {4, 1, 8},  {4, 2, 9}});
         return Panel("12c", "convolution by shifted copies",
                      {{"P1 join+ P2 join+ P3", want,
                        ConvolveShift(Grid(), RightColumnKernel()), kExact}});
       }},
      {"12d",
       [] {
         std::vector<Table> got = ShiftedCopies(Grid(), RightColumnKernel());
         Table p1 = GridTable({{2, 0, 1}, {2, 1, 2}, {2, 2, 3},
                               {3, 0, 4}, {3, 1, 5}, {3, 2, 6},
                               {4, 0, 7}, {4, 1, 8}, {4, 2, 9}});
         Table p2 = GridTable({{1, 0, 1}, {1, 1, 2}, {1, 2, 3},
                               {2, 0, 4}, {2, 1, 5}, {2, 2, 6},
                               {3, 0, 7}, {3, 1, 8}, {3, 2, 9}});
         Table p3 = GridTable({{0, 0, 1}, {0, 1, 2}, {0, 2, 3},
                               {1, 0, 4}, {1, 1, 5}, {1, 2, 6},
                               {2, 0, 7}, {2, 1, 8}, {2, 2, 9}});
         return Panel("12d", "shifted copies of A",
                      {{"P1", p1, got[0], kExact},
                       {"P2", p2, got[1], kExact},
                       {"P3", p3, got[2], kExact}});
       }},
      {"13b",
       [] {
         Rows rows;
         for (double t : kSeriesTimes) rows.push_back({{t}, {t}});
         Table want = Make({{"t", kReal}}, {kRealValue}, rows);
         return Panel("13b", "times copied into values",
                      {{"T0", want, MovingSumSteps(Series(), 2.0).times,
                        kExact}});
       }},
      {"13c",
       [] {
         Rows rows;
         for (double t : kSeriesTimes) rows.push_back({{t}, {t}});
         Table want = Make({{"t'", kReal}}, {kRealValue}, rows);
         return Panel("13c", "renamed time key",
                      {{"T0'", want, MovingSumSteps(Series(), 2.0).renamed,
                        kExact}});
       }},
      {"13d",
       [] {
         Rows rows;
         for (auto [t, u] : std::vector<std::pair<double, double>>{
                  {1.0, 1.0}, {1.0, 1.3}, {1.0, 2.5}, {1.3, 1.3},
                  {1.3, 2.5}, {1.3, 3.1}, {2.5, 2.5}, {2.5, 3.1},
                  {3.1, 3.1}, {3.1, 5.0}, {5.0, 5.0}, {9.0, 9.0}}) {
           rows.push_back({{t, u}, {1}});
         }
         Table want = Make({{"t", kReal}, {"t'", kReal}},
                           {{"v", kInt, Scalar(0)}}, rows);
         return Panel("13d", "window indicator",
                      {{"R", want, MovingSumSteps(Series(), 2.0).window,
                        kExact}});
       }},
      {"13e",
       [] {
         Rows rows;
         for (auto [t, u, v] : std::vector<std::tuple<double, double, int>>{
                  {1.0, 1.0, 4}, {1.0, 1.3, 4}, {1.0, 2.5, 4}, {1.3, 1.3, 8},
                  {1.3, 2.5, 8}, {1.3, 3.1, 8}, {2.5, 2.5, 6}, {2.5, 3.1, 6},
                  {3.1, 3.1, 2}, {3.1, 5.0, 2}, {5.0, 5.0, 3}, {9.0, 9.0, 42}}) {
           rows.push_back({{t, u}, {v}});
         }
         Table want = Make({{"t", kReal}, {"t'", kReal}},
                           {{"v", kInt, Scalar(0)}}, rows);
         return Panel("13e", "window joined with the series",
                      {{"R join T", want, MovingSumSteps(Series(), 2.0).weighted,
                        kExact}});
       }},
      {"13f",
       [] {
         Table want = Make({{"t'", kReal}}, {{"v", kInt, Scalar(0)}},
                           {{{1.0}, {4}},
                            {{1.3}, {4 + 8}},
                            {{2.5}, {4 + 8 + 6}},
                            {{3.1}, {8 + 6 + 2}},
                            {{5.0}, {2 + 3}},
                            {{9.0}, {42}}});
         return Panel("13f", "2-moving sum",
                      {{"(R join T) u+ E_t'", want,
                        MovingSumSteps(Series(), 2.0).result, kExact}});
       }},
  };
  return *panels;
}

}  // namespace

bool FigurePanel::Matches() const {
  for (const auto& c : checks) {
    if (!c.Matches()) return false;
  }
  return !checks.empty();
}

std::vector<std::string> FigurePanelIds() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : Panels()) ids.push_back(id);
  return ids;
}

FigurePanel ReproduceFigure(const std::string& id) {
  for (const auto& [panel_id, fn] : Panels()) {
    if (panel_id == id) return fn();
  }
  throw DomainError("unknown figure '" + id + "'");
}

std::vector<FigurePanel> ReproduceFigures(const std::string& selector) {
  std::vector<FigurePanel> out;
  for (const auto& [id, fn] : Panels()) {
    bool figure_match =
        id.size() > selector.size() && id.compare(0, selector.size(), selector) == 0 &&
        !std::isdigit(static_cast<unsigned char>(id[selector.size()]));
    if (selector == "all" || id == selector || figure_match) out.push_back(fn());
  }
  if (out.empty()) throw DomainError("unknown figure '" + selector + "'");
  return out;
}

}  // namespace lara
