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

#include "lara/plan/ext_catalog.h"

#include <set>
#include <sstream>

#include "lara/algebra/ext.h"
#include "lara/table/error.h"

namespace lara {

namespace {

void RequireArgs(const std::string& name, const std::vector<std::string>& args,
                 size_t min, size_t max) {
  if (args.size() < min || args.size() > max) {
    throw SchemaError("ext '" + name + "' takes " + std::to_string(min) +
                      (max == min ? "" : ".." + std::to_string(max)) +
                      " arguments, got " + std::to_string(args.size()));
  }
}

std::string TextAttribute(const TableSchema& s,
                          const std::vector<std::string>& args,
                          const std::string& ext) {
  if (!args.empty()) {
    if (s.Value(args[0]).kind != ScalarKind::kText) {
      throw SchemaError("ext '" + ext + "': '" + args[0] + "' is not text");
    }
    return args[0];
  }
  std::string found;
  for (const auto& v : s.values()) {
    if (v.kind != ScalarKind::kText) continue;
    if (!found.empty()) {
      throw SchemaError("ext '" + ext +
                        "': several text attributes, name one explicitly");
    }
    found = v.name;
  }
  if (found.empty()) throw SchemaError("ext '" + ext + "': no text attribute");
  return found;
}

std::vector<std::string> Words(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// Applies `fn` to every value of a numeric-valued table, keeping the schema.
Table MapNumeric(const Table& a, const std::string& name,
                 const std::function<Scalar(const Scalar&)>& fn) {
  return Map(a, a.schema().values(),
             [&](const Record& row) {
               Tuple out;
               for (const auto& v : a.schema().values()) {
                 out.push_back(fn(row.Get(v.name)));
               }
               return out;
             },
             name);
}

Scalar Negate(const Scalar& x) {
  return x.kind() == ScalarKind::kInt ? Scalar(-x.AsInt()) : Scalar(-x.AsReal());
}

}  // namespace

std::string ExtCall::ToString() const {
  if (args.empty()) return function;
  std::string out = "(" + function;
  for (const auto& a : args) out += " " + a;
  return out + ")";
}

void ExtCatalog::Register(Entry entry) {
  std::string name = entry.name;
  entries_[name] = std::move(entry);
}

const ExtCatalog::Entry& ExtCatalog::Get(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw SchemaError("unknown ext function '" + name + "'");
  return it->second;
}

std::vector<std::string> ExtCatalog::Names() const {
  std::vector<std::string> out;
  for (const auto& [n, e] : entries_) out.push_back(n);
  return out;
}

TableSchema ExtCatalog::ResultSchema(const TableSchema& input,
                                     const ExtCall& call) const {
  const Entry& e = Get(call.function);
  if (e.schema) return e.schema(input, call.args);
  return e.apply(Table(input), call.args).schema();
}

Table ExtCatalog::Apply(const Table& input, const ExtCall& call) const {
  return Get(call.function).apply(input, call.args);
}

const ExtCatalog& ExtCatalog::Builtins() {
  static const ExtCatalog* catalog = [] {
    auto* c = new ExtCatalog();
    c->Register({"project", "project V...", nullptr,
                 [](const Table& a, const std::vector<std::string>& args) {
                   return ProjectValues(a, args);
                 }});
    c->Register({"rename", "rename OLD=NEW...", nullptr,
                 [](const Table& a, const std::vector<std::string>& args) {
                   std::map<std::string, std::string> renaming;
                   for (const auto& arg : args) {
                     auto eq = arg.find('=');
                     if (eq == std::string::npos) {
                       throw SchemaError("rename argument '" + arg +
                                         "' is not OLD=NEW");
                     }
                     renaming[arg.substr(0, eq)] = arg.substr(eq + 1);
                   }
                   return RenameAttributes(a, renaming);
                 }});
    c->Register({"supone", "supone NAME...", nullptr,
                 [](const Table& a, const std::vector<std::string>& args) {
                   return SupOne(a, args);
                 }});
    c->Register({"promote", "promote V [INDICATOR]", nullptr,
                 [](const Table& a, const std::vector<std::string>& args) {
                   RequireArgs("promote", args, 1, 2);
                   return Promote(a, args[0],
                                  args.size() > 1
                                      ? std::optional<std::string>(args[1])
                                      : std::nullopt);
                 }});
    c->Register({"indicator", "indicator [NAME]", nullptr,
                 [](const Table& a, const std::vector<std::string>& args) {
                   RequireArgs("indicator", args, 0, 1);
                   std::string name = args.empty() ? "v" : args[0];
                   std::set<std::string> taken = a.schema().KeyNames();
                   if (taken.count(name)) {
                     throw SchemaError("indicator name '" + name +
                                       "' is a key attribute");
                   }
                   return Map(a, {{name, ScalarKind::kInt, Scalar(0)}},
                              [&a](const Record& row) {
                                for (const auto& v : a.schema().values()) {
                                  if (!(row.Get(v.name) == v.default_value)) {
                                    return Tuple{Scalar(1)};
                                  }
                                }
                                return Tuple{Scalar(0)};
                              },
                              "indicator");
                 }});
    c->Register({"neg", "neg", nullptr,
                 [](const Table& a, const std::vector<std::string>& args) {
                   RequireArgs("neg", args, 0, 0);
                   return MapNumeric(a, "neg", Negate);
                 }});
    c->Register({"inverse", "inverse", nullptr,
                 [](const Table& a, const std::vector<std::string>& args) {
                   RequireArgs("inverse", args, 0, 0);
                   std::vector<ValueAttribute> out = a.schema().values();
                   for (auto& v : out) {
                     v.kind = ScalarKind::kReal;
                     v.default_value = Scalar(v.default_value.AsReal());
                   }
                   return MapNonZero(a, out,
                                     [&a](const Record& row) {
                                       Tuple t;
                                       for (const auto& v : a.schema().values()) {
                                         const Scalar& x = row.Get(v.name);
                                         t.push_back(x == v.default_value
                                                         ? Scalar(x.AsReal())
                                                         : Scalar(1.0 / x.AsReal()));
                                       }
                                       return t;
                                     },
                                     "inverse");
                 }});
    c->Register({"scale", "scale C", nullptr,
                 [](const Table& a, const std::vector<std::string>& args) {
                   RequireArgs("scale", args, 1, 1);
                   double factor = ParseScalar(args[0], ScalarKind::kReal).AsReal();
                   std::vector<ValueAttribute> out = a.schema().values();
                   for (auto& v : out) v.kind = ScalarKind::kReal;
                   return Map(a, out,
                              [&](const Record& row) {
                                Tuple t;
                                for (const auto& v : a.schema().values()) {
                                  t.push_back(Scalar(row.Get(v.name).AsReal() * factor));
                                }
                                return t;
                              },
                              "scale");
                 }});
    c->Register({"wordcount", "wordcount [ATTR]", nullptr,
                 [](const Table& a, const std::vector<std::string>& args) {
                   RequireArgs("wordcount", args, 0, 1);
                   std::string attr = TextAttribute(a.schema(), args, "wordcount");
                   return Map(a, {{"cnt", ScalarKind::kInt, Scalar(0)}},
                              [attr](const Record& row) {
                                return Tuple{Scalar(static_cast<std::int64_t>(
                                    Words(row.Get(attr).AsText()).size()))};
                              },
                              "wordcount");
                 }});
    c->Register({"tokenize", "tokenize [ATTR]", nullptr,
                 [](const Table& a, const std::vector<std::string>& args) {
                   RequireArgs("tokenize", args, 0, 1);
                   std::string attr = TextAttribute(a.schema(), args, "tokenize");
                   ExtFunction f;
                   f.name = "tokenize";
                   f.output_keys = {{"wrd", ScalarKind::kText}};
                   f.output_values = {{"cnt", ScalarKind::kInt, Scalar(0)}};
                   f.apply = [attr](const Record& row) {
                     std::map<std::string, std::int64_t> counts;
                     for (const auto& w : Words(row.Get(attr).AsText())) ++counts[w];
                     ExtFunction::Rows rows;
                     for (const auto& [w, n] : counts) {
                       rows.push_back({Tuple{Scalar(w)}, Tuple{Scalar(n)}});
                     }
                     return rows;
                   };
                   return Ext(a, f);
                 }});
    return c;
  }();
  return *catalog;
}

}  // namespace lara
