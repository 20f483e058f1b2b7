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

#include <cctype>
#include <map>
#include <optional>
#include <vector>

#include "lara/table/error.h"

namespace lara {

namespace {

struct SExpr {
  enum class Kind { kAtom, kList, kBraces } kind = Kind::kAtom;
  std::string atom;
  std::vector<SExpr> items;
  int line = 0;
  int column = 0;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  SExpr ReadDocument() {
    SkipSpace();
    if (AtEnd()) throw ParseError("empty plan", line_, column_);
    SExpr e = Read();
    SkipSpace();
    if (!AtEnd()) {
      throw ParseError("unexpected text after plan", line_, column_);
    }
    return e;
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void SkipSpace() {
    while (!AtEnd()) {
      char c = Peek();
      if (c == ';') {
        while (!AtEnd() && Peek() != '\n') Advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else {
        break;
      }
    }
  }

  SExpr Read() {
    SkipSpace();
    if (AtEnd()) throw ParseError("unexpected end of plan", line_, column_);
    SExpr e;
    e.line = line_;
    e.column = column_;
    char c = Peek();
    if (c == '(' || c == '{') {
      char close = c == '(' ? ')' : '}';
      e.kind = c == '(' ? SExpr::Kind::kList : SExpr::Kind::kBraces;
      Advance();
      for (;;) {
        SkipSpace();
        if (AtEnd()) {
          throw ParseError(std::string("missing '") + close + "'", e.line,
                           e.column);
        }
        if (Peek() == close) {
          Advance();
          return e;
        }
        if (Peek() == ')' || Peek() == '}') {
          throw ParseError(std::string("unexpected '") + Peek() + "'", line_,
                           column_);
        }
        e.items.push_back(Read());
      }
    }
    if (c == ')' || c == '}') {
      throw ParseError(std::string("unexpected '") + c + "'", line_, column_);
    }
    if (c == '"') {
      Advance();
      for (;;) {
        if (AtEnd()) throw ParseError("unterminated string", e.line, e.column);
        char d = Peek();
        Advance();
        if (d == '"') break;
        if (d == '\\') {
          if (AtEnd()) throw ParseError("unterminated string", e.line, e.column);
          d = Peek();
          Advance();
        }
        e.atom += d;
      }
      return e;
    }
    while (!AtEnd()) {
      char d = Peek();
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' ||
          d == '{' || d == '}' || d == ';' || d == '"') {
        break;
      }
      e.atom += d;
      Advance();
    }
    return e;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

[[noreturn]] void Fail(const SExpr& at, const std::string& what) {
  throw ParseError(what, at.line, at.column);
}

const std::string& Atom(const SExpr& e, const std::string& what) {
  if (e.kind != SExpr::Kind::kAtom) Fail(e, "expected " + what);
  return e.atom;
}

class Builder {
 public:
  Builder(const SchemaEnv& tables, const OpRegistry& registry,
          const ExtCatalog& catalog)
      : tables_(tables), registry_(registry), catalog_(catalog) {}

  Plan Build(const SExpr& e, const TableSchema* sibling) {
    if (e.kind != SExpr::Kind::kList || e.items.empty()) {
      Fail(e, "expected a parenthesized plan");
    }
    const std::string& head = Atom(e.items[0], "a plan keyword");
    if (head == "table") {
      Arity(e, 2);
      const std::string& name = Atom(e.items[1], "a table name");
      auto it = tables_.find(name);
      if (it == tables_.end()) Fail(e.items[1], "unknown table '" + name + "'");
      return Plan::TableRef(name, it->second);
    }
    if (head == "union" || head == "join" || head == "rjoin") {
      Arity(e, 4);
      OpMap ops = Ops(e.items[1]);
      const SExpr& l = e.items[2];
      const SExpr& r = e.items[3];
      std::optional<Plan> a, b;
      if (IsUntypedEmpty(l)) {
        b = Build(r, nullptr);
        a = Build(l, &b->schema());
      } else {
        a = Build(l, nullptr);
        b = Build(r, &a->schema());
      }
      if (head == "union") return Plan::Union(*a, *b, ops);
      if (head == "join") return Plan::StrictJoin(*a, *b, ops);
      return Plan::RelaxedJoin(*a, *b, ops);
    }
    if (head == "ext") {
      Arity(e, 3);
      ExtCall call;
      const SExpr& c = e.items[1];
      if (c.kind == SExpr::Kind::kAtom) {
        call.function = c.atom;
      } else if (c.kind == SExpr::Kind::kList && !c.items.empty()) {
        call.function = Atom(c.items[0], "an ext function name");
        for (size_t i = 1; i < c.items.size(); ++i) {
          call.args.push_back(Atom(c.items[i], "an ext argument"));
        }
      } else {
        Fail(c, "expected an ext call");
      }
      if (!catalog_.Has(call.function)) {
        Fail(c, "unknown ext function '" + call.function + "'");
      }
      return Plan::Ext(Build(e.items[2], nullptr), call, catalog_);
    }
    if (head == "empty") {
      std::vector<KeyAttribute> keys;
      for (size_t i = 1; i < e.items.size(); ++i) {
        keys.push_back(EmptyKey(e.items[i], sibling));
      }
      return Plan::Empty(std::move(keys));
    }
    Fail(e.items[0], "unknown plan keyword '" + head + "'");
  }

 private:
  static void Arity(const SExpr& e, size_t n) {
    if (e.items.size() != n) {
      Fail(e, "'" + e.items[0].atom + "' takes " + std::to_string(n - 1) +
                  " operands, got " + std::to_string(e.items.size() - 1));
    }
  }

  static bool IsUntypedEmpty(const SExpr& e) {
    if (e.kind != SExpr::Kind::kList || e.items.empty() ||
        e.items[0].kind != SExpr::Kind::kAtom || e.items[0].atom != "empty") {
      return false;
    }
    for (size_t i = 1; i < e.items.size(); ++i) {
      if (e.items[i].kind == SExpr::Kind::kAtom &&
          e.items[i].atom.find(':') == std::string::npos) {
        return true;
      }
    }
    return false;
  }

  const BinaryOp& Op(const SExpr& at, const std::string& name) {
    if (!registry_.Has(name)) Fail(at, "unknown operator '" + name + "'");
    return registry_.Get(name);
  }

  OpMap Ops(const SExpr& e) {
    if (e.kind == SExpr::Kind::kAtom) return OpMap(Op(e, e.atom));
    if (e.kind != SExpr::Kind::kBraces) Fail(e, "expected an operator");
    std::map<std::string, BinaryOp> per_attr;
    std::optional<BinaryOp> fallback;
    for (const auto& item : e.items) {
      const std::string& text = Atom(item, "attr:operator");
      auto colon = text.find(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
        Fail(item, "expected attr:operator, got '" + text + "'");
      }
      std::string attr = text.substr(0, colon);
      const BinaryOp& op = Op(item, text.substr(colon + 1));
      if (attr == "*") {
        fallback = op;
      } else {
        per_attr.emplace(attr, op);
      }
    }
    return OpMap(std::move(per_attr), std::move(fallback));
  }

  KeyAttribute EmptyKey(const SExpr& e, const TableSchema* sibling) {
    const std::string& text = Atom(e, "a key attribute");
    auto colon = text.find(':');
    if (colon != std::string::npos) {
      auto kind = ParseKind(text.substr(colon + 1));
      if (!kind) Fail(e, "unknown kind in '" + text + "'");
      return {text.substr(0, colon), *kind};
    }
    if (sibling != nullptr && sibling->HasKey(text)) return sibling->Key(text);
    for (const auto& [name, schema] : tables_) {
      if (schema.HasKey(text)) return schema.Key(text);
    }
    Fail(e, "cannot infer the kind of key '" + text + "'; write " + text +
                ":KIND");
  }

  const SchemaEnv& tables_;
  const OpRegistry& registry_;
  const ExtCatalog& catalog_;
};

std::string QuoteAtom(const std::string& s) {
  bool plain = !s.empty();
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' ||
        c == '{' || c == '}' || c == ';' || c == '"' || c == '\\') {
      plain = false;
    }
  }
  if (plain) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string OpsText(const OpMap& ops) {
  if (ops.per_attribute().empty() && ops.uniform()) {
    return QuoteAtom(ops.uniform()->name);
  }
  std::string out = "{";
  bool first = true;
  for (const auto& [attr, op] : ops.per_attribute()) {
    if (!first) out += ' ';
    out += QuoteAtom(attr + ":" + op.name);
    first = false;
  }
  if (ops.uniform()) {
    if (!first) out += ' ';
    out += QuoteAtom("*:" + ops.uniform()->name);
  }
  return out + "}";
}

void Serialize(const Plan& p, std::string& out) {
  switch (p.kind()) {
    case PlanKind::kTableRef:
      out += "(table " + QuoteAtom(p.table_name()) + ")";
      return;
    case PlanKind::kUnion:
    case PlanKind::kStrictJoin:
    case PlanKind::kRelaxedJoin: {
      const char* head = p.kind() == PlanKind::kUnion        ? "union"
                         : p.kind() == PlanKind::kStrictJoin ? "join"
                                                             : "rjoin";
      out += std::string("(") + head + " " + OpsText(p.ops()) + " ";
      Serialize(p.left(), out);
      out += " ";
      Serialize(p.right(), out);
      out += ")";
      return;
    }
    case PlanKind::kExt: {
      out += "(ext ";
      const ExtCall& call = p.ext_call();
      if (call.args.empty()) {
        out += QuoteAtom(call.function);
      } else {
        out += "(" + QuoteAtom(call.function);
        for (const auto& a : call.args) out += " " + QuoteAtom(a);
        out += ")";
      }
      out += " ";
      Serialize(p.left(), out);
      out += ")";
      return;
    }
    case PlanKind::kEmpty:
      out += "(empty";
      for (const auto& k : p.schema().keys()) {
        out += " " + QuoteAtom(k.name + ":" + std::string(KindName(k.kind)));
      }
      out += ")";
      return;
  }
}

}  // namespace

Plan ParsePlan(std::string_view text, const SchemaEnv& tables,
               const OpRegistry& registry, const ExtCatalog& catalog) {
  SExpr doc = Reader(text).ReadDocument();
  return Builder(tables, registry, catalog).Build(doc, nullptr);
}

std::string SerializePlan(const Plan& plan) {
  std::string out;
  Serialize(plan, out);
  return out;
}

}  // namespace lara
