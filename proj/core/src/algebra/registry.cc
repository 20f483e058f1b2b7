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

#include "lara/algebra/registry.h"

#include <cmath>
#include <limits>

#include "lara/table/error.h"

namespace lara {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kValidationSeed = 0x1a7a;

bool BothInt(const Scalar& a, const Scalar& b) {
  return a.kind() == ScalarKind::kInt && b.kind() == ScalarKind::kInt;
}

[[noreturn]] void Violation(const BinaryOp& op, const std::string& property,
                            const std::string& example) {
  throw OperatorError("operator '" + op.name + "' violates declared " +
                      property + ": " + example);
}

std::string Show(std::initializer_list<Scalar> xs) {
  return TupleToString(Tuple(xs));
}

void ValidateConcrete(const BinaryOp& op, const OpRegistry* registry) {
  if (!op.apply) throw OperatorError("operator '" + op.name + "' has no body");
  std::vector<Scalar> s =
      SampleScalars(op.domain, kPropertySamples, kValidationSeed);
  const size_t n = s.size();
  auto at = [&](size_t i) -> const Scalar& { return s[i % n]; };

  if (op.identity) {
    const Scalar& e = *op.identity;
    for (size_t i = 0; i < n; ++i) {
      const Scalar& a = s[i];
      if (!SameValue(op(a, e), a) || !SameValue(op(e, a), a)) {
        Violation(op, "identity " + e.ToString(), "a = " + a.ToString());
      }
    }
  }
  if (op.annihilator) {
    const Scalar& z = *op.annihilator;
    Scalar zz = op(z, z);
    if (!SameValue(zz, z)) {
      Violation(op, "annihilator " + z.ToString(), "z (x) z = " + zz.ToString());
    }
    for (size_t i = 0; i < n; ++i) {
      const Scalar& a = s[i];
      if (!SameValue(op(a, z), zz) || !SameValue(op(z, a), zz)) {
        Violation(op, "annihilator " + z.ToString(), "a = " + a.ToString());
      }
    }
    if (op.properties.zero_product) {
      for (size_t i = 0; i < n; ++i) {
        const Scalar& a = s[i];
        const Scalar& b = at(i * 7 + 3);
        if (SameValue(op(a, b), zz) && !(a == z) && !(b == z)) {
          Violation(op, "zero product property", Show({a, b}));
        }
      }
    }
  }
  if (op.properties.idempotent) {
    for (const auto& a : s) {
      if (!SameValue(op(a, a), a)) {
        Violation(op, "idempotence", "a = " + a.ToString());
      }
    }
  }
  if (op.properties.commutative) {
    for (size_t i = 0; i < n; ++i) {
      const Scalar& a = s[i];
      const Scalar& b = at(i * 7 + 3);
      if (!SameValue(op(a, b), op(b, a))) {
        Violation(op, "commutativity", Show({a, b}));
      }
    }
  }
  if (op.properties.associative) {
    for (size_t i = 0; i < n; ++i) {
      const Scalar& a = s[i];
      const Scalar& b = at(i * 7 + 3);
      const Scalar& c = at(i * 13 + 5);
      if (!SameValue(op(op(a, b), c), op(a, op(b, c)))) {
        Violation(op, "associativity", Show({a, b, c}));
      }
    }
  }
  if (op.inverse) {
    if (!op.identity) {
      throw OperatorError("operator '" + op.name +
                          "' declares an inverse but no identity");
    }
    for (const auto& a : s) {
      if (op.annihilator && a == *op.annihilator) continue;
      if (a.is_numeric() && !std::isfinite(a.AsReal())) continue;
      if (!SameValue(op(a, op.inverse(a)), *op.identity)) {
        Violation(op, "inverse", "a = " + a.ToString());
      }
    }
  }
  for (const auto& name : op.distributes_over) {
    if (registry == nullptr || !registry->Has(name)) {
      throw OperatorError("operator '" + op.name +
                          "' declares distributivity over unknown operator '" +
                          name + "'");
    }
    const BinaryOp& plus = registry->Get(name);
    std::vector<Scalar> t =
        SampleScalars(plus.domain, kPropertySamples, kValidationSeed + 1);
    for (size_t i = 0; i < t.size(); ++i) {
      const Scalar& a = t[i];
      const Scalar& b = t[(i * 7 + 3) % t.size()];
      const Scalar& c = t[(i * 13 + 5) % t.size()];
      if (!SameValue(op(a, plus(b, c)), plus(op(a, b), op(a, c))) ||
          !SameValue(op(plus(b, c), a), plus(op(b, a), op(c, a)))) {
        Violation(op, "distributivity over '" + name + "'", Show({a, b, c}));
      }
    }
  }
}

Scalar NumericBinary(const Scalar& a, const Scalar& b,
                     std::int64_t (*on_int)(std::int64_t, std::int64_t),
                     double (*on_real)(double, double)) {
  if (BothInt(a, b)) return Scalar(on_int(a.AsInt(), b.AsInt()));
  return Scalar(on_real(a.AsReal(), b.AsReal()));
}

}  // namespace

void ValidateOp(const BinaryOp& op, const OpRegistry* registry) {
  if (op.bind_default) {
    for (const auto& d : SampleScalars(op.domain, 5, kValidationSeed)) {
      ValidateConcrete(op.bind_default(d), registry);
    }
    return;
  }
  ValidateConcrete(op, registry);
}

void OpRegistry::Register(BinaryOp op) {
  if (op.name.empty()) throw OperatorError("operator needs a name");
  if (Has(op.name)) {
    throw OperatorError("operator '" + op.name + "' is already registered");
  }
  ValidateOp(op, this);
  std::string name = op.name;
  ops_.emplace(std::move(name), std::move(op));
}

const BinaryOp& OpRegistry::Get(const std::string& name) const {
  auto it = ops_.find(name);
  if (it == ops_.end()) {
    throw OperatorError("unknown operator '" + name + "'");
  }
  return it->second;
}

std::vector<std::string> OpRegistry::Names() const {
  std::vector<std::string> out;
  for (const auto& [name, op] : ops_) out.push_back(name);
  return out;
}

const OpRegistry& OpRegistry::Builtins() {
  static const OpRegistry* registry = [] {
    auto* r = new OpRegistry();
    for (auto make : {ops::Max, ops::Min, ops::Max0, ops::Min0, ops::Plus,
                      ops::Times, ops::MinNonZero, ops::Concat, ops::Or,
                      ops::And, ops::LogicalOr, ops::LogicalAnd,
                      ops::SafeDivide, ops::Coalesce}) {
      r->Register(make());
    }
    return r;
  }();
  return *registry;
}

namespace ops {

BinaryOp Plus() {
  BinaryOp op;
  op.name = "+";
  op.role = OpRole::kPlus;
  op.apply = [](const Scalar& a, const Scalar& b) {
    return NumericBinary(
        a, b, [](std::int64_t x, std::int64_t y) { return x + y; },
        [](double x, double y) { return x + y; });
  };
  op.properties = {.associative = true, .commutative = true};
  op.identity = Scalar(0);
  op.annihilator = Scalar(-kInf);
  op.distributes_over = {"max", "min"};
  op.inverse = [](const Scalar& a) {
    return a.kind() == ScalarKind::kInt ? Scalar(-a.AsInt())
                                        : Scalar(-a.AsReal());
  };
  op.domain = SampleDomain::kReal;
  return op;
}

BinaryOp Times() {
  BinaryOp op;
  op.name = "*";
  op.role = OpRole::kTimes;
  op.apply = [](const Scalar& a, const Scalar& b) {
    return NumericBinary(
        a, b, [](std::int64_t x, std::int64_t y) { return x * y; },
        [](double x, double y) { return x * y; });
  };
  op.properties = {.associative = true, .commutative = true,
                   .zero_product = true};
  op.identity = Scalar(1);
  op.annihilator = Scalar(0);
  op.distributes_over = {"+", "max0"};
  op.inverse = [](const Scalar& a) { return Scalar(1.0 / a.AsReal()); };
  op.domain = SampleDomain::kReal;
  return op;
}

namespace {

BinaryOp Extremum(std::string name, bool take_max, Scalar identity,
                  SampleDomain domain) {
  BinaryOp op;
  op.name = std::move(name);
  op.role = OpRole::kPlus;
  op.apply = [take_max](const Scalar& a, const Scalar& b) {
    bool a_wins = take_max ? !(a < b) : !(b < a);
    return a_wins ? a : b;
  };
  op.properties = {.associative = true, .commutative = true,
                   .idempotent = true};
  op.identity = std::move(identity);
  op.domain = domain;
  return op;
}

Scalar Indicator(bool v) { return Scalar(std::int64_t{v ? 1 : 0}); }

}  // namespace

BinaryOp Max() { return Extremum("max", true, Scalar(-kInf), SampleDomain::kReal); }

BinaryOp Min() { return Extremum("min", false, Scalar(kInf), SampleDomain::kReal); }

BinaryOp Max0() {
  return Extremum("max0", true, Scalar(0), SampleDomain::kNonNegReal);
}

BinaryOp Min0() {
  BinaryOp op = Extremum("min0", false, Scalar(kInf), SampleDomain::kNonNegReal);
  op.role = OpRole::kTimes;
  op.annihilator = Scalar(0);
  op.properties.zero_product = true;
  return op;
}

BinaryOp MinNonZero() {
  BinaryOp op;
  op.name = "minnz";
  op.role = OpRole::kPlus;
  op.apply = [](const Scalar& a, const Scalar& b) {
    if (!a.Truthy()) return b;
    if (!b.Truthy()) return a;
    return b < a ? b : a;
  };
  op.properties = {.associative = true, .commutative = true,
                   .idempotent = true};
  op.identity = Scalar(0);
  op.domain = SampleDomain::kNonNegReal;
  return op;
}

BinaryOp Concat() {
  BinaryOp op;
  op.name = "concat";
  op.role = OpRole::kPlus;
  op.apply = [](const Scalar& a, const Scalar& b) {
    return Scalar(a.AsText() + b.AsText());
  };
  op.properties = {.associative = true};
  op.identity = Scalar("");
  op.domain = SampleDomain::kText;
  return op;
}

BinaryOp Or() {
  BinaryOp op;
  op.name = "or";
  op.role = OpRole::kPlus;
  op.apply = [](const Scalar& a, const Scalar& b) {
    return Indicator(a.Truthy() || b.Truthy());
  };
  op.properties = {.associative = true, .commutative = true,
                   .idempotent = true};
  op.identity = Scalar(0);
  op.domain = SampleDomain::kIndicator;
  return op;
}

BinaryOp And() {
  BinaryOp op;
  op.name = "and";
  op.role = OpRole::kTimes;
  op.apply = [](const Scalar& a, const Scalar& b) {
    return Indicator(a.Truthy() && b.Truthy());
  };
  op.properties = {.associative = true, .commutative = true,
                   .idempotent = true, .zero_product = true};
  op.identity = Scalar(1);
  op.annihilator = Scalar(0);
  op.distributes_over = {"or"};
  op.domain = SampleDomain::kIndicator;
  return op;
}

BinaryOp LogicalOr() {
  BinaryOp op;
  op.name = "lor";
  op.role = OpRole::kPlus;
  op.apply = [](const Scalar& a, const Scalar& b) {
    return Scalar(a.AsBool() || b.AsBool());
  };
  op.properties = {.associative = true, .commutative = true,
                   .idempotent = true};
  op.identity = Scalar(false);
  op.domain = SampleDomain::kBool;
  return op;
}

BinaryOp LogicalAnd() {
  BinaryOp op;
  op.name = "land";
  op.role = OpRole::kTimes;
  op.apply = [](const Scalar& a, const Scalar& b) {
    return Scalar(a.AsBool() && b.AsBool());
  };
  op.properties = {.associative = true, .commutative = true,
                   .idempotent = true, .zero_product = true};
  op.identity = Scalar(true);
  op.annihilator = Scalar(false);
  op.distributes_over = {"lor"};
  op.domain = SampleDomain::kBool;
  return op;
}

BinaryOp SafeDivide() {
  BinaryOp op;
  op.name = "/";
  op.role = OpRole::kTimes;
  op.apply = [](const Scalar& a, const Scalar& b) {
    double d = b.AsReal();
    return Scalar(d == 0.0 ? 0.0 : a.AsReal() / d);
  };
  op.annihilator = Scalar(0);
  op.domain = SampleDomain::kReal;
  return op;
}

BinaryOp Coalesce() {
  BinaryOp op;
  op.name = "coalesce";
  op.role = OpRole::kPlus;
  op.apply = [](const Scalar&, const Scalar&) -> Scalar {
    throw OperatorError("coalesce must be bound to an attribute default");
  };
  op.domain = SampleDomain::kInt;
  op.bind_default = [](const Scalar& d) {
    BinaryOp bound;
    bound.name = "coalesce";
    bound.role = OpRole::kPlus;
    bound.apply = [d](const Scalar& a, const Scalar& b) {
      return a == d ? b : a;
    };
    bound.properties = {.associative = true, .idempotent = true};
    bound.identity = d;
    bound.domain = SampleDomain::kInt;
    return bound;
  };
  return op;
}

}  // namespace ops

}  // namespace lara
