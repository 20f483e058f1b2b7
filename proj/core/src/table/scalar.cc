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

#include "lara/table/scalar.h"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "lara/table/error.h"

namespace lara {

namespace {

int KindRank(ScalarKind k) {
  switch (k) {
    case ScalarKind::kBool:
      return 0;
    case ScalarKind::kInt:
    case ScalarKind::kReal:
      return 1;
    case ScalarKind::kText:
      return 2;
  }
  return 3;
}

std::string RealToString(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string out(buf, ptr);
  // Keep reals recognizable as reals when printed.
  if (out.find_first_of(".eE") == std::string::npos) out += ".0";
  return out;
}

}  // namespace

std::string_view KindName(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::kInt:
      return "int";
    case ScalarKind::kReal:
      return "real";
    case ScalarKind::kText:
      return "text";
    case ScalarKind::kBool:
      return "bool";
  }
  return "?";
}

std::optional<ScalarKind> ParseKind(std::string_view name) {
  if (name == "int" || name == "integer") return ScalarKind::kInt;
  if (name == "real" || name == "float" || name == "double") {
    return ScalarKind::kReal;
  }
  if (name == "text" || name == "string") return ScalarKind::kText;
  if (name == "bool" || name == "boolean") return ScalarKind::kBool;
  return std::nullopt;
}

std::int64_t Scalar::AsInt() const {
  if (const auto* v = std::get_if<std::int64_t>(&value_)) return *v;
  throw SchemaError("expected int scalar, got " +
                    std::string(KindName(kind())) + " " + ToString());
}

double Scalar::AsReal() const {
  if (const auto* v = std::get_if<double>(&value_)) return *v;
  if (const auto* v = std::get_if<std::int64_t>(&value_)) {
    return static_cast<double>(*v);
  }
  throw SchemaError("expected numeric scalar, got " +
                    std::string(KindName(kind())) + " " + ToString());
}

const std::string& Scalar::AsText() const {
  if (const auto* v = std::get_if<std::string>(&value_)) return *v;
  throw SchemaError("expected text scalar, got " +
                    std::string(KindName(kind())) + " " + ToString());
}

bool Scalar::AsBool() const {
  if (const auto* v = std::get_if<bool>(&value_)) return *v;
  throw SchemaError("expected bool scalar, got " +
                    std::string(KindName(kind())) + " " + ToString());
}

bool Scalar::Truthy() const {
  switch (kind()) {
    case ScalarKind::kInt:
      return std::get<std::int64_t>(value_) != 0;
    case ScalarKind::kReal:
      return std::get<double>(value_) != 0.0;
    case ScalarKind::kText:
      return !std::get<std::string>(value_).empty();
    case ScalarKind::kBool:
      return std::get<bool>(value_);
  }
  return false;
}

std::optional<Scalar> Scalar::ConvertTo(ScalarKind target) const {
  if (kind() == target) return *this;
  if (kind() == ScalarKind::kInt && target == ScalarKind::kReal) {
    return Scalar(static_cast<double>(std::get<std::int64_t>(value_)));
  }
  if (kind() == ScalarKind::kReal && target == ScalarKind::kInt) {
    double v = std::get<double>(value_);
    if (std::isfinite(v) && std::trunc(v) == v &&
        std::fabs(v) < 9.0e15) {
      return Scalar(static_cast<std::int64_t>(v));
    }
  }
  return std::nullopt;
}

std::string Scalar::ToString() const {
  switch (kind()) {
    case ScalarKind::kInt:
      return std::to_string(std::get<std::int64_t>(value_));
    case ScalarKind::kReal:
      return RealToString(std::get<double>(value_));
    case ScalarKind::kText:
      return std::get<std::string>(value_);
    case ScalarKind::kBool:
      return std::get<bool>(value_) ? "true" : "false";
  }
  return "";
}

bool operator==(const Scalar& a, const Scalar& b) {
  return (a <=> b) == std::weak_ordering::equivalent;
}

std::weak_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int ra = KindRank(a.kind());
  int rb = KindRank(b.kind());
  if (ra != rb) return ra <=> rb;
  switch (a.kind()) {
    case ScalarKind::kBool:
      return a.AsBool() <=> b.AsBool();
    case ScalarKind::kText: {
      int c = a.AsText().compare(b.AsText());
      return c <=> 0;
    }
    default:
      break;
  }
  if (a.kind() == ScalarKind::kInt && b.kind() == ScalarKind::kInt) {
    return a.AsInt() <=> b.AsInt();
  }
  double x = a.AsReal();
  double y = b.AsReal();
  if (x < y) return std::weak_ordering::less;
  if (y < x) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.ToString();
}

bool ApproxEqual(const Scalar& a, const Scalar& b, double tolerance) {
  if (a.is_numeric() && b.is_numeric()) {
    if (a.kind() == ScalarKind::kInt && b.kind() == ScalarKind::kInt) {
      return a.AsInt() == b.AsInt();
    }
    double x = a.AsReal();
    double y = b.AsReal();
    if (x == y) return true;
    return std::fabs(x - y) <= tolerance;
  }
  return a == b;
}

Scalar ParseScalar(std::string_view text, ScalarKind kind) {
  auto fail = [&]() -> Scalar {
    throw ParseError("cannot parse '" + std::string(text) + "' as " +
                     std::string(KindName(kind)));
  };
  switch (kind) {
    case ScalarKind::kText:
      return Scalar(std::string(text));
    case ScalarKind::kBool:
      if (text == "true" || text == "1" || text == "T") return Scalar(true);
      if (text == "false" || text == "0" || text == "F") return Scalar(false);
      return fail();
    case ScalarKind::kInt: {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || ptr != text.data() + text.size() ||
          text.empty()) {
        return fail();
      }
      return Scalar(v);
    }
    case ScalarKind::kReal: {
      if (text == "inf" || text == "+inf") {
        return Scalar(std::numeric_limits<double>::infinity());
      }
      if (text == "-inf") {
        return Scalar(-std::numeric_limits<double>::infinity());
      }
      double v = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || ptr != text.data() + text.size() ||
          text.empty()) {
        return fail();
      }
      return Scalar(v);
    }
  }
  return fail();
}

std::string TupleToString(const Tuple& t) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) os << ", ";
    os << t[i];
  }
  os << ")";
  return os.str();
}

}  // namespace lara
