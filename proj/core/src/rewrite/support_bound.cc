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

#include "lara/rewrite/support_bound.h"

#include <algorithm>
#include <optional>
#include <set>

namespace lara {

namespace {

int Looseness(SupportBoundKind k) {
  switch (k) {
    case SupportBoundKind::kSubsetIntersection:
    case SupportBoundKind::kSubsetProduct:
      return 0;
    case SupportBoundKind::kSubsetA:
    case SupportBoundKind::kSubsetB:
      return 1;
    case SupportBoundKind::kSubsetUnion:
      return 2;
    case SupportBoundKind::kUnbounded:
      return 3;
  }
  return 3;
}

SupportBoundKind Loosest(SupportBoundKind x, SupportBoundKind y) {
  if (x == y) return x;
  int lx = Looseness(x);
  int ly = Looseness(y);
  if (lx == 1 && ly == 1) return SupportBoundKind::kSubsetUnion;
  return lx >= ly ? x : y;
}

}  // namespace

KeyRelation RelateKeys(const TableSchema& a, const TableSchema& b) {
  std::set<std::string> ka = a.KeyNames();
  std::set<std::string> kb = b.KeyNames();
  if (ka == kb) return KeyRelation::kEqual;
  if (std::includes(kb.begin(), kb.end(), ka.begin(), ka.end())) {
    return KeyRelation::kLeftSubset;
  }
  if (std::includes(ka.begin(), ka.end(), kb.begin(), kb.end())) {
    return KeyRelation::kLeftSuperset;
  }
  return KeyRelation::kOther;
}

std::string_view SupportBoundName(SupportBoundKind kind) {
  switch (kind) {
    case SupportBoundKind::kSubsetIntersection:
      return "subset-intersection";
    case SupportBoundKind::kSubsetProduct:
      return "subset-product";
    case SupportBoundKind::kSubsetA:
      return "subset-A";
    case SupportBoundKind::kSubsetB:
      return "subset-B";
    case SupportBoundKind::kSubsetUnion:
      return "subset-union";
    case SupportBoundKind::kUnbounded:
      return "unbounded";
  }
  return "?";
}

SupportBoundKind BoundCell(KeyRelation relation, JoinZeroFlags flags) {
  using K = SupportBoundKind;
  const bool a = flags.a_absorbs;
  const bool b = flags.b_absorbs;
  if (a && b) {
    return relation == KeyRelation::kOther ? K::kSubsetProduct
                                           : K::kSubsetIntersection;
  }
  switch (relation) {
    case KeyRelation::kEqual:
      if (b) return K::kSubsetB;
      if (a) return K::kSubsetA;
      return K::kSubsetUnion;
    case KeyRelation::kLeftSubset:
      return b ? K::kSubsetB : K::kUnbounded;
    case KeyRelation::kLeftSuperset:
      return a ? K::kSubsetA : K::kUnbounded;
    case KeyRelation::kOther:
      return K::kUnbounded;
  }
  return K::kUnbounded;
}

SupportBound JoinSupportBound(const TableSchema& a, const TableSchema& b,
                              const std::map<std::string, JoinZeroFlags>& flags,
                              bool zero_product) {
  KeyRelation relation = RelateKeys(a, b);
  if (flags.empty()) {
    return {BoundCell(relation, {true, true}), true};
  }
  std::optional<SupportBoundKind> kind;
  bool uniform = true;
  for (const auto& [name, f] : flags) {
    SupportBoundKind cell = BoundCell(relation, f);
    if (kind && *kind != cell) uniform = false;
    kind = kind ? Loosest(*kind, cell) : cell;
  }
  return {*kind, zero_product && uniform && *kind != SupportBoundKind::kUnbounded};
}

SupportBound JoinSupportBound(const TableSchema& a, const TableSchema& b,
                              const OpMap& times) {
  std::map<std::string, JoinZeroFlags> flags;
  bool zero_product = true;
  for (const auto& va : a.values()) {
    auto j = b.ValueIndex(va.name);
    if (!j) continue;
    const Scalar& zb = b.values()[*j].default_value;
    BinaryOp op = times.Resolve(va.name, va.default_value);
    flags[va.name] = DeclaredZeroFlags(op, va.default_value, zb);
    // The declaration is relative to the annihilator; other defaults (the
    // 1 of a scale vector) can multiply a stored zero into a default.
    bool at_annihilator = !op.annihilator || (va.default_value == *op.annihilator &&
                                              zb == *op.annihilator);
    zero_product = zero_product && op.properties.zero_product && at_annihilator;
  }
  return JoinSupportBound(a, b, flags, zero_product);
}

}  // namespace lara
