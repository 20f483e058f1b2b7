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

#include "lara/algebra/binary_op.h"

#include <cmath>
#include <random>
#include <sstream>

#include "lara/table/error.h"

namespace lara {

JoinZeroFlags DeclaredZeroFlags(const BinaryOp& op, const Scalar& zero_a,
                                const Scalar& zero_b) {
  if (op.zero_flags) return op.zero_flags(zero_a, zero_b);
  JoinZeroFlags flags;
  if (op.annihilator) {
    flags.a_absorbs = zero_a == *op.annihilator;
    flags.b_absorbs = zero_b == *op.annihilator;
  }
  return flags;
}

OpMap::OpMap(BinaryOp uniform) : uniform_(std::move(uniform)) {}

OpMap::OpMap(std::map<std::string, BinaryOp> per_attribute,
             std::optional<BinaryOp> fallback)
    : uniform_(std::move(fallback)), per_attribute_(std::move(per_attribute)) {}

bool OpMap::Covers(const std::string& attribute) const {
  return uniform_.has_value() || per_attribute_.count(attribute) > 0;
}

BinaryOp OpMap::Resolve(const std::string& attribute,
                        const Scalar& default_value) const {
  const BinaryOp* op = nullptr;
  auto it = per_attribute_.find(attribute);
  if (it != per_attribute_.end()) {
    op = &it->second;
  } else if (uniform_) {
    op = &*uniform_;
  }
  if (op == nullptr) {
    throw OperatorError("no operator given for attribute '" + attribute + "'");
  }
  if (op->bind_default) return op->bind_default(default_value);
  return *op;
}

std::string OpMap::ToString() const {
  if (per_attribute_.empty()) return uniform_ ? uniform_->name : "{}";
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [attr, op] : per_attribute_) {
    if (!first) os << " ";
    os << attr << ":" << op.name;
    first = false;
  }
  if (uniform_) os << " *:" << uniform_->name;
  os << "}";
  return os.str();
}

std::vector<Scalar> SampleScalars(SampleDomain domain, size_t count,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Scalar> out;
  out.reserve(count);
  std::uniform_int_distribution<int> small(-20, 20);
  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_real_distribution<double> real(-100.0, 100.0);
  for (size_t i = 0; i < count; ++i) {
    switch (domain) {
      case SampleDomain::kInt:
        out.emplace_back(std::int64_t{small(rng)});
        break;
      case SampleDomain::kNonNegInt:
        out.emplace_back(std::int64_t{std::abs(small(rng))});
        break;
      case SampleDomain::kReal:
        // Mix in exact small integers so that zeros and ties occur.
        out.emplace_back(coin(rng) == 0 ? static_cast<double>(small(rng))
                                        : real(rng));
        break;
      case SampleDomain::kNonNegReal:
        out.emplace_back(coin(rng) == 0
                             ? static_cast<double>(std::abs(small(rng)))
                             : std::fabs(real(rng)));
        break;
      case SampleDomain::kPositiveReal:
        out.emplace_back(std::fabs(real(rng)) + 0.5);
        break;
      case SampleDomain::kText: {
        static constexpr char kAlphabet[] = "abc";
        std::string s;
        int len = coin(rng);
        for (int j = 0; j < len; ++j) s += kAlphabet[coin(rng) % 3];
        out.emplace_back(std::move(s));
        break;
      }
      case SampleDomain::kBool:
        out.emplace_back(coin(rng) % 2 == 0);
        break;
      case SampleDomain::kIndicator:
        out.emplace_back(std::int64_t{coin(rng) % 2});
        break;
    }
  }
  return out;
}

bool SameValue(const Scalar& a, const Scalar& b) {
  if (a.is_numeric() && b.is_numeric()) {
    double x = a.AsReal();
    double y = b.AsReal();
    if (std::isnan(x) || std::isnan(y)) return std::isnan(x) && std::isnan(y);
    if (x == y) return true;
    double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
    return std::fabs(x - y) <= 1e-9 * scale;
  }
  return a == b;
}

}  // namespace lara
