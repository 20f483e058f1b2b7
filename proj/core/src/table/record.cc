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

#include "lara/table/record.h"

#include <algorithm>
#include <sstream>

#include "lara/table/error.h"

namespace lara {

Record::Record(std::initializer_list<Field> fields)
    : Record(std::vector<Field>(fields)) {}

Record::Record(std::vector<Field> fields) : fields_(std::move(fields)) {
  std::sort(fields_.begin(), fields_.end(),
            [](const Field& a, const Field& b) { return a.first < b.first; });
  for (size_t i = 1; i < fields_.size(); ++i) {
    if (fields_[i - 1].first == fields_[i].first) {
      throw SchemaError("duplicate attribute '" + fields_[i].first +
                        "' in record");
    }
  }
}

const Scalar* Record::Find(std::string_view name) const {
  auto it = std::lower_bound(
      fields_.begin(), fields_.end(), name,
      [](const Field& f, std::string_view n) { return f.first < n; });
  if (it == fields_.end() || it->first != name) return nullptr;
  return &it->second;
}

const Scalar& Record::Get(std::string_view name) const {
  const Scalar* s = Find(name);
  if (s == nullptr) {
    throw SchemaError("record " + ToString() + " has no attribute '" +
                      std::string(name) + "'");
  }
  return *s;
}

std::vector<std::string> Record::Header() const {
  std::vector<std::string> out;
  out.reserve(fields_.size());
  for (const auto& f : fields_) out.push_back(f.first);
  return out;
}

std::string Record::ToString() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < fields_.size(); ++i) {
    if (i) os << ", ";
    os << fields_[i].first << ": " << fields_[i].second;
  }
  os << ")";
  return os.str();
}

Record ProjectRecord(const Record& r, const std::set<std::string>& names) {
  std::vector<Record::Field> out;
  for (const auto& name : names) {
    out.emplace_back(name, r.Get(name));
  }
  return Record(std::move(out));
}

Record ConcatRecords(const Record& a, const Record& b) {
  std::vector<Record::Field> out(a.begin(), a.end());
  for (const auto& f : b) {
    if (a.Has(f.first)) {
      throw SchemaError("cannot concatenate records sharing attribute '" +
                        f.first + "'");
    }
    out.push_back(f);
  }
  return Record(std::move(out));
}

}  // namespace lara
