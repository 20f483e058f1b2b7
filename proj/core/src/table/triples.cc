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

#include "lara/table/triples.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "lara/table/delimited.h"
#include "lara/table/error.h"

namespace lara {

namespace {

std::int64_t IdOf(const std::vector<Scalar>& lookup, const Scalar& s) {
  auto it = std::lower_bound(lookup.begin(), lookup.end(), s);
  return static_cast<std::int64_t>(it - lookup.begin()) + 1;
}

const Scalar& ById(const std::vector<Scalar>& lookup, std::int64_t id,
                   const std::string& attr) {
  if (id < 1 || id > static_cast<std::int64_t>(lookup.size())) {
    throw DomainError("id " + std::to_string(id) + " out of range 1.." +
                      std::to_string(lookup.size()) + " for attribute '" +
                      attr + "'");
  }
  return lookup[id - 1];
}

void WriteLookup(const std::vector<Scalar>& lookup, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw LaraError("cannot open '" + path + "' for writing");
  out << "id\tvalue\n";
  for (size_t i = 0; i < lookup.size(); ++i) {
    out << (i + 1) << '\t' << lookup[i].ToString() << '\n';
  }
}

std::vector<Scalar> ReadLookup(const std::string& path, ScalarKind kind) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::string line;
  std::getline(in, line);
  std::vector<Scalar> out;
  int line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    auto f = SplitDelimitedLine(line, '\t', line_number);
    if (f.size() != 2) throw ParseError("expected id and value", line_number, 1);
    auto id = ParseScalar(f[0], ScalarKind::kInt).AsInt();
    if (id != static_cast<std::int64_t>(out.size()) + 1) {
      throw ParseError("lookup ids must be dense and ascending", line_number, 1);
    }
    out.push_back(ParseScalar(f[1], kind));
  }
  return out;
}

}  // namespace

TripleEncoding ToTriples(const Table& a, bool encode_values) {
  const TableSchema& s = a.schema();
  Table canon = a.Canonicalize();
  TripleEncoding enc;
  enc.schema = s;

  std::vector<std::set<Scalar>> key_sets(s.key_count());
  std::vector<std::set<Scalar>> value_sets(s.value_count());
  for (const auto& [k, v] : canon.rows()) {
    for (size_t i = 0; i < k.size(); ++i) key_sets[i].insert(k[i]);
    for (size_t i = 0; i < v.size(); ++i) {
      if (!(v[i] == s.values()[i].default_value)) value_sets[i].insert(v[i]);
    }
  }
  for (const auto& set : key_sets) enc.key_lookups.emplace_back(set.begin(), set.end());
  for (const auto& set : value_sets) {
    if (encode_values) {
      enc.value_lookups.emplace_back(std::vector<Scalar>(set.begin(), set.end()));
    } else {
      enc.value_lookups.emplace_back(std::nullopt);
    }
  }

  for (const auto& [k, v] : canon.rows()) {
    TripleEncoding::Entry e;
    for (size_t i = 0; i < k.size(); ++i) {
      e.ids.push_back(IdOf(enc.key_lookups[i], k[i]));
    }
    for (size_t i = 0; i < v.size(); ++i) {
      if (!encode_values) {
        e.values.push_back(v[i]);
      } else if (v[i] == s.values()[i].default_value) {
        e.values.push_back(Scalar(std::int64_t{0}));
      } else {
        e.values.push_back(Scalar(IdOf(*enc.value_lookups[i], v[i])));
      }
    }
    enc.entries.push_back(std::move(e));
  }
  return enc;
}

Table FromTriples(const TripleEncoding& enc) {
  const TableSchema& s = enc.schema;
  if (enc.key_lookups.size() != s.key_count() ||
      enc.value_lookups.size() != s.value_count()) {
    throw SchemaError("triple encoding does not match schema " + s.ToString());
  }
  TableBuilder builder(s);
  for (const auto& e : enc.entries) {
    if (e.ids.size() != s.key_count() || e.values.size() != s.value_count()) {
      throw SchemaError("triple entry has the wrong arity");
    }
    Tuple key;
    for (size_t i = 0; i < e.ids.size(); ++i) {
      key.push_back(ById(enc.key_lookups[i], e.ids[i], s.keys()[i].name));
    }
    Tuple values;
    for (size_t i = 0; i < e.values.size(); ++i) {
      const auto& lookup = enc.value_lookups[i];
      if (!lookup) {
        values.push_back(e.values[i]);
        continue;
      }
      std::int64_t id = e.values[i].AsInt();
      values.push_back(id == 0 ? s.values()[i].default_value
                               : ById(*lookup, id, s.values()[i].name));
    }
    builder.Add(std::move(key), std::move(values));
  }
  return builder.Build();
}

void WriteTriplesTsv(const TripleEncoding& enc, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const TableSchema& s = enc.schema;
  std::ofstream out(fs::path(dir) / "triples.tsv");
  if (!out) throw LaraError("cannot write triples into '" + dir + "'");
  bool first = true;
  for (const auto& k : s.keys()) {
    out << (first ? "" : "\t") << k.name;
    first = false;
  }
  for (const auto& v : s.values()) {
    out << (first ? "" : "\t") << v.name;
    first = false;
  }
  out << '\n';
  for (const auto& e : enc.entries) {
    first = true;
    for (auto id : e.ids) {
      out << (first ? "" : "\t") << id;
      first = false;
    }
    for (const auto& v : e.values) {
      out << (first ? "" : "\t") << v.ToString();
      first = false;
    }
    out << '\n';
  }
  for (size_t i = 0; i < s.key_count(); ++i) {
    WriteLookup(enc.key_lookups[i],
                (fs::path(dir) / ("lookup_" + s.keys()[i].name + ".tsv")).string());
  }
  for (size_t i = 0; i < s.value_count(); ++i) {
    if (!enc.value_lookups[i]) continue;
    WriteLookup(
        *enc.value_lookups[i],
        (fs::path(dir) / ("lookup_" + s.values()[i].name + ".tsv")).string());
  }
}

TripleEncoding ReadTriplesTsv(const TableSchema& schema,
                              const std::string& dir) {
  namespace fs = std::filesystem;
  TripleEncoding enc;
  enc.schema = schema;
  for (const auto& k : schema.keys()) {
    enc.key_lookups.push_back(ReadLookup(
        (fs::path(dir) / ("lookup_" + k.name + ".tsv")).string(), k.kind));
  }
  for (const auto& v : schema.values()) {
    fs::path p = fs::path(dir) / ("lookup_" + v.name + ".tsv");
    if (fs::exists(p)) {
      enc.value_lookups.emplace_back(ReadLookup(p.string(), v.kind));
    } else {
      enc.value_lookups.emplace_back(std::nullopt);
    }
  }
  std::ifstream in(fs::path(dir) / "triples.tsv");
  if (!in) throw ParseError("cannot open triples in '" + dir + "'");
  std::string line;
  std::getline(in, line);
  int line_number = 1;
  const size_t width = schema.key_count() + schema.value_count();
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    auto f = SplitDelimitedLine(line, '\t', line_number);
    if (f.size() != width) {
      throw ParseError("expected " + std::to_string(width) + " columns",
                       line_number, 1);
    }
    TripleEncoding::Entry e;
    for (size_t i = 0; i < schema.key_count(); ++i) {
      e.ids.push_back(ParseScalar(f[i], ScalarKind::kInt).AsInt());
    }
    for (size_t i = 0; i < schema.value_count(); ++i) {
      ScalarKind kind = enc.value_lookups[i] ? ScalarKind::kInt
                                             : schema.values()[i].kind;
      e.values.push_back(ParseScalar(f[schema.key_count() + i], kind));
    }
    enc.entries.push_back(std::move(e));
  }
  return enc;
}

}  // namespace lara
