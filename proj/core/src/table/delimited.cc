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

#include "lara/table/delimited.h"

#include <fstream>
#include <set>
#include <sstream>

#include "lara/table/error.h"

namespace lara {

namespace {

std::vector<std::string> SidecarTokens(const std::string& line,
                                       int line_number) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::string tok;
    if (line[i] == '"') {
      size_t start = i++;
      bool closed = false;
      while (i < line.size()) {
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            tok += '"';
            i += 2;
            continue;
          }
          ++i;
          closed = true;
          break;
        }
        tok += line[i++];
      }
      if (!closed) {
        throw ParseError("unterminated quote", line_number,
                         static_cast<int>(start) + 1);
      }
    } else {
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
             line[i] != '\r') {
        tok += line[i++];
      }
    }
    out.push_back(std::move(tok));
  }
  return out;
}

std::string QuoteSidecarToken(const std::string& s) {
  if (!s.empty() && s.find_first_of(" \t\"#") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string QuoteField(const std::string& s, char delimiter) {
  bool needs = s.find(delimiter) != std::string::npos ||
               s.find_first_of("\"\n\r") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Sidecar ParseSidecar(std::istream& in) {
  std::vector<KeyAttribute> keys;
  std::vector<ValueAttribute> values;
  std::map<std::string, std::string> collision;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    auto toks = SidecarTokens(line, line_number);
    if (toks.empty() || toks[0].starts_with("#")) continue;
    const std::string& role = toks[0];
    auto kind_of = [&](const std::string& text) {
      auto k = ParseKind(text);
      if (!k) {
        throw ParseError("unknown kind '" + text + "'", line_number, 1);
      }
      return *k;
    };
    if (role == "key") {
      if (toks.size() != 3) {
        throw ParseError("expected 'key NAME KIND'", line_number, 1);
      }
      keys.push_back({toks[1], kind_of(toks[2])});
    } else if (role == "value") {
      if (toks.size() != 4 && toks.size() != 5) {
        throw ParseError("expected 'value NAME KIND DEFAULT [COLLISION_OP]'",
                         line_number, 1);
      }
      ScalarKind kind = kind_of(toks[2]);
      Scalar def;
      try {
        def = ParseScalar(toks[3], kind);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_number, 1);
      }
      values.push_back({toks[1], kind, def});
      if (toks.size() == 5) collision[toks[1]] = toks[4];
    } else {
      throw ParseError("unknown declaration '" + role + "'", line_number, 1);
    }
  }
  try {
    return Sidecar{TableSchema(std::move(keys), std::move(values)),
                   std::move(collision)};
  } catch (const SchemaError& e) {
    throw ParseError(std::string("invalid sidecar schema: ") + e.what());
  }
}

Sidecar ReadSidecarFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open schema sidecar '" + path + "'");
  return ParseSidecar(in);
}

void WriteSidecar(const Sidecar& sidecar, std::ostream& out) {
  for (const auto& k : sidecar.schema.keys()) {
    out << "key " << QuoteSidecarToken(k.name) << ' ' << KindName(k.kind)
        << '\n';
  }
  for (const auto& v : sidecar.schema.values()) {
    out << "value " << QuoteSidecarToken(v.name) << ' ' << KindName(v.kind)
        << ' ' << QuoteSidecarToken(v.default_value.ToString());
    auto it = sidecar.collision_ops.find(v.name);
    if (it != sidecar.collision_ops.end()) out << ' ' << it->second;
    out << '\n';
  }
}

std::vector<std::string> SplitDelimitedLine(const std::string& line,
                                            char delimiter, int line_number) {
  std::vector<std::string> out;
  std::string field;
  size_t i = 0;
  size_t n = line.size();
  if (n > 0 && line[n - 1] == '\r') --n;
  bool at_field_start = true;
  while (i < n) {
    char c = line[i];
    if (at_field_start && c == '"') {
      size_t start = i++;
      bool closed = false;
      while (i < n) {
        if (line[i] == '"') {
          if (i + 1 < n && line[i + 1] == '"') {
            field += '"';
            i += 2;
            continue;
          }
          ++i;
          closed = true;
          break;
        }
        field += line[i++];
      }
      if (!closed) {
        throw ParseError("unterminated quoted field", line_number,
                         static_cast<int>(start) + 1);
      }
      if (i < n && line[i] != delimiter) {
        throw ParseError("text after closing quote", line_number,
                         static_cast<int>(i) + 1);
      }
      at_field_start = false;
      continue;
    }
    if (c == delimiter) {
      out.push_back(std::move(field));
      field.clear();
      at_field_start = true;
    } else {
      field += c;
      at_field_start = false;
    }
    ++i;
  }
  out.push_back(std::move(field));
  return out;
}

Table ReadDelimited(std::istream& in, const TableSchema& schema,
                    const DelimitedOptions& options) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("missing header line", 1, 1);
  }
  auto header = SplitDelimitedLine(line, options.delimiter, 1);
  const size_t width = header.size();

  // column -> (is_key, index within keys or values)
  std::vector<std::pair<bool, size_t>> columns;
  std::set<std::string> seen;
  for (size_t c = 0; c < width; ++c) {
    const std::string& name = header[c];
    if (!seen.insert(name).second) {
      throw ParseError("duplicate column '" + name + "'", 1,
                       static_cast<int>(c) + 1);
    }
    if (auto k = schema.KeyIndex(name)) {
      columns.emplace_back(true, *k);
    } else if (auto v = schema.ValueIndex(name)) {
      columns.emplace_back(false, *v);
    } else {
      throw ParseError("column '" + name + "' is not in the schema", 1,
                       static_cast<int>(c) + 1);
    }
  }
  for (const auto& k : schema.keys()) {
    if (!seen.count(k.name)) {
      throw ParseError("schema attribute '" + k.name + "' has no column", 1, 1);
    }
  }
  for (const auto& v : schema.values()) {
    if (!seen.count(v.name)) {
      throw ParseError("schema attribute '" + v.name + "' has no column", 1, 1);
    }
  }

  TableBuilder builder(schema);
  int line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line == "\r") continue;
    auto fields = SplitDelimitedLine(line, options.delimiter, line_number);
    if (fields.size() != width) {
      throw ParseError("expected " + std::to_string(width) + " columns, found " +
                           std::to_string(fields.size()),
                       line_number, 1);
    }
    Tuple key(schema.key_count());
    Tuple values = schema.DefaultValues();
    for (size_t c = 0; c < width; ++c) {
      auto [is_key, idx] = columns[c];
      ScalarKind kind =
          is_key ? schema.keys()[idx].kind : schema.values()[idx].kind;
      if (!is_key && fields[c].empty() && kind != ScalarKind::kText) continue;
      try {
        Scalar s = ParseScalar(fields[c], kind);
        (is_key ? key : values)[idx] = std::move(s);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_number, static_cast<int>(c) + 1);
      }
    }
    if (!builder.Contains(key)) {
      builder.Add(std::move(key), std::move(values));
      continue;
    }
    builder.Upsert(
        std::move(key), std::move(values),
        [&](const Tuple& old, const Tuple& added) {
          Tuple merged = old;
          for (size_t i = 0; i < merged.size(); ++i) {
            const std::string& name = schema.values()[i].name;
            auto it = options.collision.find(name);
            if (it == options.collision.end()) {
              throw ParseError("duplicate key and no collision operator for '" +
                                   name + "'",
                               line_number, 1);
            }
            merged[i] = it->second(old[i], added[i]);
          }
          return merged;
        });
  }
  return builder.Build();
}

Table ReadDelimitedFile(const std::string& path, const TableSchema& schema,
                        const DelimitedOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return ReadDelimited(in, schema, options);
}

void WriteDelimited(const Table& a, std::ostream& out, char delimiter) {
  const TableSchema& s = a.schema();
  bool first = true;
  auto cell = [&](const std::string& text) {
    if (!first) out << delimiter;
    out << QuoteField(text, delimiter);
    first = false;
  };
  for (const auto& k : s.keys()) cell(k.name);
  for (const auto& v : s.values()) cell(v.name);
  out << '\n';
  const Table canonical = a.Canonicalize();
  for (const auto& [k, v] : canonical.rows()) {
    first = true;
    for (const auto& x : k) cell(x.ToString());
    for (const auto& x : v) cell(x.ToString());
    out << '\n';
  }
  if (!out) throw LaraError("write failed");
}

void WriteDelimitedFile(const Table& a, const std::string& path,
                        char delimiter) {
  std::ofstream out(path);
  if (!out) throw LaraError("cannot open '" + path + "' for writing");
  WriteDelimited(a, out, delimiter);
}

char DelimiterForPath(const std::string& path) {
  return path.ends_with(".tsv") ? '\t' : ',';
}

}  // namespace lara
