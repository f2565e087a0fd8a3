/*
 * Copyright 2026 The RMA Engine Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "rma/catalog.hpp"

#include <cstring>
#include <fstream>
#include <limits>

namespace rma {

// Layout under the attached directory:
//   <table>.schema   text: "rows <N>" then one "<kind>\t<name>" line per attr
//   <table>.<i>.col  column i values; float64/int64 as 8-byte little-endian,
//                    text as uint32 little-endian length followed by bytes

namespace {

void write_exact(std::ofstream& out, const void* data, size_t n) {
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
}

template <typename T>
void read_exact(std::ifstream& in, T* value) {
  in.read(reinterpret_cast<char*>(value), sizeof(T));
  if (!in) {
    throw RmaError(errc::io_error, "catalog column file is truncated");
  }
}

std::optional<Kind> kind_from_name(std::string_view name) {
  if (name == "float64") return Kind::float64;
  if (name == "int64") return Kind::int64;
  if (name == "text") return Kind::text;
  return std::nullopt;
}

Column load_column(const std::filesystem::path& path, Kind kind, size_t rows) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw RmaError(errc::io_error, "cannot open " + path.string());
  }
  switch (kind) {
    case Kind::float64: {
      std::vector<double> values(rows);
      for (double& v : values) read_exact(in, &v);
      return Column::of_floats(std::move(values));
    }
    case Kind::int64: {
      std::vector<int64_t> values(rows);
      for (int64_t& v : values) read_exact(in, &v);
      return Column::of_ints(std::move(values));
    }
    case Kind::text: {
      std::vector<std::string> values(rows);
      for (std::string& v : values) {
        uint32_t len = 0;
        read_exact(in, &len);
        v.resize(len);
        if (len > 0) {
          in.read(v.data(), len);
          if (!in) {
            throw RmaError(errc::io_error, "catalog column file is truncated");
          }
        }
      }
      return Column::of_texts(std::move(values));
    }
  }
  throw RmaError(errc::io_error, "unknown column kind in catalog");
}

}  // namespace

void Catalog::save_table(const std::string& name, const Relation& rel) const {
  const std::filesystem::path schema_path = *dir_ / (name + ".schema");
  std::ofstream schema(schema_path, std::ios::trunc);
  if (!schema) {
    throw RmaError(errc::io_error, "cannot write " + schema_path.string());
  }
  schema << "rows " << rel.row_count() << "\n";
  for (const Attribute& a : rel.schema().attrs()) {
    schema << kind_name(a.kind) << "\t" << a.name << "\n";
  }
  schema.close();

  for (size_t i = 0; i < rel.column_count(); ++i) {
    const std::filesystem::path col_path =
        *dir_ / (name + "." + std::to_string(i) + ".col");
    std::ofstream out(col_path, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw RmaError(errc::io_error, "cannot write " + col_path.string());
    }
    const Column& c = rel.column(i);
    switch (c.kind()) {
      case Kind::float64:
        for (double v : c.floats()) write_exact(out, &v, sizeof(v));
        break;
      case Kind::int64:
        for (int64_t v : c.ints()) write_exact(out, &v, sizeof(v));
        break;
      case Kind::text:
        for (const std::string& v : c.texts()) {
          uint32_t len = static_cast<uint32_t>(v.size());
          write_exact(out, &len, sizeof(len));
          write_exact(out, v.data(), v.size());
        }
        break;
    }
  }
}

void Catalog::register_table(const std::string& name, Relation relation) {
  Relation named = relation.with_name(name);
  if (dir_) save_table(name, named);
  tables_.insert_or_assign(name, std::move(named));
}

const Relation* Catalog::find(std::string_view name) const {
  auto it = tables_.find(std::string(name));
  return it == tables_.end() ? nullptr : &it->second;
}

const Relation& Catalog::require(std::string_view name) const {
  if (const Relation* r = find(name)) return *r;
  throw RmaError(errc::unknown_table,
                 "unknown table '" + std::string(name) + "'");
}

std::vector<std::string> Catalog::table_names() const {
  std::vector<std::string> names;
  names.reserve(tables_.size());
  for (const auto& [name, rel] : tables_) names.push_back(name);
  return names;
}

void Catalog::attach_directory(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  dir_ = dir;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".schema") {
      continue;
    }
    const std::string table = entry.path().stem().string();
    std::ifstream schema(entry.path());
    if (!schema) {
      throw RmaError(errc::io_error, "cannot open " + entry.path().string());
    }
    std::string word;
    size_t rows = 0;
    schema >> word >> rows;
    if (word != "rows") {
      throw RmaError(errc::io_error,
                     "bad schema file " + entry.path().string());
    }
    schema.ignore(std::numeric_limits<std::streamsize>::max(), '\n');

    std::vector<Attribute> attrs;
    std::string line;
    while (std::getline(schema, line)) {
      if (line.empty()) continue;
      size_t tab = line.find('\t');
      if (tab == std::string::npos) {
        throw RmaError(errc::io_error,
                       "bad schema line in " + entry.path().string());
      }
      auto kind = kind_from_name(line.substr(0, tab));
      if (!kind) {
        throw RmaError(errc::io_error,
                       "bad column kind in " + entry.path().string());
      }
      attrs.push_back({line.substr(tab + 1), *kind});
    }

    std::vector<Column> cols;
    for (size_t i = 0; i < attrs.size(); ++i) {
      cols.push_back(load_column(dir / (table + "." + std::to_string(i) + ".col"),
                                 attrs[i].kind, rows));
    }
    Relation rel(Schema(std::move(attrs)), std::move(cols), rows, table);
    tables_.insert_or_assign(table, std::move(rel));
  }
}

}  // namespace rma
