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

#include "rma/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "rma/value_format.hpp"

namespace rma {

namespace {

/// One record, unquoted. Returns false at end of input.
bool read_record(std::istream& in, std::vector<std::string>& fields,
                 size_t& line_no) {
  fields.clear();
  int c = in.get();
  if (c == EOF) return false;
  std::string field;
  bool in_quotes = false;
  for (;;) {
    if (c == EOF) {
      fields.push_back(std::move(field));
      return true;
    }
    char ch = static_cast<char>(c);
    if (in_quotes) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get();
          field += '"';
        } else {
          in_quotes = false;
        }
      } else {
        if (ch == '\n') ++line_no;
        field += ch;
      }
    } else if (ch == '"') {
      in_quotes = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (ch == '\r') {
      // swallow; newline handling below
    } else if (ch == '\n') {
      ++line_no;
      fields.push_back(std::move(field));
      return true;
    } else {
      field += ch;
    }
    c = in.get();
  }
}

bool parse_int(const std::string& s, int64_t& out) {
  if (s.empty()) return false;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (*begin == '+') ++begin;
  auto [p, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && p == end;
}

bool parse_float(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (*begin == '+') ++begin;
  auto [p, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && p == end && std::isfinite(out);
}

}  // namespace

Relation load_csv_stream(std::istream& in, const std::string& what) {
  std::vector<std::string> header;
  size_t line_no = 1;
  if (!read_record(in, header, line_no) || header.empty()) {
    throw RmaError(errc::io_error, what + ": missing header row");
  }
  std::unordered_set<std::string_view> seen;
  for (const std::string& name : header) {
    if (name.empty()) {
      throw RmaError(errc::duplicate_header,
                     what + ": empty header name");
    }
    if (!seen.insert(name).second) {
      throw RmaError(errc::duplicate_header,
                     what + ": duplicate header name '" + name + "'");
    }
  }

  const size_t width = header.size();
  std::vector<std::vector<std::string>> cells(width);
  std::vector<std::string> fields;
  size_t row_line = line_no;
  while (read_record(in, fields, line_no)) {
    if (fields.size() == 1 && fields[0].empty()) {
      row_line = line_no;
      continue;  // trailing blank line
    }
    if (fields.size() != width) {
      throw RmaError(errc::ragged_row,
                     what + ": row at line " + std::to_string(row_line) +
                         " has " + std::to_string(fields.size()) +
                         " fields, expected " + std::to_string(width));
    }
    for (size_t c = 0; c < width; ++c) {
      if (fields[c].empty()) {
        throw RmaError(errc::empty_cell,
                       what + ": empty cell in column '" + header[c] +
                           "' at line " + std::to_string(row_line));
      }
      cells[c].push_back(std::move(fields[c]));
    }
    row_line = line_no;
  }

  std::vector<Attribute> attrs;
  std::vector<Column> cols;
  for (size_t c = 0; c < width; ++c) {
    bool all_int = true, all_float = true;
    for (const std::string& cell : cells[c]) {
      int64_t iv;
      double fv;
      if (all_int && !parse_int(cell, iv)) all_int = false;
      if (!all_int && all_float && !parse_float(cell, fv)) all_float = false;
      if (!all_int && !all_float) break;
    }
    if (all_int && !cells[c].empty()) {
      std::vector<int64_t> values(cells[c].size());
      for (size_t i = 0; i < values.size(); ++i) parse_int(cells[c][i], values[i]);
      attrs.push_back({header[c], Kind::int64});
      cols.push_back(Column::of_ints(std::move(values)));
    } else if (all_float && !cells[c].empty()) {
      std::vector<double> values(cells[c].size());
      for (size_t i = 0; i < values.size(); ++i) {
        parse_float(cells[c][i], values[i]);
      }
      attrs.push_back({header[c], Kind::float64});
      cols.push_back(Column::of_floats(std::move(values)));
    } else {
      attrs.push_back({header[c], Kind::text});
      cols.push_back(Column::of_texts(std::move(cells[c])));
    }
  }
  size_t rows = cols.empty() ? 0 : cols[0].size();
  return Relation(Schema(std::move(attrs)), std::move(cols), rows);
}

Relation load_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw RmaError(errc::io_error, "cannot open " + path.string());
  }
  return load_csv_stream(in, path.string());
}

namespace {

void write_field(std::ostream& out, const std::string& value) {
  bool needs_quotes = value.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs_quotes) {
    out << value;
    return;
  }
  out << '"';
  for (char c : value) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

}  // namespace

void export_csv(const Relation& rel, std::ostream& out) {
  for (size_t c = 0; c < rel.column_count(); ++c) {
    if (c) out << ',';
    write_field(out, rel.schema().at(c).name);
  }
  out << '\n';
  for (size_t i = 0; i < rel.row_count(); ++i) {
    for (size_t c = 0; c < rel.column_count(); ++c) {
      if (c) out << ',';
      write_field(out, rel.column(c).render(i));
    }
    out << '\n';
  }
}

void export_csv(const Relation& rel, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw RmaError(errc::io_error, "cannot write " + path.string());
  }
  export_csv(rel, out);
}

}  // namespace rma
