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

#include "rma/shell.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "rma/csv.hpp"
#include "rma/parser.hpp"
#include "rma/planner.hpp"
#include "rma/value_format.hpp"

namespace rma {

namespace {

std::string format_error(const char* phase, const RmaError& e) {
  std::string out = std::string("ERROR ") + phase + ": " + e.what();
  if (e.has_pos()) {
    out += " at line " + std::to_string(e.pos().line) + " col " +
           std::to_string(e.pos().column);
  }
  return out;
}

std::vector<std::string> split_words(const std::string& line, size_t max_parts) {
  std::vector<std::string> parts;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    if (i >= line.size()) break;
    if (parts.size() + 1 == max_parts) {
      size_t end = line.size();
      while (end > i && std::isspace(static_cast<unsigned char>(line[end - 1]))) {
        --end;
      }
      parts.push_back(line.substr(i, end - i));
      break;
    }
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
      ++j;
    }
    parts.push_back(line.substr(i, j - i));
    i = j;
  }
  return parts;
}

std::string render_cell(const Column& col, size_t row, OutputFormat format) {
  if (col.kind() == Kind::float64 && format == OutputFormat::table) {
    return format_double_display(col.floats()[row]);
  }
  return col.render(row);
}

}  // namespace

Shell::Shell(ShellOptions options, std::istream& in, std::ostream& out,
             std::ostream& err)
    : options_(std::move(options)), in_(in), out_(out), err_(err) {
  if (options_.data_dir) {
    catalog_.attach_directory(*options_.data_dir);
  }
}

int Shell::run() {
  if (options_.exec_script) {
    std::ifstream script(*options_.exec_script);
    if (!script) {
      err_ << "ERROR open: cannot open " << options_.exec_script->string()
           << "\n";
      return 1;
    }
    return process_stream(script, /*stop_on_error=*/true);
  }
  return process_stream(in_, /*stop_on_error=*/false);
}

int Shell::process_stream(std::istream& in, bool stop_on_error) {
  std::string statement;
  std::string line;
  bool in_single = false, in_double = false;
  failed_ = false;

  auto prompt = [&]() {
    if (options_.interactive) {
      out_ << (statement.empty() ? "rma> " : "...> ") << std::flush;
    }
  };

  prompt();
  while (std::getline(in, line)) {
    if (statement.empty()) {
      std::string trimmed = line;
      while (!trimmed.empty() &&
             std::isspace(static_cast<unsigned char>(trimmed.front()))) {
        trimmed.erase(trimmed.begin());
      }
      if (trimmed.empty()) {
        prompt();
        continue;
      }
      if (trimmed[0] == '\\') {
        if (!handle_meta(trimmed)) return failed_ && stop_on_error ? 1 : 0;
        if (failed_ && stop_on_error) return 1;
        prompt();
        continue;
      }
      if (trimmed.rfind("--", 0) == 0) {
        prompt();
        continue;
      }
    }

    // Accumulate until an unquoted ';' ends the statement.
    for (size_t i = 0; i < line.size(); ++i) {
      char c = line[i];
      statement += c;
      if (in_single) {
        if (c == '\'') in_single = false;
      } else if (in_double) {
        if (c == '"') in_double = false;
      } else if (c == '\'') {
        in_single = true;
      } else if (c == '"') {
        in_double = true;
      } else if (c == ';') {
        run_statement(statement);
        statement.clear();
        in_single = in_double = false;
        if (failed_ && stop_on_error) return 1;
      }
    }
    if (!statement.empty()) statement += '\n';
    prompt();
  }
  if (!statement.empty()) {
    std::string rest = statement;
    bool blank = true;
    for (char c : rest) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (!blank) {
      err_ << "ERROR parse: statement not terminated by ';'\n";
      failed_ = true;
    }
  }
  return failed_ && stop_on_error ? 1 : 0;
}

bool Shell::handle_meta(const std::string& line) {
  failed_ = false;
  try {
    if (line == "\\quit" || line == "\\q") {
      return false;
    }
    if (line == "\\tables") {
      for (const std::string& name : catalog_.table_names()) {
        out_ << name << "\n";
      }
      return true;
    }
    if (line.rfind("\\schema", 0) == 0) {
      auto parts = split_words(line, 2);
      if (parts.size() != 2) {
        throw RmaError(errc::bad_argument, "usage: \\schema <table>");
      }
      const Relation& rel = catalog_.require(parts[1]);
      for (const Attribute& a : rel.schema().attrs()) {
        out_ << a.name << "  " << kind_name(a.kind) << "\n";
      }
      return true;
    }
    if (line.rfind("\\timing", 0) == 0) {
      auto parts = split_words(line, 2);
      if (parts.size() != 2 || (parts[1] != "on" && parts[1] != "off")) {
        throw RmaError(errc::bad_argument, "usage: \\timing on|off");
      }
      timing_ = parts[1] == "on";
      return true;
    }
    if (line.rfind("\\format", 0) == 0) {
      auto parts = split_words(line, 2);
      if (parts.size() != 2 || (parts[1] != "table" && parts[1] != "csv")) {
        throw RmaError(errc::bad_argument, "usage: \\format table|csv");
      }
      options_.format =
          parts[1] == "table" ? OutputFormat::table : OutputFormat::csv;
      return true;
    }
    if (line.rfind("\\load", 0) == 0) {
      auto parts = split_words(line, 3);
      if (parts.size() != 3) {
        throw RmaError(errc::bad_argument, "usage: \\load <table> <file.csv>");
      }
      Relation rel = load_csv(parts[2]);
      catalog_.register_table(parts[1], std::move(rel));
      return true;
    }
    if (line.rfind("\\export", 0) == 0) {
      auto parts = split_words(line, 3);
      if (parts.size() != 3) {
        throw RmaError(errc::bad_argument, "usage: \\export <table> <file>");
      }
      export_csv(catalog_.require(parts[1]), parts[2]);
      return true;
    }
    throw RmaError(errc::bad_argument,
                   "unknown command '" + split_words(line, 1)[0] + "'");
  } catch (const RmaError& e) {
    err_ << format_error("command", e) << "\n";
    failed_ = true;
    return true;
  }
}

void Shell::run_statement(const std::string& text) {
  using Clock = std::chrono::steady_clock;
  failed_ = false;

  Query query;
  auto t0 = Clock::now();
  try {
    query = parse(text);
  } catch (const RmaError& e) {
    err_ << format_error("parse", e) << "\n";
    failed_ = true;
    return;
  }

  std::unique_ptr<PlanNode> node;
  auto t1 = Clock::now();
  try {
    node = plan(query, catalog_);
  } catch (const RmaError& e) {
    err_ << format_error("plan", e) << "\n";
    failed_ = true;
    return;
  }

  auto t2 = Clock::now();
  Relation result;
  try {
    result = execute(*node, catalog_);
  } catch (const RmaError& e) {
    err_ << format_error("execute", e) << "\n";
    failed_ = true;
    return;
  }
  auto t3 = Clock::now();

  print_relation(result);
  if (timing_) {
    auto ms = [](auto a, auto b) {
      return std::chrono::duration<double, std::milli>(b - a).count();
    };
    out_ << std::fixed << std::setprecision(3) << "Time: parse " << ms(t0, t1)
         << " ms, plan " << ms(t1, t2) << " ms, execute " << ms(t2, t3)
         << " ms\n";
    out_.unsetf(std::ios::fixed);
  }
}

void Shell::print_relation(const Relation& rel) {
  if (options_.format == OutputFormat::csv) {
    export_csv(rel, out_);
    return;
  }
  const size_t ncols = rel.column_count();
  std::vector<size_t> width(ncols);
  std::vector<std::vector<std::string>> cells(rel.row_count());
  for (size_t c = 0; c < ncols; ++c) {
    width[c] = rel.schema().at(c).name.size();
  }
  for (size_t i = 0; i < rel.row_count(); ++i) {
    cells[i].resize(ncols);
    for (size_t c = 0; c < ncols; ++c) {
      cells[i][c] = render_cell(rel.column(c), i, OutputFormat::table);
      width[c] = std::max(width[c], cells[i][c].size());
    }
  }
  auto pad = [&](const std::string& s, size_t w, bool right) {
    std::string out;
    if (right) out.append(w - s.size(), ' ');
    out += s;
    if (!right) out.append(w - s.size(), ' ');
    return out;
  };
  for (size_t c = 0; c < ncols; ++c) {
    if (c) out_ << " | ";
    out_ << pad(rel.schema().at(c).name, width[c], false);
  }
  out_ << "\n";
  for (size_t c = 0; c < ncols; ++c) {
    if (c) out_ << "-+-";
    out_ << std::string(width[c], '-');
  }
  out_ << "\n";
  for (size_t i = 0; i < rel.row_count(); ++i) {
    for (size_t c = 0; c < ncols; ++c) {
      if (c) out_ << " | ";
      out_ << pad(cells[i][c], width[c], is_numeric(rel.schema().at(c).kind));
    }
    out_ << "\n";
  }
  out_ << "(" << rel.row_count() << " row" << (rel.row_count() == 1 ? "" : "s")
       << ")\n";
}

}  // namespace rma
