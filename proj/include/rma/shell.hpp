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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "rma/catalog.hpp"

namespace rma {

enum class OutputFormat { table, csv };

struct ShellOptions {
  std::optional<std::filesystem::path> data_dir;
  std::optional<std::filesystem::path> exec_script;
  OutputFormat format = OutputFormat::table;
  bool interactive = false;  // print prompts
};

/// Interactive SQL shell and batch runner. Statements end with ';' and may
/// span lines; meta commands start with '\' and take one line:
///   \load <table> <file.csv>   ingest a CSV (persisted when --data is set)
///   \tables                    list tables
///   \schema <table>            show a table's attributes
///   \timing on|off             per-statement parse/plan/execute timings
///   \format table|csv          result output format
///   \export <table> <file>     write a table as CSV
///   \quit                      leave the shell
class Shell {
 public:
  Shell(ShellOptions options, std::istream& in, std::ostream& out,
        std::ostream& err);

  /// Runs the script when one was given, otherwise the interactive loop.
  /// Returns the process exit code: 0 ok, 1 script error.
  int run();

  Catalog& catalog() { return catalog_; }

 private:
  int process_stream(std::istream& in, bool stop_on_error);
  bool handle_meta(const std::string& line);     // returns false on \quit
  void run_statement(const std::string& text);
  void print_relation(const Relation& rel);

  ShellOptions options_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  Catalog catalog_;
  bool timing_ = false;
  bool failed_ = false;
};

}  // namespace rma
