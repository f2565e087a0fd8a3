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

#include <unistd.h>

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "rma/shell.hpp"

int main(int argc, char** argv) {
  CLI::App app{"rma-shell: SQL shell with relational matrix operations"};

  std::string data_dir;
  std::string exec_file;
  std::string format = "table";
  app.add_option("--data", data_dir, "catalog directory (created if missing)");
  app.add_option("--exec", exec_file, "run a script file and exit");
  app.add_option("--format", format, "result format")
      ->check(CLI::IsMember({"table", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  rma::ShellOptions options;
  if (!data_dir.empty()) options.data_dir = data_dir;
  if (!exec_file.empty()) options.exec_script = exec_file;
  options.format =
      format == "csv" ? rma::OutputFormat::csv : rma::OutputFormat::table;
  options.interactive = exec_file.empty() && isatty(fileno(stdin));

  try {
    rma::Shell shell(options, std::cin, std::cout, std::cerr);
    return shell.run();
  } catch (const rma::RmaError& e) {
    std::cerr << "ERROR startup: " << e.what() << "\n";
    return 2;
  }
}
