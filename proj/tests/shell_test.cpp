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

#include <catch2/catch_amalgamated.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rma/csv.hpp"
#include "rma/shell.hpp"
#include "support/test_support.hpp"

using namespace rma;
using namespace rma::test;

namespace {

namespace fs = std::filesystem;

struct ShellRun {
  int exit_code;
  std::string out;
  std::string err;
};

ShellRun run_shell(const std::string& input, ShellOptions options = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  Shell shell(options, in, out, err);
  int code = shell.run();
  return {code, out.str(), err.str()};
}

fs::path temp_dir(const char* tag) {
  fs::path dir = fs::temp_directory_path() / (std::string("rma_test_") + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string data_file(const char* name) {
  return std::string(RMA_TEST_DATA_DIR) + "/" + name;
}

// Whole-valued float columns re-import as int64; compare values, not kinds.
Relation widen_numeric(const Relation& r) {
  std::vector<Attribute> attrs;
  std::vector<Column> cols;
  for (size_t c = 0; c < r.column_count(); ++c) {
    const Column& col = r.column(c);
    if (col.kind() == Kind::int64) {
      std::vector<double> values(col.size());
      for (size_t i = 0; i < col.size(); ++i) {
        values[i] = static_cast<double>(col.ints()[i]);
      }
      attrs.push_back({r.schema().at(c).name, Kind::float64});
      cols.push_back(Column::of_floats(std::move(values)));
    } else {
      attrs.push_back(r.schema().at(c));
      cols.push_back(col);
    }
  }
  return Relation(Schema(std::move(attrs)), std::move(cols), r.row_count());
}

}  // namespace

TEST_CASE("csv loading infers kinds per column") {
  Relation rating = load_csv(data_file("rating.csv"));
  REQUIRE(rating.schema().attrs() ==
          std::vector<Attribute>{{"User", Kind::text},
                                 {"Balto", Kind::float64},
                                 {"Heat", Kind::float64},
                                 {"Net", Kind::float64}});

  std::istringstream ints("x\n1\n2\n");
  REQUIRE(load_csv_stream(ints, "ints").column("x").kind() == Kind::int64);

  std::istringstream mixed("x\n1\n2.5\n");
  REQUIRE(load_csv_stream(mixed, "mixed").column("x").kind() == Kind::float64);

  std::istringstream text("x\n1\nabc\n");
  REQUIRE(load_csv_stream(text, "text").column("x").kind() == Kind::text);
}

TEST_CASE("csv loading rejects bad input") {
  std::istringstream ragged("a,b\n1\n");
  REQUIRE_THROWS_AS(load_csv_stream(ragged, "ragged"), RmaError);

  std::istringstream dup("a,a\n1,2\n");
  REQUIRE_THROWS_AS(load_csv_stream(dup, "dup"), RmaError);

  std::istringstream empty_cell("a,b\n1,\n");
  REQUIRE_THROWS_AS(load_csv_stream(empty_cell, "empty"), RmaError);
}

TEST_CASE("csv export and reload reproduce the values exactly") {
  Relation r = make_relation({{"t", tcol({"x,y", "line\nbreak", "quo\"te"})},
                              {"v", fcol({0.1, 1.0 / 3.0, -2.5e-17})},
                              {"n", icol({1, -2, 3})}});
  std::ostringstream out;
  export_csv(r, out);
  std::istringstream in(out.str());
  Relation back = load_csv_stream(in, "roundtrip");
  REQUIRE(set_equal_exact(back, r.with_name(std::nullopt)));
}

TEST_CASE("the shell loads data and answers the intro query") {
  std::string script = "\\load rating " + data_file("rating.csv") +
                       "\nSELECT * FROM inv(rating BY User);\n\\quit\n";
  ShellRun run = run_shell(script);
  REQUIRE(run.exit_code == 0);
  REQUIRE(run.err.empty());
  REQUIRE(run.out.find("User") != std::string::npos);
  REQUIRE(run.out.find("(3 rows)") != std::string::npos);
}

TEST_CASE("meta commands: tables, schema, format, timing") {
  std::string script = "\\load rating " + data_file("rating.csv") +
                       "\n\\load r " + data_file("weather.csv") +
                       "\n\\tables\n\\schema rating\n\\format csv\n"
                       "\\timing on\nSELECT * FROM r WHERE T > '6am';\n";
  ShellRun run = run_shell(script);
  REQUIRE(run.exit_code == 0);
  REQUIRE(run.err.empty());
  REQUIRE(run.out.find("r\nrating\n") != std::string::npos);
  REQUIRE(run.out.find("User  text") != std::string::npos);
  REQUIRE(run.out.find("Balto  float64") != std::string::npos);
  REQUIRE(run.out.find("T,H,W\n8am,8,5\n7am,6,7\n") != std::string::npos);
  REQUIRE(run.out.find("Time: parse ") != std::string::npos);
}

TEST_CASE("statement errors keep the session alive and are formatted") {
  std::string script = "SELECT * FROM nope;\nSELECT 1 + 2 AS v FROM t;\n";
  ShellRun run = run_shell(script);
  REQUIRE(run.exit_code == 0);  // interactive stream: errors do not kill it
  REQUIRE(run.err.find("ERROR plan: unknown table 'nope' at line 1 col 15") !=
          std::string::npos);
  REQUIRE(run.err.find("ERROR plan: unknown table 't'") != std::string::npos);
}

TEST_CASE("session state is unchanged after a failing statement") {
  std::string dir = temp_dir("state").string();
  std::string script = "\\load rating " + data_file("rating.csv") +
                       "\nSELECT * FROM inv(rating BY Missing);\n\\tables\n";
  ShellRun run = run_shell(script);
  REQUIRE(run.err.find("ERROR plan") != std::string::npos);
  REQUIRE(run.out.find("rating") != std::string::npos);
}

TEST_CASE("script mode stops at the first error with exit code 1") {
  fs::path dir = temp_dir("script");
  fs::path script_path = dir / "script.sql";
  {
    std::ofstream script(script_path);
    script << "SELECT * FROM missing;\n";
  }
  ShellOptions options;
  options.exec_script = script_path;
  ShellRun run = run_shell("", options);
  REQUIRE(run.exit_code == 1);
  REQUIRE(run.err.find("ERROR plan") != std::string::npos);
}

TEST_CASE("export writes a loadable csv") {
  fs::path dir = temp_dir("export");
  fs::path out_path = dir / "out.csv";
  std::string script = "\\load rating " + data_file("rating.csv") +
                       "\n\\export rating " + out_path.string() + "\n";
  ShellRun run = run_shell(script);
  REQUIRE(run.exit_code == 0);
  Relation back = load_csv(out_path);
  REQUIRE(set_equal_exact(widen_numeric(back),
                          widen_numeric(ratings().with_name(std::nullopt))));
}

TEST_CASE("a data directory persists tables across sessions") {
  fs::path dir = temp_dir("persist");
  ShellOptions options;
  options.data_dir = dir;
  std::string script = "\\load rating " + data_file("rating.csv") + "\n";
  ShellRun first = run_shell(script, options);
  REQUIRE(first.exit_code == 0);

  ShellRun second =
      run_shell("SELECT User FROM rating ORDER BY User;\n", options);
  REQUIRE(second.exit_code == 0);
  REQUIRE(second.err.empty());
  REQUIRE(second.out.find("Ann") != std::string::npos);
  REQUIRE(second.out.find("(3 rows)") != std::string::npos);
}

TEST_CASE("table format uses four significant digits") {
  std::string script = "\\load r " + data_file("weather.csv") +
                       "\nSELECT * FROM inv((SELECT * FROM r WHERE T > '6am') "
                       "AS r2 BY T);\n";
  ShellRun run = run_shell(script);
  REQUIRE(run.err.empty());
  REQUIRE(run.out.find("-0.1923") != std::string::npos);
  REQUIRE(run.out.find("0.2692") != std::string::npos);
}

TEST_CASE("unknown meta commands report an error") {
  ShellRun run = run_shell("\\bogus\n");
  REQUIRE(run.err.find("ERROR command") != std::string::npos);
}
