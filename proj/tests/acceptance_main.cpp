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

// Acceptance suite: one named criterion per function, one PASS/FAIL line
// each. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "rma/csv.hpp"
#include "rma/parser.hpp"
#include "rma/planner.hpp"
#include "support/test_support.hpp"

using namespace rma;
using namespace rma::test;

namespace {

struct Failure {
  std::string message;
};

void ensure(bool condition, const std::string& message) {
  if (!condition) throw Failure{message};
}

std::string data_file(const char* name) {
  return std::string(RMA_TEST_DATA_DIR) + "/" + name;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

Catalog weather_catalog() {
  Catalog cat;
  cat.register_table("r", load_csv(data_file("weather.csv")));
  return cat;
}

double float_cell(const Relation& r, const std::string& column,
                  const std::string& key_col, const std::string& key) {
  const Column& keys = r.column(key_col);
  for (size_t i = 0; i < r.row_count(); ++i) {
    if (keys.texts()[i] == key) return r.column(column).floats()[i];
  }
  throw Failure{"row with " + key_col + " = '" + key + "' not found"};
}

// --- criterion 1: the inversion example, printed to two decimals ---

void criterion_fig2_inversion() {
  Catalog cat = weather_catalog();
  auto start = std::chrono::steady_clock::now();
  Relation out = run_query(
      cat, "SELECT * FROM inv((SELECT * FROM r WHERE T > '6am') AS r2 BY T);");
  double elapsed = seconds_since(start);

  ensure(out.row_count() == 2, "expected exactly two rows");
  ensure(out.schema().names() == std::vector<std::string>{"T", "H", "W"},
         "unexpected result schema");
  struct Expected {
    const char* t;
    double h, w;
  } expected[] = {{"7am", -0.19, 0.27}, {"8am", 0.31, -0.23}};
  for (const auto& row : expected) {
    double h = float_cell(out, "H", "T", row.t);
    double w = float_cell(out, "W", "T", row.t);
    ensure(std::abs(h - row.h) <= 0.005 && std::abs(w - row.w) <= 0.005,
           std::string("cells for ") + row.t + " deviate from the printed "
           "two-decimal values");
  }
  ensure(elapsed < 1.0, "query took " + std::to_string(elapsed) + "s");
}

// --- criterion 2: the R factor example ---

void criterion_fig9_rqr() {
  Catalog cat = weather_catalog();
  auto start = std::chrono::steady_clock::now();
  Relation out = run_query(cat, "SELECT * FROM rqr(r BY T);");
  double elapsed = seconds_since(start);

  ensure(out.schema().names() == std::vector<std::string>{"C", "H", "W"},
         "unexpected result schema");
  struct Expected {
    const char* c;
    double h, w;
  } expected[] = {{"H", -10.1, -8.8}, {"W", 0.0, -4.6}};
  for (const auto& row : expected) {
    double h = float_cell(out, "H", "C", row.c);
    double w = float_cell(out, "W", "C", row.c);
    ensure(std::abs(h - row.h) <= 0.05 && std::abs(w - row.w) <= 0.05,
           std::string("cells for ") + row.c + " deviate from the printed values");
  }
  ensure(elapsed < 1.0, "query took " + std::to_string(elapsed) + "s");
}

// --- criterion 3: transpose and its round trip ---

void criterion_transpose_round_trip() {
  Catalog cat = weather_catalog();
  Relation t1 = run_query(cat, "SELECT * FROM tra(r BY T);");
  ensure(t1.schema().names() ==
             std::vector<std::string>{"C", "5am", "6am", "7am", "8am"},
         "transpose schema is not (C, 5am, 6am, 7am, 8am)");
  Relation expected = make_relation({{"C", tcol({"H", "W"})},
                                     {"5am", fcol({1, 3})},
                                     {"6am", fcol({1, 4})},
                                     {"7am", fcol({6, 7})},
                                     {"8am", fcol({8, 5})}});
  ensure(set_equal_exact(t1, expected), "transposed rows differ");

  Relation t2 = run_query(cat, "SELECT * FROM tra(tra(r BY T) BY C);");
  // Same tuples as the original; the context attribute is now named C.
  Relation original = make_relation({{"C", tcol({"5am", "8am", "7am", "6am"})},
                                     {"H", fcol({1, 8, 6, 1})},
                                     {"W", fcol({3, 5, 7, 4})}});
  ensure(set_equal_exact(t2, original),
         "double transpose does not reproduce the original tuples");
}

// --- criterion 4: matrix consistency and origins for all 19 operations ---

void criterion_consistency_suite() {
  auto start = std::chrono::steady_clock::now();
  std::mt19937 gen(20260809);
  for (int code = 0; code < kOpCodeCount; ++code) {
    OpCode op = static_cast<OpCode>(code);
    for (int trial = 0; trial < 200; ++trial) {
      RmaCall call = random_call(op, gen, 8, 4);
      std::string report = check_call_consistency(call, SortPolicy::full, 1e-9);
      ensure(report.empty(), report + " (trial " + std::to_string(trial) + ")");
    }
  }
  double elapsed = seconds_since(start);
  ensure(elapsed < 60.0, "suite took " + std::to_string(elapsed) + "s");
}

// --- criterion 5: kernel oracles ---

void criterion_kernel_oracles() {
  using namespace kernels;
  std::mt19937 gen(5050);
  std::uniform_real_distribution<double> value(-10.0, 10.0);
  auto random_matrix = [&](int rows, int cols) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) m(i, j) = value(gen);
    }
    return m;
  };

  std::function<double(const Matrix&)> cofactor = [&](const Matrix& a) -> double {
    if (a.rows() == 1) return a(0, 0);
    double det = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      Matrix minor(a.rows() - 1, a.cols() - 1);
      for (Eigen::Index i = 1; i < a.rows(); ++i) {
        Eigen::Index cc = 0;
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
          if (c != j) minor(i - 1, cc++) = a(i, c);
        }
      }
      det += ((j % 2 == 0) ? 1.0 : -1.0) * a(0, j) * cofactor(minor);
    }
    return det;
  };

  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> size(1, 8);
    int n = size(gen);

    Matrix a = random_matrix(n, n);
    for (int i = 0; i < n; ++i) a(i, i) += (a(i, i) < 0 ? -25.0 : 25.0);
    Matrix gj = gauss_jordan_inverse(a);
    Matrix lu_oracle = Eigen::PartialPivLU<Matrix>(a).inverse();
    ensure(matrix_near(gj, lu_oracle, 1e-9),
           "Gauss-Jordan and LU inverses disagree");
    ensure(matrix_near(a * gj, Matrix::Identity(n, n), 1e-8),
           "A times its inverse is not the identity");

    std::uniform_int_distribution<int> cols_dist(1, 4);
    int cols = cols_dist(gen);
    std::uniform_int_distribution<int> rows_dist(cols, 8);
    int rows = rows_dist(gen);
    Matrix b = random_matrix(rows, cols);
    auto [q, r] = qr(b);
    ensure(matrix_near(q.transpose() * q, Matrix::Identity(cols, cols), 1e-9),
           "Q columns are not orthonormal");
    ensure(matrix_near(q * r, b, 1e-9 * std::max(1.0, b.cwiseAbs().maxCoeff())),
           "QR does not reconstruct the input");

    SvdResult s = svd(b);
    Matrix padded = Matrix::Zero(rows, cols);
    padded.topRows(cols) = s.d;
    ensure(matrix_near(s.u * padded * s.v.transpose(), b,
                       1e-8 * std::max(1.0, b.cwiseAbs().maxCoeff())),
           "SVD does not reconstruct the input");
    for (int j = 0; j < cols; ++j) {
      ensure(s.d(j, j) >= 0, "negative singular value");
      if (j + 1 < cols) {
        ensure(s.d(j, j) >= s.d(j + 1, j + 1), "singular values not sorted");
      }
    }

    std::uniform_int_distribution<int> small(1, 5);
    int k = small(gen);
    Matrix sym = random_matrix(k, k);
    sym = ((sym + sym.transpose()) / 2.0).eval();
    EigenSymResult e = eigen_sym(sym);
    for (int j = 0; j < k; ++j) {
      Matrix resid = sym * e.vectors.col(j) - e.values(j) * e.vectors.col(j);
      ensure(resid.cwiseAbs().maxCoeff() <= 1e-8, "eigen residual too large");
    }
    ensure(std::abs(e.values.sum() - sym.trace()) <= 1e-8,
           "eigenvalue sum does not match the trace");

    Matrix spd_base = random_matrix(k, k);
    Matrix spd = spd_base.transpose() * spd_base + Matrix::Identity(k, k) * k;
    Matrix u = cholesky(spd);
    ensure(matrix_near(u.transpose() * u, spd,
                       1e-9 * std::max(1.0, spd.cwiseAbs().maxCoeff())),
           "Cholesky factor does not reproduce the matrix");

    std::uniform_int_distribution<int> tiny(1, 4);
    int dn = tiny(gen);
    Matrix d = random_matrix(dn, dn);
    double expected = cofactor(d);
    ensure(std::abs(determinant(d) - expected) <=
               1e-9 * std::max(1.0, std::abs(expected)),
           "determinant disagrees with the cofactor oracle");

    int rank_k = tiny(gen);
    std::uniform_int_distribution<int> dim(rank_k, 7);
    int rr = dim(gen), rc = dim(gen);
    Matrix low = Matrix::Zero(rr, rc);
    for (int t = 0; t < rank_k; ++t) {
      low += random_matrix(rr, 1) * random_matrix(1, rc);
    }
    ensure(rank(low) == rank_k, "rank of a constructed rank-k matrix is wrong");
  }
}

// --- criterion 6: the covariance workload ---

void criterion_covariance_workload() {
  Catalog cat;
  cat.register_table("u", load_csv(data_file("user.csv")));
  cat.register_table("f", load_csv(data_file("film.csv")));
  cat.register_table("rating", load_csv(data_file("rating.csv")));

  auto step = [&](const char* name, const std::string& sql) {
    Relation out = run_query(cat, sql);
    cat.register_table(name, std::move(out));
  };

  step("w1",
       "SELECT User, Balto, Heat, Net FROM u JOIN (SELECT User AS V, Balto, "
       "Heat, Net FROM rating) AS rr ON User = V WHERE State = 'CA';");
  step("w2",
       "SELECT AVG(Balto) AS AB, AVG(Heat) AS AH, AVG(Net) AS AN FROM w1;");
  step("w3",
       "SELECT User, Balto, Heat, Net FROM sub(w1 BY User, (SELECT * FROM "
       "(SELECT User AS V FROM w1) AS vv CROSS JOIN w2) AS dev BY V);");
  step("w4", "SELECT * FROM tra(w3 BY User);");
  step("w7",
       "SELECT C, Balto/(M-1) AS Balto, Heat/(M-1) AS Heat, Net/(M-1) AS Net "
       "FROM mmu(w4 BY C, w3 BY User) AS w5 CROSS JOIN (SELECT COUNT(*) AS M "
       "FROM w1) AS t;");
  Relation w8 = run_query(
      cat,
      "SELECT Title, Balto, Heat, Net FROM w7 JOIN f ON C = Title WHERE "
      "Director = 'Lee';");

  // Brute-force covariance of the California ratings straight from the
  // example data: Ann (2.0, 1.5, 0.5) and Jan (1.0, 4.0, 1.0).
  const double ca[2][3] = {{2.0, 1.5, 0.5}, {1.0, 4.0, 1.0}};
  const char* film[3] = {"Balto", "Heat", "Net"};
  double mean[3], cov[3][3];
  for (int j = 0; j < 3; ++j) mean[j] = (ca[0][j] + ca[1][j]) / 2.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double acc = 0;
      for (int k = 0; k < 2; ++k) {
        acc += (ca[k][i] - mean[i]) * (ca[k][j] - mean[j]);
      }
      cov[i][j] = acc / (2 - 1);
    }
  }

  const Relation& w7 = cat.require("w7");
  ensure(w7.row_count() == 3, "w7 must have one row per film");
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double got = float_cell(w7, film[j], "C", film[i]);
      ensure(std::abs(got - cov[i][j]) <= 1e-9,
             std::string("covariance cell (") + film[i] + ", " + film[j] +
                 ") deviates from the oracle");
    }
  }

  ensure(w8.row_count() == 2, "the final selection must return two rows");
  std::vector<std::string> titles = w8.column("Title").texts();
  std::sort(titles.begin(), titles.end());
  ensure(titles == std::vector<std::string>{"Balto", "Heat"},
         "the final selection must return exactly Lee's films");
  for (const std::string& t : {std::string("Balto"), std::string("Heat")}) {
    int i = t == "Balto" ? 0 : 1;
    for (int j = 0; j < 3; ++j) {
      double got = float_cell(w8, film[j], "Title", t);
      ensure(std::abs(got - cov[i][j]) <= 1e-9,
             "w8 covariance cells deviate from the oracle");
    }
  }
}

// --- criterion 7: sort avoidance ---

void criterion_sort_avoidance() {
  std::mt19937 gen(7070);
  const OpCode ops[] = {OpCode::qqr, OpCode::add, OpCode::sub, OpCode::emu};
  for (OpCode op : ops) {
    for (int trial = 0; trial < 100; ++trial) {
      RmaCall call = random_call(op, gen);
      Relation naive = apply_rma(call, SortPolicy::full);
      Relation optimized = apply_rma(call, SortPolicy::avoiding);
      if (op == OpCode::qqr) {
        // row order changes Householder rounding; match rows by key
        ensure(set_equal_keyed(naive, optimized, call.first.order_schema, 1e-9),
               "optimized qqr differs from the naive pipeline");
      } else {
        ensure(set_equal_exact(naive, optimized),
               std::string(opcode_name(op)) +
                   ": optimized and naive pipelines differ");
      }
    }
  }

  // 100k rows, 8 order attributes, 1 application column.
  const size_t n = 100000;
  std::vector<size_t> shuffle(n);
  for (size_t i = 0; i < n; ++i) shuffle[i] = i;
  std::shuffle(shuffle.begin(), shuffle.end(), gen);
  std::vector<std::pair<std::string, Column>> cols;
  {
    std::vector<int64_t> key(n);
    for (size_t i = 0; i < n; ++i) key[i] = static_cast<int64_t>(shuffle[i]);
    cols.emplace_back("k0", Column::of_ints(std::move(key)));
  }
  std::uniform_int_distribution<int64_t> small(0, 999);
  for (int c = 1; c < 8; ++c) {
    std::vector<int64_t> values(n);
    for (size_t i = 0; i < n; ++i) values[i] = small(gen);
    cols.emplace_back("k" + std::to_string(c), Column::of_ints(std::move(values)));
  }
  {
    std::uniform_real_distribution<double> value(0.0, 10000.0);
    std::vector<double> app(n);
    for (size_t i = 0; i < n; ++i) app[i] = value(gen);
    cols.emplace_back("x", Column::of_floats(std::move(app)));
  }
  RmaCall big;
  big.op = OpCode::qqr;
  big.first.relation = make_relation(std::move(cols));
  for (int c = 0; c < 8; ++c) {
    big.first.order_schema.push_back("k" + std::to_string(c));
  }

  uint64_t before = sort_operation_count();
  auto t0 = std::chrono::steady_clock::now();
  Relation optimized = apply_rma(big, SortPolicy::avoiding);
  double optimized_time = seconds_since(t0);
  uint64_t sorts = sort_operation_count() - before;
  ensure(sorts == 0, "optimized qqr performed " + std::to_string(sorts) +
                         " sort operations");
  ensure(optimized.row_count() == n, "unexpected result size");

  t0 = std::chrono::steady_clock::now();
  Relation naive = apply_rma(big, SortPolicy::full);
  double naive_time = seconds_since(t0);
  ensure(naive.row_count() == n, "unexpected naive result size");
  std::printf("      (100k-row qqr: %.3fs without sorting, %.3fs with)\n",
              optimized_time, naive_time);
}

// --- criterion 8: SQL conformance ---

void criterion_sql_conformance() {
  {
    Catalog cat;
    cat.register_table("rating", load_csv(data_file("rating.csv")));
    Query q = parse("SELECT * FROM inv(rating BY User);");
    plan(q, cat);
  }
  {
    Catalog cat;
    cat.register_table("r", make_relation({{"U", tcol({"a"})},
                                           {"p", fcol({1.0})},
                                           {"q", fcol({2.0})}}));
    cat.register_table("s", make_relation({{"V", tcol({"b"})},
                                           {"x", fcol({1.0})},
                                           {"y", fcol({2.0})}}));
    Query q = parse("SELECT * FROM mmu(r BY U, s BY V);");
    plan(q, cat);
  }
  {
    Catalog cat;
    cat.register_table("w1", make_relation({{"U", tcol({"a"})},
                                            {"B", fcol({1.0})},
                                            {"H", fcol({2.0})},
                                            {"N", fcol({3.0})}}));
    cat.register_table("w3", make_relation({{"U", tcol({"a"})},
                                            {"B", fcol({1.0})},
                                            {"H", fcol({2.0})},
                                            {"N", fcol({3.0})}}));
    cat.register_table("w4", make_relation({{"C", tcol({"B"})},
                                            {"Ann", fcol({1.0})},
                                            {"Jan", fcol({2.0})}}));
    Query q = parse(
        "SELECT C, B/(M-1), H/(M-1), N/(M-1)\n"
        "FROM mmu(w4 BY C, w3 BY U) AS w5\n"
        "     cross join\n"
        "     ( SELECT COUNT(*) AS M FROM w1 ) AS t;");
    plan(q, cat);
  }
  {
    Catalog cat = weather_catalog();
    Query q = parse("SELECT * FROM tra(r BY T, H);");
    try {
      plan(q, cat);
      throw Failure{"tra with two order attributes must be rejected"};
    } catch (const RmaError& e) {
      ensure(e.code() == errc::order_schema_cardinality,
             "wrong error for the tra cardinality rule");
      ensure(std::string(e.what()).find("must be one") != std::string::npos,
             "cardinality message does not state the rule");
    }
  }
}

// --- criterion 9: error paths ---

void criterion_error_paths() {
  auto expect_code = [](errc code, const std::function<void()>& fn,
                        const char* what) {
    try {
      fn();
    } catch (const RmaError& e) {
      ensure(e.code() == code, std::string(what) + ": wrong error code " +
                                   errc_name(e.code()));
      return;
    }
    throw Failure{std::string(what) + ": no error raised"};
  };

  auto unary = [](OpCode op, Relation r, std::vector<std::string> order,
                  std::string context = "C") {
    RmaCall call;
    call.op = op;
    call.first = {std::move(r), std::move(order)};
    call.context_name = std::move(context);
    return call;
  };

  Relation dup_key = make_relation(
      {{"k", icol({1, 1})}, {"x", fcol({1, 2})}, {"y", fcol({3, 4})}});
  expect_code(errc::key_violation,
              [&] { apply_rma(unary(OpCode::inv, dup_key, {"k"})); },
              "order-schema key violation");

  Relation text_app = make_relation(
      {{"k", icol({1, 2})}, {"x", tcol({"a", "b"})}, {"y", fcol({1, 2})}});
  expect_code(errc::non_numeric_application,
              [&] { apply_rma(unary(OpCode::qqr, text_app, {"k"})); },
              "non-numeric application column");

  Relation singular = make_relation(
      {{"k", icol({1, 2})}, {"x", fcol({1, 2})}, {"y", fcol({2, 4})}});
  expect_code(errc::singular_matrix,
              [&] { apply_rma(unary(OpCode::inv, singular, {"k"})); },
              "singular matrix for inv");
  {
    RmaCall sol = unary(OpCode::sol, singular, {"k"});
    sol.second = RmaInput{
        make_relation({{"j", icol({1, 2})}, {"b", fcol({1, 1})}}), {"j"}};
    expect_code(errc::singular_matrix, [&] { apply_rma(sol); },
                "singular matrix for sol");
  }

  Relation nonsym = make_relation(
      {{"k", icol({1, 2})}, {"x", fcol({1, 0})}, {"y", fcol({5, 1})}});
  expect_code(errc::not_symmetric,
              [&] { apply_rma(unary(OpCode::evc, nonsym, {"k"})); },
              "non-symmetric input for evc");
  expect_code(errc::not_symmetric,
              [&] { apply_rma(unary(OpCode::evl, nonsym, {"k"})); },
              "non-symmetric input for evl");

  Relation nspd = make_relation(
      {{"k", icol({1, 2})}, {"x", fcol({1, 2})}, {"y", fcol({2, 1})}});
  expect_code(errc::not_positive_definite,
              [&] { apply_rma(unary(OpCode::chf, nspd, {"k"})); },
              "non-SPD input for chf");

  expect_code(errc::name_collision,
              [&] { apply_rma(unary(OpCode::rqr, weather(), {"T"}, "H")); },
              "context-name collision");
}

struct Criterion {
  const char* name;
  std::function<void()> body;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"1. inversion example golden values", criterion_fig2_inversion},
      {"2. R-factor example golden values", criterion_fig9_rqr},
      {"3. transpose schema and round trip", criterion_transpose_round_trip},
      {"4. matrix consistency and origins, 19 ops x 200 instances",
       criterion_consistency_suite},
      {"5. kernel oracle suite", criterion_kernel_oracles},
      {"6. covariance workload end to end", criterion_covariance_workload},
      {"7. sort avoidance equivalence and zero-sort qqr",
       criterion_sort_avoidance},
      {"8. SQL conformance", criterion_sql_conformance},
      {"9. named error paths", criterion_error_paths},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    try {
      c.body();
      std::printf("PASS  %s (%.2fs)\n", c.name, seconds_since(start));
    } catch (const Failure& f) {
      std::printf("FAIL  %s: %s\n", c.name, f.message.c_str());
      ++failures;
    } catch (const std::exception& e) {
      std::printf("FAIL  %s: unexpected error: %s\n", c.name, e.what());
      ++failures;
    }
    std::fflush(stdout);
  }
  if (failures == 0) {
    std::printf("all %zu acceptance criteria passed\n", std::size(criteria));
  } else {
    std::printf("%d acceptance criteria failed\n", failures);
  }
  return failures;
}
