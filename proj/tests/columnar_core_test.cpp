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
#include <cmath>
#include <limits>
#include <random>

#include "rma/sort.hpp"
#include "support/test_support.hpp"

using namespace rma;
using namespace rma::test;

TEST_CASE("sort permutation orders the filtered weather rows by time") {
  Relation r = weather_after_6am();  // rows (8am,8,5), (7am,6,7)
  SortPermutation p = sort_permutation(r, std::vector<std::string>{"T"});
  REQUIRE(p.indices() == std::vector<size_t>{1, 0});
}

TEST_CASE("sorting an already sorted unique column is the identity") {
  Relation r = make_relation({{"a", icol({1, 2, 3, 7})}, {"b", fcol({0, 0, 0, 0})}});
  SortPermutation p = sort_permutation(r, std::vector<std::string>{"a"});
  REQUIRE(p.indices() == std::vector<size_t>{0, 1, 2, 3});
}

TEST_CASE("text sort is bytewise ascending") {
  Relation r = make_relation({{"T", tcol({"5am", "8am", "7am", "6am"})}});
  SortPermutation p = sort_permutation(r, std::vector<std::string>{"T"});
  REQUIRE(p.indices() == std::vector<size_t>{0, 3, 2, 1});
}

TEST_CASE("sort is stable on ties") {
  Relation r = make_relation(
      {{"a", icol({2, 1, 2, 1})}, {"b", icol({0, 1, 2, 3})}});
  SortPermutation p = sort_permutation(r, std::vector<std::string>{"a"});
  REQUIRE(p.indices() == std::vector<size_t>{1, 3, 0, 2});
}

TEST_CASE("sort by unknown attribute fails") {
  Relation r = weather();
  REQUIRE_THROWS_MATCHES(
      sort_permutation(r, std::vector<std::string>{"nope"}), RmaError,
      Catch::Matchers::Predicate<RmaError>(
          [](const RmaError& e) { return e.code() == errc::unknown_attribute; }));
}

TEST_CASE("apply_permutation gathers by position") {
  Column h = fcol({8, 6});
  Column out = apply_permutation(h, SortPermutation({1, 0}));
  REQUIRE(out.floats() == std::vector<double>{6, 8});

  Column w = fcol({3, 5, 7, 4});
  Column out2 = apply_permutation(w, SortPermutation({0, 3, 2, 1}));
  REQUIRE(out2.floats() == std::vector<double>{3, 4, 7, 5});
}

TEST_CASE("apply_permutation with identity keeps the column") {
  Column t = tcol({"x", "y", "z"});
  Column out = apply_permutation(t, SortPermutation::identity(3));
  REQUIRE(out.texts() == t.texts());
}

TEST_CASE("apply_permutation rejects length mismatch") {
  REQUIRE_THROWS_AS(apply_permutation(fcol({1, 2, 3}), SortPermutation({0, 1})),
                    RmaError);
}

TEST_CASE("permutation validation rejects non-bijections") {
  REQUIRE_THROWS_AS(SortPermutation({0, 0, 1}), RmaError);
  REQUIRE_THROWS_AS(SortPermutation({0, 3}), RmaError);
}

TEST_CASE("sorted order attributes come out ascending (property)") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> rows_dist(1, 20);
  std::uniform_int_distribution<int64_t> value(-50, 50);
  for (int trial = 0; trial < 50; ++trial) {
    int n = rows_dist(gen);
    std::vector<int64_t> a(n), b(n);
    for (auto& v : a) v = value(gen);
    for (auto& v : b) v = value(gen);
    Relation r = make_relation(
        {{"a", Column::of_ints(std::move(a))}, {"b", Column::of_ints(std::move(b))}});
    std::vector<std::string> order{"a", "b"};
    SortPermutation p = sort_permutation(r, order);

    // bijection
    std::vector<size_t> sorted_idx = p.indices();
    std::sort(sorted_idx.begin(), sorted_idx.end());
    for (size_t k = 0; k < sorted_idx.size(); ++k) REQUIRE(sorted_idx[k] == k);

    Column sa = apply_permutation(r.column("a"), p);
    Column sb = apply_permutation(r.column("b"), p);
    for (size_t k = 1; k < sa.size(); ++k) {
      bool ascending =
          sa.ints()[k - 1] < sa.ints()[k] ||
          (sa.ints()[k - 1] == sa.ints()[k] && sb.ints()[k - 1] <= sb.ints()[k]);
      REQUIRE(ascending);
    }
  }
}

TEST_CASE("project_columns keeps selected columns and order") {
  Relation r = weather();
  Relation t = project_columns(r, std::vector<std::string>{"T"});
  REQUIRE(t.schema().names() == std::vector<std::string>{"T"});
  REQUIRE(t.row_count() == 4);

  Relation hw = project_columns(r, std::vector<std::string>{"H", "W"});
  REQUIRE(hw.schema().names() == std::vector<std::string>{"H", "W"});

  Relation none = project_columns(r, std::vector<std::string>{});
  REQUIRE(none.column_count() == 0);
  REQUIRE(none.row_count() == 4);
}

TEST_CASE("projection and complement reassemble the original relation") {
  Relation r = weather();
  Relation left = project_columns(r, std::vector<std::string>{"T", "W"});
  Relation right = project_columns(r, std::vector<std::string>{"H"});
  std::vector<Attribute> attrs = left.schema().attrs();
  std::vector<Column> cols = left.columns();
  attrs.push_back(right.schema().at(0));
  cols.push_back(right.column(0));
  Relation glued(Schema(attrs), cols, "r");
  Relation reordered = project_columns(glued, std::vector<std::string>{"T", "H", "W"});
  REQUIRE(set_equal_exact(reordered, weather().with_name(std::nullopt)));
}

TEST_CASE("project_columns rejects duplicates and unknown names") {
  Relation r = weather();
  REQUIRE_THROWS_AS(project_columns(r, std::vector<std::string>{"T", "T"}),
                    RmaError);
  REQUIRE_THROWS_AS(project_columns(r, std::vector<std::string>{"Q"}), RmaError);
}

TEST_CASE("schema rejects duplicate and empty names") {
  REQUIRE_THROWS_AS(Schema({{"a", Kind::int64}, {"a", Kind::text}}), RmaError);
  REQUIRE_THROWS_AS(Schema({{"", Kind::int64}}), RmaError);
}

TEST_CASE("relation checks column arity, kinds, and lengths") {
  REQUIRE_THROWS_AS(Relation(Schema({{"a", Kind::int64}}), {}), RmaError);
  REQUIRE_THROWS_AS(
      Relation(Schema({{"a", Kind::int64}}), {fcol({1.0})}), RmaError);
  REQUIRE_THROWS_AS(Relation(Schema({{"a", Kind::int64}, {"b", Kind::int64}}),
                             {icol({1, 2}), icol({1})}),
                    RmaError);
}

TEST_CASE("float columns reject non-finite values") {
  REQUIRE_THROWS_AS(Column::of_floats({1.0, std::nan("")}), RmaError);
  REQUIRE_THROWS_AS(
      Column::of_floats({std::numeric_limits<double>::infinity()}), RmaError);
}

TEST_CASE("cross-kind comparison is refused") {
  Column a = icol({1});
  Column b = fcol({1.0});
  REQUIRE_THROWS_AS(Column::compare(a, 0, b, 0), RmaError);
}
