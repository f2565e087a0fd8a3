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

#include "support/test_support.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rma::test {

Column fcol(std::initializer_list<double> values) {
  return Column::of_floats(values);
}
Column icol(std::initializer_list<int64_t> values) {
  return Column::of_ints(values);
}
Column tcol(std::initializer_list<std::string> values) {
  return Column::of_texts(values);
}

Relation make_relation(
    std::vector<std::pair<std::string, Column>> named_columns,
    std::optional<std::string> name) {
  std::vector<Attribute> attrs;
  std::vector<Column> cols;
  for (auto& [n, c] : named_columns) {
    attrs.push_back({n, c.kind()});
    cols.push_back(std::move(c));
  }
  return Relation(Schema(std::move(attrs)), std::move(cols), std::move(name));
}

Relation weather() {
  return make_relation({{"T", tcol({"5am", "8am", "7am", "6am"})},
                        {"H", fcol({1, 8, 6, 1})},
                        {"W", fcol({3, 5, 7, 4})}},
                       "r");
}

Relation weather_after_6am() {
  return make_relation({{"T", tcol({"8am", "7am"})},
                        {"H", fcol({8, 6})},
                        {"W", fcol({5, 7})}},
                       "r2");
}

Relation users() {
  return make_relation({{"User", tcol({"Ann", "Tom", "Jan"})},
                        {"State", tcol({"CA", "FL", "CA"})},
                        {"YoB", icol({1980, 1965, 1970})}},
                       "u");
}

Relation films() {
  return make_relation({{"Title", tcol({"Heat", "Balto", "Net"})},
                        {"RelY", icol({1995, 1995, 1995})},
                        {"Director", tcol({"Lee", "Lee", "Smith"})}},
                       "f");
}

Relation ratings() {
  return make_relation({{"User", tcol({"Ann", "Tom", "Jan"})},
                        {"Balto", fcol({2.0, 0.0, 1.0})},
                        {"Heat", fcol({1.5, 0.0, 4.0})},
                        {"Net", fcol({0.5, 1.5, 1.0})}},
                       "rating");
}

Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(rows.size(), rows.begin()->size());
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

bool matrix_near(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

namespace {

std::string key_of(const Relation& r, const std::vector<size_t>& key_idx,
                   size_t row) {
  std::string out;
  for (size_t c : key_idx) {
    out += r.column(c).render(row);
    out += '\x1f';
  }
  return out;
}

}  // namespace

bool set_equal_keyed(const Relation& a, const Relation& b,
                     const std::vector<std::string>& key, double tol) {
  if (a.schema() != b.schema() || a.row_count() != b.row_count()) return false;
  std::vector<size_t> key_idx;
  for (const std::string& k : key) key_idx.push_back(a.schema().require(k));

  std::map<std::string, size_t> b_rows;
  for (size_t i = 0; i < b.row_count(); ++i) {
    if (!b_rows.emplace(key_of(b, key_idx, i), i).second) return false;
  }
  for (size_t i = 0; i < a.row_count(); ++i) {
    auto it = b_rows.find(key_of(a, key_idx, i));
    if (it == b_rows.end()) return false;
    size_t j = it->second;
    for (size_t c = 0; c < a.column_count(); ++c) {
      const Column& ca = a.column(c);
      const Column& cb = b.column(c);
      if (ca.kind() == Kind::float64) {
        if (std::abs(ca.floats()[i] - cb.floats()[j]) > tol) return false;
      } else if (!Column::values_equal(ca, i, cb, j)) {
        return false;
      }
    }
  }
  return true;
}

bool set_equal_exact(const Relation& a, const Relation& b) {
  return a.bag_equal(b);
}

namespace {

struct InputSpec {
  int rows = 0;
  int app_cols = 0;
  int order_attrs = 1;
  bool text_key = false;
  std::string key_prefix;   // order attribute name prefix
  std::string app_prefix;   // application attribute name prefix
  std::string rel_name;
  // Transform applied to the random application matrix in sorted-key order.
  enum class Shape { plain, symmetric, spd, nonsingular } shape = Shape::plain;
};

RmaInput gen_input(const InputSpec& spec, std::mt19937& gen) {
  std::uniform_real_distribution<double> value(-10.0, 10.0);
  const int n = spec.rows, c = spec.app_cols;

  Matrix app(n, c);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < c; ++j) app(i, j) = value(gen);
  }
  switch (spec.shape) {
    case InputSpec::Shape::symmetric:
      app = ((app + app.transpose()) / 2.0).eval();
      break;
    case InputSpec::Shape::spd:
      app = (app.transpose() * app + Matrix::Identity(n, n) * n).eval();
      break;
    case InputSpec::Shape::nonsingular:
      for (int i = 0; i < n; ++i) app(i, i) += (app(i, i) < 0 ? -25.0 : 25.0);
      break;
    case InputSpec::Shape::plain: break;
  }

  // Keys ascending in sorted order, then rows shuffled jointly.
  std::vector<size_t> shuffle(n);
  std::iota(shuffle.begin(), shuffle.end(), size_t{0});
  std::shuffle(shuffle.begin(), shuffle.end(), gen);

  std::vector<Attribute> attrs;
  std::vector<Column> cols;
  for (int k = 0; k < spec.order_attrs; ++k) {
    std::string name = spec.key_prefix + std::to_string(k);
    if (k == 0 && spec.text_key) {
      std::vector<std::string> values(n);
      for (int i = 0; i < n; ++i) {
        values[static_cast<size_t>(i)] =
            std::string(1, static_cast<char>('a' + shuffle[i]));
      }
      attrs.push_back({name, Kind::text});
      cols.push_back(Column::of_texts(std::move(values)));
    } else if (k == 0) {
      std::vector<int64_t> values(n);
      for (int i = 0; i < n; ++i) {
        values[static_cast<size_t>(i)] = 10 * (1 + static_cast<int64_t>(shuffle[i]));
      }
      attrs.push_back({name, Kind::int64});
      cols.push_back(Column::of_ints(std::move(values)));
    } else {
      // Secondary order attribute; the first one already is a key.
      std::vector<int64_t> values(n);
      std::uniform_int_distribution<int64_t> small(0, 3);
      for (int i = 0; i < n; ++i) values[static_cast<size_t>(i)] = small(gen);
      attrs.push_back({name, Kind::int64});
      cols.push_back(Column::of_ints(std::move(values)));
    }
  }
  for (int j = 0; j < c; ++j) {
    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) {
      values[static_cast<size_t>(i)] = app(static_cast<Eigen::Index>(shuffle[i]), j);
    }
    attrs.push_back({spec.app_prefix + std::to_string(j), Kind::float64});
    cols.push_back(Column::of_floats(std::move(values)));
  }

  RmaInput input;
  input.relation =
      Relation(Schema(std::move(attrs)), std::move(cols), spec.rel_name);
  for (int k = 0; k < spec.order_attrs; ++k) {
    input.order_schema.push_back(spec.key_prefix + std::to_string(k));
  }
  return input;
}

}  // namespace

Matrix expected_base_result(const RmaCall& call) {
  using namespace kernels;
  Matrix a = reduce(call.first.relation, call.first.order_schema);
  Matrix b;
  if (call.second) {
    b = reduce(call.second->relation, call.second->order_schema);
  }
  switch (call.op) {
    case OpCode::add: return elementwise(ElementwiseOp::add, a, b);
    case OpCode::sub: return elementwise(ElementwiseOp::sub, a, b);
    case OpCode::emu: return elementwise(ElementwiseOp::mul, a, b);
    case OpCode::mmu: return product(ProductOp::matrix, a, b);
    case OpCode::cpd: return product(ProductOp::cross, a, b);
    case OpCode::opd: return product(ProductOp::outer, a, b);
    case OpCode::sol: return solve(a, b);
    case OpCode::tra: return kernels::transpose(a);
    case OpCode::inv: return gauss_jordan_inverse(a);
    case OpCode::evc: return eigen_sym(a).vectors;
    case OpCode::evl: return eigen_sym(a).values;
    case OpCode::qqr: return qr(a).q;
    case OpCode::rqr: return qr(a).r;
    case OpCode::dsv: return svd(a).d;
    case OpCode::usv: return svd(a).u;
    case OpCode::vsv: return svd(a).v;
    case OpCode::chf: return cholesky(a);
    case OpCode::det: {
      Matrix f(1, 1);
      f(0, 0) = determinant(a);
      return f;
    }
    case OpCode::rnk: {
      Matrix f(1, 1);
      f(0, 0) = static_cast<double>(rank(a));
      return f;
    }
  }
  throw RmaError(errc::bad_argument, "unknown op");
}

std::string check_call_consistency(const RmaCall& call, SortPolicy policy,
                                   double tol) {
  const std::string op(opcode_name(call.op));
  Relation result = apply_rma(call, policy);
  Matrix expected = expected_base_result(call);

  std::vector<std::string> context = result_context_attrs(call);
  Matrix reduced = reduce(result, context);
  if (reduced.rows() != expected.rows() || reduced.cols() != expected.cols()) {
    return op + ": reduced result is " + std::to_string(reduced.rows()) + "x" +
           std::to_string(reduced.cols()) + ", base result is " +
           std::to_string(expected.rows()) + "x" +
           std::to_string(expected.cols());
  }
  double diff = (reduced - expected).cwiseAbs().maxCoeff();
  if (!(diff <= tol)) {
    return op + ": reduced result differs from the base result by " +
           std::to_string(diff);
  }

  Origins origins = origins_of(call);
  Relation row_proj = project_columns(result, context);
  // Compare as sets; the declared origin carries the same attribute values
  // under the argument relations' schemas.
  std::vector<Attribute> renamed = origins.row_origin.schema().attrs();
  for (size_t i = 0; i < renamed.size(); ++i) renamed[i].name = context[i];
  Relation row_origin(Schema(renamed), origins.row_origin.columns());
  if (!set_equal_exact(row_proj, row_origin)) {
    return op + ": result row context does not match the declared row origin";
  }

  std::vector<std::string> app_names;
  for (size_t i = context.size(); i < result.schema().size(); ++i) {
    app_names.push_back(result.schema().at(i).name);
  }
  if (app_names != origins.column_origin) {
    return op + ": application attribute names do not match the column origin";
  }
  return {};
}

RmaCall random_call(OpCode op, std::mt19937& gen, int max_rows, int max_cols) {
  std::uniform_int_distribution<int> rows_dist(1, max_rows);
  std::uniform_int_distribution<int> cols_dist(1, max_cols);
  std::uniform_int_distribution<int> coin(0, 1);

  RmaCall call;
  call.op = op;

  InputSpec first;
  first.key_prefix = "k";
  first.app_prefix = "m";
  first.rel_name = "r";
  first.text_key = coin(gen) == 1;
  first.order_attrs = 1;

  InputSpec second;
  second.key_prefix = "j";
  second.app_prefix = "w";
  second.rel_name = "s";
  second.text_key = coin(gen) == 1;
  second.order_attrs = 1;

  switch (op) {
    case OpCode::inv: {
      int c = cols_dist(gen);
      first.rows = c;
      first.app_cols = c;
      first.shape = InputSpec::Shape::nonsingular;
      break;
    }
    case OpCode::det:
    case OpCode::evc:
    case OpCode::evl: {
      int c = cols_dist(gen);
      first.rows = c;
      first.app_cols = c;
      if (op != OpCode::det) first.shape = InputSpec::Shape::symmetric;
      break;
    }
    case OpCode::chf: {
      int c = cols_dist(gen);
      first.rows = c;
      first.app_cols = c;
      first.shape = InputSpec::Shape::spd;
      break;
    }
    case OpCode::qqr:
    case OpCode::rqr:
    case OpCode::dsv:
    case OpCode::usv:
    case OpCode::vsv:
    case OpCode::rnk:
    case OpCode::tra: {
      first.app_cols = cols_dist(gen);
      if (op == OpCode::rnk || op == OpCode::tra) {
        first.rows = rows_dist(gen);
      } else {
        // rows >= cols; max_cols never exceeds max_rows in our suites
        std::uniform_int_distribution<int> tall(first.app_cols, max_rows);
        first.rows = tall(gen);
      }
      break;
    }
    case OpCode::sol: {
      int c = cols_dist(gen);
      first.rows = c;
      first.app_cols = c;
      first.shape = InputSpec::Shape::nonsingular;
      second.rows = c;
      second.app_cols = 1;
      break;
    }
    case OpCode::mmu: {
      first.rows = rows_dist(gen);
      first.app_cols = cols_dist(gen);
      second.rows = first.app_cols;  // inner dimensions match
      second.app_cols = cols_dist(gen);
      first.order_attrs = 1 + coin(gen);
      break;
    }
    case OpCode::cpd: {
      int n = rows_dist(gen);
      first.rows = n;
      second.rows = n;
      first.app_cols = cols_dist(gen);
      second.app_cols = cols_dist(gen);
      first.order_attrs = 1 + coin(gen);
      second.order_attrs = 1 + coin(gen);
      break;
    }
    case OpCode::opd: {
      int c = cols_dist(gen);
      first.rows = rows_dist(gen);
      second.rows = rows_dist(gen);
      first.app_cols = c;
      second.app_cols = c;
      break;
    }
    case OpCode::add:
    case OpCode::sub:
    case OpCode::emu: {
      int n = rows_dist(gen);
      int c = cols_dist(gen);
      first.rows = n;
      second.rows = n;
      first.app_cols = c;
      second.app_cols = c;
      first.order_attrs = 1 + coin(gen);
      break;
    }
  }

  if (op == OpCode::tra || op == OpCode::usv) first.order_attrs = 1;
  if (op == OpCode::opd) second.order_attrs = 1;

  call.first = gen_input(first, gen);
  if (opcode_is_binary(op)) {
    call.second = gen_input(second, gen);
  }
  return call;
}

}  // namespace rma::test
