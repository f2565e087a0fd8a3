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

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rma/error.hpp"
#include "rma/relation.hpp"

namespace rma {

enum class BinOp {
  add, sub, mul, div,
  eq, ne, lt, le, gt, ge,
  logic_and, logic_or,
};

enum class UnOp { negate, logic_not };

const char* binop_symbol(BinOp op);

struct ScalarExpr;
using ExprPtr = std::shared_ptr<const ScalarExpr>;

/// Aggregate functions appear only inside SELECT lists; the planner lowers
/// them into aggregate nodes before any expression is evaluated.
enum class AggFn { count_star, count, sum, avg, min, max };

const char* agg_fn_name(AggFn fn);

/// Expression tree over column references, literals, arithmetic, comparisons
/// and boolean connectives. Nodes are immutable and shared.
struct ScalarExpr {
  enum class Node {
    column_ref,
    float_literal,
    int_literal,
    text_literal,
    binary,
    unary,
    aggregate,
  };

  Node node;
  std::string name;       // column_ref
  double float_value = 0;
  int64_t int_value = 0;
  std::string text_value;
  BinOp bin_op = BinOp::add;
  UnOp un_op = UnOp::negate;
  ExprPtr left, right;
  AggFn agg_fn = AggFn::count_star;  // aggregate; `left` is the argument
  SourcePos pos;

  static ExprPtr column(std::string name, SourcePos pos = {});
  static ExprPtr literal(double v, SourcePos pos = {});
  static ExprPtr literal(int64_t v, SourcePos pos = {});
  static ExprPtr literal(std::string v, SourcePos pos = {});
  static ExprPtr binary(BinOp op, ExprPtr l, ExprPtr r, SourcePos pos = {});
  static ExprPtr unary(UnOp op, ExprPtr operand, SourcePos pos = {});
  static ExprPtr aggregate(AggFn fn, ExprPtr arg, SourcePos pos = {});

  bool equals(const ScalarExpr& other) const;
  bool contains_aggregate() const;
  std::string to_string() const;
};

/// Evaluation result type. `boolean` exists only inside expressions; columns
/// never hold booleans.
enum class ValueType { float64, int64, text, boolean };

const char* value_type_name(ValueType t);
ValueType value_type_of(Kind kind);

/// Type-checks `expr` against `schema`; throws type_error or
/// unknown_attribute. Aggregate nodes are rejected here.
ValueType infer_type(const ScalarExpr& expr, const Schema& schema);

/// Column-at-a-time evaluation producing one value per row of `r`.
/// The expression must not be boolean-typed.
Column eval_to_column(const ScalarExpr& expr, const Relation& r);

/// Evaluates a boolean-typed expression to a row mask.
std::vector<char> eval_predicate(const ScalarExpr& expr, const Relation& r);

}  // namespace rma
