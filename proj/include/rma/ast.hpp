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

#include <memory>
#include <string>
#include <vector>

#include "rma/bridge.hpp"
#include "rma/scalar_expr.hpp"

namespace rma {

struct Query;

/// A FROM-clause item: base table, parenthesized subquery (alias mandatory),
/// or a relational matrix operation over nested from-items.
struct FromItem {
  enum class Kind { table, subquery, rma_call };

  struct RmaArg {
    std::unique_ptr<FromItem> item;
    std::vector<std::string> order_schema;  // the BY list
  };

  Kind kind = Kind::table;
  std::string table_name;                // table
  std::shared_ptr<Query> subquery;       // subquery
  OpCode op = OpCode::inv;               // rma_call
  std::vector<RmaArg> args;              // rma_call
  std::string context_name;              // rma_call; empty means default "C"
  std::string alias;                     // empty means none
  SourcePos pos;

  bool equals(const FromItem& other) const;
};

struct JoinClause {
  enum class Kind { comma, cross, inner };
  Kind kind = Kind::comma;
  FromItem item;
  ExprPtr on;  // inner joins only

  bool equals(const JoinClause& other) const;
};

struct SelectItem {
  ExprPtr expr;
  std::string alias;  // empty means derived from the expression

  bool equals(const SelectItem& other) const;
};

struct Query {
  bool select_star = false;
  std::vector<SelectItem> select;
  FromItem from;
  std::vector<JoinClause> joins;
  ExprPtr where;                        // may be null
  std::vector<std::string> group_by;
  std::vector<std::string> order_by;
  SourcePos pos;

  bool equals(const Query& other) const;
};

/// Canonical SQL text for an AST; parse(render(q)) == q.
std::string render(const Query& query);

}  // namespace rma
