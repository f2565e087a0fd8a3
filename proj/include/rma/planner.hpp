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
#include <optional>
#include <string>
#include <vector>

#include "rma/algebra.hpp"
#include "rma/ast.hpp"
#include "rma/catalog.hpp"

namespace rma {

/// Statically predicted output schema of a plan node. Operations whose
/// attribute names come from attribute *values* (tra, usv, opd) contribute
/// columns that cannot be named before execution; such nodes carry the known
/// prefix plus a deferred tail marker.
struct PlannedSchema {
  std::vector<Attribute> attrs;
  bool deferred_tail = false;

  bool contains(std::string_view name) const;
};

struct PlanNode {
  enum class Op {
    scan,
    filter,
    project,
    cross_product,
    join_inner,
    grouped_aggregate,
    rma_apply,
    sort_rows,
  };

  Op op;
  PlannedSchema schema;
  std::vector<std::unique_ptr<PlanNode>> children;
  std::optional<std::string> rel_name;  // alias carried to the result

  std::string table;                                       // scan
  ExprPtr predicate;                                       // filter, join_inner
  std::vector<std::pair<ExprPtr, std::string>> projections;  // project
  std::vector<std::string> group_by;                       // grouped_aggregate
  std::vector<AggSpec> aggs;                               // grouped_aggregate
  OpCode rma_op = OpCode::inv;                             // rma_apply
  std::vector<std::vector<std::string>> order_schemas;     // rma_apply
  std::string context_name;                                // rma_apply
  SortPolicy sort_policy = SortPolicy::full;               // rma_apply
  std::vector<std::string> sort_attrs;                     // sort_rows
  SourcePos pos;
};

/// Lowers a parsed query to an algebra tree with resolved schemas. Static
/// violations (unknown tables/columns, RMA cardinality rules, unnamed det/rnk
/// arguments, context-name collisions) are rejected here.
std::unique_ptr<PlanNode> plan(const Query& query, const Catalog& catalog);

/// Bottom-up evaluation of a plan.
Relation execute(const PlanNode& node, const Catalog& catalog);

/// parse + plan + execute in one step.
Relation run_query(const Catalog& catalog, std::string_view sql);

}  // namespace rma
