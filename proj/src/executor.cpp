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

#include "rma/planner.hpp"

#include "rma/parser.hpp"
#include "rma/sort.hpp"

namespace rma {

namespace {

Relation execute_node(const PlanNode& node, const Catalog& catalog) {
  try {
    switch (node.op) {
      case PlanNode::Op::scan: {
        Relation rel = catalog.require(node.table);
        return rel.with_name(node.rel_name);
      }
      case PlanNode::Op::filter:
        return select(execute_node(*node.children[0], catalog), node.predicate)
            .with_name(node.rel_name);
      case PlanNode::Op::project:
        return project(execute_node(*node.children[0], catalog),
                       node.projections)
            .with_name(node.rel_name);
      case PlanNode::Op::cross_product:
        return cross(execute_node(*node.children[0], catalog),
                     execute_node(*node.children[1], catalog))
            .with_name(node.rel_name);
      case PlanNode::Op::join_inner:
        return join(execute_node(*node.children[0], catalog),
                    execute_node(*node.children[1], catalog), node.predicate)
            .with_name(node.rel_name);
      case PlanNode::Op::grouped_aggregate:
        return aggregate(execute_node(*node.children[0], catalog),
                         node.group_by, node.aggs)
            .with_name(node.rel_name);
      case PlanNode::Op::rma_apply: {
        RmaCall call;
        call.op = node.rma_op;
        call.context_name = node.context_name;
        call.first = RmaInput{execute_node(*node.children[0], catalog),
                              node.order_schemas[0]};
        if (node.children.size() > 1) {
          call.second = RmaInput{execute_node(*node.children[1], catalog),
                                 node.order_schemas[1]};
        }
        return apply_rma(call, node.sort_policy).with_name(node.rel_name);
      }
      case PlanNode::Op::sort_rows: {
        Relation rel = execute_node(*node.children[0], catalog);
        SortPermutation perm = sort_permutation(rel, node.sort_attrs);
        std::vector<Column> cols;
        cols.reserve(rel.column_count());
        for (const Column& c : rel.columns()) {
          cols.push_back(apply_permutation(c, perm));
        }
        return Relation(rel.schema(), std::move(cols), rel.row_count(),
                        node.rel_name);
      }
    }
    throw RmaError(errc::bad_argument, "unknown plan node");
  } catch (const RmaError& e) {
    throw e.at(node.pos);
  }
}

}  // namespace

Relation execute(const PlanNode& node, const Catalog& catalog) {
  return execute_node(node, catalog);
}

Relation run_query(const Catalog& catalog, std::string_view sql) {
  Query q = parse(sql);
  std::unique_ptr<PlanNode> p = plan(q, catalog);
  return execute(*p, catalog);
}

}  // namespace rma
