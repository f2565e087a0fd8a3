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

#include <algorithm>
#include <unordered_set>

namespace rma {

bool PlannedSchema::contains(std::string_view name) const {
  return std::any_of(attrs.begin(), attrs.end(),
                     [&](const Attribute& a) { return a.name == name; });
}

namespace {

Schema to_schema(const PlannedSchema& planned) {
  return Schema(planned.attrs);
}

/// Type-checks an expression when the schema is fully known. Against a
/// deferred schema, unresolved names are assumed to be generated float64
/// columns and the check is repeated at execution time.
std::optional<ValueType> static_type(const ScalarExpr& expr,
                                     const PlannedSchema& schema) {
  try {
    return infer_type(expr, to_schema(schema));
  } catch (const RmaError& e) {
    if (schema.deferred_tail && e.code() == errc::unknown_attribute) {
      return std::nullopt;
    }
    if (e.code() == errc::unknown_attribute) {
      throw RmaError(errc::unknown_column, e.what(),
                     e.has_pos() ? e.pos() : expr.pos);
    }
    throw;
  }
}

struct Planner {
  const Catalog& catalog;

  std::unique_ptr<PlanNode> plan_from_item(const FromItem& item) {
    switch (item.kind) {
      case FromItem::Kind::table: {
        const Relation* rel = catalog.find(item.table_name);
        if (!rel) {
          throw RmaError(errc::unknown_table,
                         "unknown table '" + item.table_name + "'", item.pos);
        }
        auto node = std::make_unique<PlanNode>();
        node->op = PlanNode::Op::scan;
        node->table = item.table_name;
        node->schema.attrs = rel->schema().attrs();
        node->rel_name = item.alias.empty() ? item.table_name : item.alias;
        node->pos = item.pos;
        return node;
      }
      case FromItem::Kind::subquery: {
        auto node = plan_query(*item.subquery);
        node->rel_name = item.alias;  // parser guarantees non-empty
        return node;
      }
      case FromItem::Kind::rma_call: return plan_rma(item);
    }
    throw RmaError(errc::bad_argument, "unknown FROM item");
  }

  std::unique_ptr<PlanNode> plan_rma(const FromItem& item) {
    const OpCode op = item.op;
    const size_t expected = opcode_is_binary(op) ? 2 : 1;
    if (item.args.size() != expected) {
      throw RmaError(errc::bad_argument,
                     std::string(opcode_name(op)) + " takes " +
                         (expected == 1 ? "one argument relation"
                                        : "two argument relations"),
                     item.pos);
    }

    auto node = std::make_unique<PlanNode>();
    node->op = PlanNode::Op::rma_apply;
    node->rma_op = op;
    node->context_name = item.context_name.empty() ? "C" : item.context_name;
    node->pos = item.pos;
    node->rel_name =
        item.alias.empty() ? std::nullopt : std::optional(item.alias);
    const bool avoidable = op == OpCode::qqr || op == OpCode::add ||
                           op == OpCode::sub || op == OpCode::emu;
    node->sort_policy = avoidable ? SortPolicy::avoiding : SortPolicy::full;

    for (const FromItem::RmaArg& arg : item.args) {
      node->children.push_back(plan_from_item(*arg.item));
      node->order_schemas.push_back(arg.order_schema);
    }

    // Static RMA checks; anything value-dependent waits for execution.
    if ((op == OpCode::tra || op == OpCode::usv) &&
        node->order_schemas[0].size() != 1) {
      throw RmaError(errc::order_schema_cardinality,
                     std::string("the cardinality of the order schema of ") +
                         std::string(opcode_name(op)) + " must be one",
                     item.pos);
    }
    if (op == OpCode::opd && node->order_schemas[1].size() != 1) {
      throw RmaError(errc::order_schema_cardinality,
                     "the cardinality of the order schema of the second "
                     "argument of opd must be one",
                     item.pos);
    }
    if (op == OpCode::det || op == OpCode::rnk) {
      if (!node->children[0]->rel_name) {
        throw RmaError(errc::unnamed_relation,
                       std::string(opcode_name(op)) +
                           " needs a named argument relation (add an alias)",
                       item.pos);
      }
    }

    // Validate order schemas and compute application schemas where static.
    std::vector<std::optional<std::vector<Attribute>>> app_attrs;
    for (size_t i = 0; i < node->children.size(); ++i) {
      const PlannedSchema& child = node->children[i]->schema;
      std::unordered_set<std::string_view> in_order;
      bool all_known = !child.deferred_tail;
      for (const std::string& name : node->order_schemas[i]) {
        if (!in_order.insert(name).second) {
          throw RmaError(errc::duplicate_attribute,
                         "attribute '" + name +
                             "' listed twice in order schema",
                         item.pos);
        }
        if (!child.contains(name)) {
          if (!child.deferred_tail) {
            throw RmaError(errc::unknown_column,
                           "unknown order attribute '" + name + "'", item.pos);
          }
        }
      }
      if (all_known) {
        std::vector<Attribute> app;
        for (const Attribute& a : child.attrs) {
          if (!in_order.count(a.name)) {
            if (!is_numeric(a.kind)) {
              throw RmaError(errc::non_numeric_application,
                             "application attribute '" + a.name +
                                 "' is not numeric",
                             item.pos);
            }
            app.push_back(a);
          }
        }
        if (app.empty()) {
          throw RmaError(errc::empty_application_schema,
                         "application schema must not be empty", item.pos);
        }
        app_attrs.push_back(std::move(app));
      } else {
        app_attrs.push_back(std::nullopt);
      }
    }

    if ((op == OpCode::add || op == OpCode::sub || op == OpCode::emu)) {
      for (const std::string& name : node->order_schemas[0]) {
        const auto& v = node->order_schemas[1];
        if (std::find(v.begin(), v.end(), name) != v.end()) {
          throw RmaError(errc::order_schemas_overlap,
                         "order schemas of element-wise operations must be "
                         "name-disjoint; '" + name + "' appears in both",
                         item.pos);
        }
      }
      if (app_attrs[0] && app_attrs[1] &&
          app_attrs[0]->size() != app_attrs[1]->size()) {
        throw RmaError(errc::union_incompatible,
                       "application schemas are not union compatible: " +
                           std::to_string(app_attrs[0]->size()) + " vs " +
                           std::to_string(app_attrs[1]->size()) +
                           " attributes",
                       item.pos);
      }
    }

    node->schema = predict_rma_schema(*node, app_attrs, item.pos);
    return node;
  }

  PlannedSchema predict_rma_schema(
      const PlanNode& node,
      const std::vector<std::optional<std::vector<Attribute>>>& app_attrs,
      SourcePos pos) {
    const ShapeType shape = shape_type_of(node.rma_op);
    PlannedSchema out;

    auto push_order_attrs = [&](size_t arg) {
      const PlannedSchema& child = node.children[arg]->schema;
      for (const std::string& name : node.order_schemas[arg]) {
        bool found = false;
        for (const Attribute& a : child.attrs) {
          if (a.name == name) {
            out.attrs.push_back(a);
            found = true;
            break;
          }
        }
        if (!found) {
          // Order attribute hidden in a deferred tail: generated names are
          // always float64 application values.
          out.attrs.push_back({name, Kind::float64});
        }
      }
    };

    switch (shape.rows) {
      case Extent::first_rows: push_order_attrs(0); break;
      case Extent::both_rows:
        push_order_attrs(0);
        push_order_attrs(1);
        break;
      case Extent::first_cols:
      case Extent::one:
        out.attrs.push_back({node.context_name, Kind::text});
        break;
      default: break;
    }

    auto push_app = [&](size_t arg) {
      if (app_attrs[arg]) {
        for (const Attribute& a : *app_attrs[arg]) {
          out.attrs.push_back({a.name, Kind::float64});
        }
      } else {
        out.deferred_tail = true;
      }
    };

    switch (shape.cols) {
      case Extent::first_rows:
      case Extent::second_rows:
        out.deferred_tail = true;  // names come from attribute values
        break;
      case Extent::first_cols:
      case Extent::both_cols: push_app(0); break;
      case Extent::second_cols: push_app(1); break;
      case Extent::one:
        out.attrs.push_back(
            {std::string(opcode_name(node.rma_op)), Kind::float64});
        break;
      default: break;
    }

    // A collision that is visible statically fails at plan time.
    std::unordered_set<std::string_view> seen;
    for (const Attribute& a : out.attrs) {
      if (!seen.insert(a.name).second) {
        throw RmaError(errc::name_collision,
                       "result schema name collision on '" + a.name + "'",
                       pos);
      }
    }
    return out;
  }

  std::unique_ptr<PlanNode> plan_query(const Query& q) {
    std::unique_ptr<PlanNode> node = plan_from_item(q.from);

    for (const JoinClause& j : q.joins) {
      std::unique_ptr<PlanNode> right = plan_from_item(j.item);
      auto combined = std::make_unique<PlanNode>();
      combined->op = j.kind == JoinClause::Kind::inner
                         ? PlanNode::Op::join_inner
                         : PlanNode::Op::cross_product;
      combined->pos = j.item.pos;
      combined->predicate = j.on;

      PlannedSchema merged;
      merged.deferred_tail =
          node->schema.deferred_tail || right->schema.deferred_tail;
      merged.attrs = node->schema.attrs;
      for (const Attribute& a : right->schema.attrs) {
        if (node->schema.contains(a.name) && !merged.deferred_tail) {
          throw RmaError(errc::ambiguous_reference,
                         "attribute '" + a.name +
                             "' appears on both join sides; rename one input",
                         j.item.pos);
        }
        merged.attrs.push_back(a);
      }
      combined->schema = std::move(merged);
      combined->children.push_back(std::move(node));
      combined->children.push_back(std::move(right));
      if (j.on) {
        if (auto t = static_type(*j.on, combined->schema);
            t && *t != ValueType::boolean) {
          throw RmaError(errc::type_error, "join predicate must be boolean",
                         j.on->pos);
        }
      }
      node = std::move(combined);
    }

    if (q.where) {
      if (auto t = static_type(*q.where, node->schema);
          t && *t != ValueType::boolean) {
        throw RmaError(errc::type_error, "WHERE predicate must be boolean",
                       q.where->pos);
      }
      auto filter = std::make_unique<PlanNode>();
      filter->op = PlanNode::Op::filter;
      filter->predicate = q.where;
      filter->schema = node->schema;
      filter->pos = q.where->pos;
      filter->children.push_back(std::move(node));
      node = std::move(filter);
    }

    const bool has_aggregate =
        !q.select_star &&
        std::any_of(q.select.begin(), q.select.end(), [](const SelectItem& s) {
          return s.expr->contains_aggregate();
        });

    if (!q.group_by.empty() || has_aggregate) {
      node = plan_aggregate(q, std::move(node));
    } else if (!q.select_star) {
      auto proj = std::make_unique<PlanNode>();
      proj->op = PlanNode::Op::project;
      proj->pos = q.pos;
      for (const SelectItem& item : q.select) {
        std::string name =
            item.alias.empty() ? default_output_name(*item.expr) : item.alias;
        std::optional<ValueType> t = static_type(*item.expr, node->schema);
        Kind kind = Kind::float64;
        if (t) {
          if (*t == ValueType::boolean) {
            throw RmaError(errc::type_error,
                           "boolean expression cannot form a column",
                           item.expr->pos);
          }
          kind = *t == ValueType::float64
                     ? Kind::float64
                     : (*t == ValueType::int64 ? Kind::int64 : Kind::text);
        }
        proj->schema.attrs.push_back({name, kind});
        proj->projections.emplace_back(item.expr, std::move(name));
      }
      check_output_names(proj->schema, q.pos);
      proj->children.push_back(std::move(node));
      node = std::move(proj);
    }

    if (!q.order_by.empty()) {
      auto sort = std::make_unique<PlanNode>();
      sort->op = PlanNode::Op::sort_rows;
      sort->sort_attrs = q.order_by;
      sort->schema = node->schema;
      sort->pos = q.pos;
      for (const std::string& name : q.order_by) {
        if (!sort->schema.contains(name) && !sort->schema.deferred_tail) {
          throw RmaError(errc::unknown_column,
                         "unknown ORDER BY attribute '" + name + "'", q.pos);
        }
      }
      sort->children.push_back(std::move(node));
      node = std::move(sort);
    }
    return node;
  }

  static std::string default_output_name(const ScalarExpr& expr) {
    if (expr.node == ScalarExpr::Node::column_ref) return expr.name;
    return expr.to_string();
  }

  static void check_output_names(const PlannedSchema& schema, SourcePos pos) {
    std::unordered_set<std::string_view> seen;
    for (const Attribute& a : schema.attrs) {
      if (!seen.insert(a.name).second) {
        throw RmaError(errc::duplicate_output_name,
                       "duplicate output column '" + a.name + "'", pos);
      }
    }
  }

  std::unique_ptr<PlanNode> plan_aggregate(const Query& q,
                                           std::unique_ptr<PlanNode> input) {
    if (q.select_star) {
      throw RmaError(errc::type_error, "SELECT * cannot be grouped", q.pos);
    }
    auto agg = std::make_unique<PlanNode>();
    agg->op = PlanNode::Op::grouped_aggregate;
    agg->pos = q.pos;
    agg->group_by = q.group_by;

    for (const std::string& g : q.group_by) {
      if (!input->schema.contains(g) && !input->schema.deferred_tail) {
        throw RmaError(errc::unknown_column,
                       "unknown GROUP BY attribute '" + g + "'", q.pos);
      }
    }

    // Each select item is either a grouped column or one aggregate call.
    std::vector<std::pair<ExprPtr, std::string>> final_projection;
    for (const SelectItem& item : q.select) {
      const ScalarExpr& e = *item.expr;
      std::string name =
          item.alias.empty() ? default_output_name(e) : item.alias;
      if (e.node == ScalarExpr::Node::aggregate) {
        AggSpec spec{e.agg_fn, e.left, name};
        if (spec.argument) {
          static_type(*spec.argument, input->schema);
        }
        agg->aggs.push_back(std::move(spec));
      } else if (e.node == ScalarExpr::Node::column_ref &&
                 std::find(q.group_by.begin(), q.group_by.end(), e.name) !=
                     q.group_by.end()) {
        // grouped column; carried through by the aggregate itself
      } else {
        throw RmaError(errc::type_error,
                       "select expression must be an aggregate or a grouped "
                       "column when grouping",
                       e.pos);
      }
      final_projection.emplace_back(ScalarExpr::column(name, e.pos), name);
    }

    // Aggregate output schema: group columns first, then aggregates.
    for (const std::string& g : q.group_by) {
      bool found = false;
      for (const Attribute& a : input->schema.attrs) {
        if (a.name == g) {
          agg->schema.attrs.push_back(a);
          found = true;
          break;
        }
      }
      if (!found) agg->schema.attrs.push_back({g, Kind::float64});
    }
    for (const AggSpec& spec : agg->aggs) {
      Kind kind = Kind::float64;
      if (spec.fn == AggFn::count || spec.fn == AggFn::count_star) {
        kind = Kind::int64;
      } else if (spec.argument) {
        if (auto t = static_type(*spec.argument, input->schema)) {
          if (spec.fn == AggFn::sum && *t == ValueType::int64) {
            kind = Kind::int64;
          } else if ((spec.fn == AggFn::min || spec.fn == AggFn::max)) {
            kind = *t == ValueType::float64
                       ? Kind::float64
                       : (*t == ValueType::int64 ? Kind::int64 : Kind::text);
          }
        }
      }
      agg->schema.attrs.push_back({spec.output_name, kind});
    }
    check_output_names(agg->schema, q.pos);
    agg->children.push_back(std::move(input));

    // Re-project to the SELECT order (aggregate emits group cols first).
    auto proj = std::make_unique<PlanNode>();
    proj->op = PlanNode::Op::project;
    proj->pos = q.pos;
    for (auto& [expr, name] : final_projection) {
      bool found = false;
      for (const Attribute& a : agg->schema.attrs) {
        if (a.name == name) {
          proj->schema.attrs.push_back(a);
          found = true;
          break;
        }
      }
      if (!found) proj->schema.attrs.push_back({name, Kind::float64});
      proj->projections.emplace_back(std::move(expr), name);
    }
    check_output_names(proj->schema, q.pos);
    proj->children.push_back(std::move(agg));
    return proj;
  }
};

}  // namespace

std::unique_ptr<PlanNode> plan(const Query& query, const Catalog& catalog) {
  Planner p{catalog};
  return p.plan_query(query);
}

}  // namespace rma
