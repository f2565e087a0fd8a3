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

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rma/relation.hpp"
#include "rma/scalar_expr.hpp"

namespace rma {

/// Classical relational operators with SQL bag semantics. All functions are
/// pure: inputs are immutable and results are freshly built relations
/// (columns may be shared with the inputs where contents are unchanged).

/// Rows satisfying the boolean predicate, input order preserved.
Relation select(const Relation& r, const ExprPtr& predicate);

/// One output column per (expression, name) pair; row count preserved.
Relation project(const Relation& r,
                 std::span<const std::pair<ExprPtr, std::string>> items);

/// Concatenation of all matching tuple pairs. Schemas must be name-disjoint.
/// An equality conjunct between the two sides is executed as a hash join;
/// the result is identical to the nested-loop evaluation, including order.
Relation join(const Relation& r, const Relation& s, const ExprPtr& predicate);

Relation cross(const Relation& r, const Relation& s);

/// Renames attributes according to (old, new) pairs; mapping must hit
/// existing attributes and produce a valid schema.
Relation rename(const Relation& r,
                std::span<const std::pair<std::string, std::string>> mapping);

struct AggSpec {
  AggFn fn;
  ExprPtr argument;  // null for COUNT(*)
  std::string output_name;
};

/// Grouped aggregation. With an empty group_by the whole input forms one
/// group and exactly one row is returned; COUNT of an empty input is 0 while
/// the other functions reject it (there is no NULL to return).
Relation aggregate(const Relation& r, std::span<const std::string> group_by,
                   std::span<const AggSpec> aggs);

}  // namespace rma
