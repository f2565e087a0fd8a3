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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rma/kernels.hpp"
#include "rma/relation.hpp"
#include "rma/sort.hpp"

namespace rma {

using kernels::Matrix;

/// Relational matrix operations. Each code has a fixed shape type that
/// drives how contextual information (order part, schemas, names) morphs
/// into the result relation.
enum class OpCode {
  emu, mmu, opd, cpd, add, sub,
  tra, sol, inv, evc, evl,
  qqr, rqr, dsv, usv, vsv,
  det, rnk, chf,
};

inline constexpr int kOpCodeCount = 19;

std::string_view opcode_name(OpCode op);
std::optional<OpCode> opcode_from_name(std::string_view name);  // case-insensitive
bool opcode_is_binary(OpCode op);

/// One coordinate of a shape type: whose dimension the result inherits.
enum class Extent {
  first_rows,   // r1
  second_rows,  // r2
  both_rows,    // r*
  first_cols,   // c1
  second_cols,  // c2
  both_cols,    // c*
  one,          // 1
};

struct ShapeType {
  Extent rows;
  Extent cols;
  bool operator==(const ShapeType&) const = default;
};

ShapeType shape_type_of(OpCode op);

/// An argument relation with its order schema; the application schema is
/// the complement of the order schema in schema order.
struct RmaInput {
  Relation relation;
  std::vector<std::string> order_schema;
};

struct RmaCall {
  OpCode op;
  RmaInput first;
  std::optional<RmaInput> second;  // binary operations only
  std::string context_name = "C";
};

/// full: both arguments are sorted by their order schemas.
/// avoiding: qqr skips sorting entirely (base-result rows pair positionally
/// with stored order-part rows); add/sub/emu keep the first argument in
/// stored order and align only the second to it. Other operations always
/// sort. Both policies produce the same relation as a set.
enum class SortPolicy { full, avoiding };

/// Executes the four-phase pipeline: split each argument into order and
/// application parts, sort, compute the base result, morph the row context
/// per shape type, and merge everything under the result schema.
Relation apply_rma(const RmaCall& call, SortPolicy policy = SortPolicy::full);

/// The application part of `r` as a matrix, rows sorted ascending by the
/// order schema, int64 columns widened to float64. This is both the matrix
/// constructor feeding every operation and the reduction that defines
/// matrix consistency.
Matrix reduce(const Relation& r, std::span<const std::string> order_schema);

/// Typed order-part columns of `r`, sorted ascending by the order schema
/// (the matrix constructor's non-complement form; text columns stay text).
std::vector<Column> sorted_order_part(const Relation& r,
                                      std::span<const std::string> order_schema);

/// Builds a relation from pre-aligned columns; rows must be unique.
Relation relation_constructor(Schema schema, std::vector<Column> columns,
                              std::optional<std::string> name = std::nullopt);

/// Attribute names generated from the sorted values of a key attribute.
std::vector<std::string> column_cast(const Relation& r,
                                     const std::string& attr);

/// Single text column holding the given attribute names.
Column schema_cast(std::span<const std::string> attrs);

/// Application schema: the attributes of `schema` not in `order_schema`,
/// in schema order. Order-schema names must exist and be distinct.
std::vector<std::string> application_schema(
    const Schema& schema, std::span<const std::string> order_schema);

/// Declared origins of a call's result: the row origin as a relation over
/// the result's context attributes, and the column origin as the list of
/// application attribute names (or the generated/op name).
struct Origins {
  Relation row_origin;
  std::vector<std::string> column_origin;
};

Origins origins_of(const RmaCall& call);

/// Names of the result's context attributes (the U' the result reduces by).
std::vector<std::string> result_context_attrs(const RmaCall& call);

}  // namespace rma
