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

#include "rma/column.hpp"
#include "rma/schema.hpp"

namespace rma {

/// A named bag of tuples stored column-wise: one Column per attribute, all
/// of equal length. Relations are immutable; operators build new ones.
class Relation {
 public:
  Relation() = default;
  Relation(Schema schema, std::vector<Column> columns,
           std::optional<std::string> name = std::nullopt);
  /// Explicit row count, required when `columns` is empty (zero-attribute
  /// relations still have a row count).
  Relation(Schema schema, std::vector<Column> columns, size_t row_count,
           std::optional<std::string> name = std::nullopt);

  const Schema& schema() const { return schema_; }
  const std::vector<Column>& columns() const { return columns_; }
  const Column& column(size_t i) const { return columns_.at(i); }
  const Column& column(std::string_view name) const;
  size_t row_count() const { return row_count_; }
  size_t column_count() const { return columns_.size(); }

  const std::optional<std::string>& name() const { return name_; }
  Relation with_name(std::optional<std::string> name) const;

  /// Bag equality: same schema and the same multiset of tuples.
  bool bag_equal(const Relation& other) const;

 private:
  Schema schema_;
  std::vector<Column> columns_;
  size_t row_count_ = 0;
  std::optional<std::string> name_;
};

/// Restriction to the named attributes, in the given order; columns are
/// shared, not copied. An empty list yields a zero-attribute relation that
/// keeps the row count.
Relation project_columns(const Relation& r, std::span<const std::string> names);

int compare_rows(const Relation& a, size_t i, const Relation& b, size_t j);

}  // namespace rma
