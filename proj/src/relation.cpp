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

#include "rma/relation.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace rma {

namespace {

size_t checked_row_count(const Schema& schema, const std::vector<Column>& cols,
                         size_t declared) {
  if (schema.size() != cols.size()) {
    throw RmaError(errc::length_mismatch,
                   "schema has " + std::to_string(schema.size()) +
                       " attributes but " + std::to_string(cols.size()) +
                       " columns were given");
  }
  size_t rows = declared;
  for (size_t i = 0; i < cols.size(); ++i) {
    if (cols[i].kind() != schema.at(i).kind) {
      throw RmaError(errc::kind_mismatch,
                     "column '" + schema.at(i).name + "' is " +
                         kind_name(cols[i].kind()) + " but schema says " +
                         kind_name(schema.at(i).kind));
    }
    if (i == 0 && declared == size_t(-1)) rows = cols[i].size();
    if (cols[i].size() != rows) {
      throw RmaError(errc::length_mismatch,
                     "column '" + schema.at(i).name +
                         "' length does not match the relation row count");
    }
  }
  if (cols.empty() && declared == size_t(-1)) rows = 0;
  return rows;
}

}  // namespace

Relation::Relation(Schema schema, std::vector<Column> columns,
                   std::optional<std::string> name)
    : schema_(std::move(schema)),
      columns_(std::move(columns)),
      name_(std::move(name)) {
  row_count_ = checked_row_count(schema_, columns_, size_t(-1));
}

Relation::Relation(Schema schema, std::vector<Column> columns, size_t row_count,
                   std::optional<std::string> name)
    : schema_(std::move(schema)),
      columns_(std::move(columns)),
      name_(std::move(name)) {
  row_count_ = checked_row_count(schema_, columns_, row_count);
}

const Column& Relation::column(std::string_view name) const {
  return columns_[schema_.require(name)];
}

Relation Relation::with_name(std::optional<std::string> name) const {
  Relation out = *this;
  out.name_ = std::move(name);
  return out;
}

int compare_rows(const Relation& a, size_t i, const Relation& b, size_t j) {
  for (size_t c = 0; c < a.column_count(); ++c) {
    int cmp = Column::compare(a.column(c), i, b.column(c), j);
    if (cmp != 0) return cmp;
  }
  return 0;
}

bool Relation::bag_equal(const Relation& other) const {
  if (schema_ != other.schema_ || row_count_ != other.row_count_) return false;
  auto sorted_order = [](const Relation& r) {
    std::vector<size_t> idx(r.row_count());
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::sort(idx.begin(), idx.end(), [&](size_t i, size_t j) {
      return compare_rows(r, i, r, j) < 0;
    });
    return idx;
  };
  std::vector<size_t> ia = sorted_order(*this), ib = sorted_order(other);
  for (size_t k = 0; k < ia.size(); ++k) {
    if (compare_rows(*this, ia[k], other, ib[k]) != 0) return false;
  }
  return true;
}

Relation project_columns(const Relation& r, std::span<const std::string> names) {
  std::unordered_set<std::string_view> seen;
  std::vector<Attribute> attrs;
  std::vector<Column> cols;
  attrs.reserve(names.size());
  cols.reserve(names.size());
  for (const std::string& name : names) {
    if (!seen.insert(name).second) {
      throw RmaError(errc::duplicate_attribute,
                     "duplicate attribute '" + name + "' in projection");
    }
    size_t i = r.schema().require(name);
    attrs.push_back(r.schema().at(i));
    cols.push_back(r.column(i));
  }
  return Relation(Schema(std::move(attrs)), std::move(cols), r.row_count());
}

}  // namespace rma
