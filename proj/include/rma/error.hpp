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

#include <stdexcept>
#include <string>

namespace rma {

/// Machine-readable error classification. Every failure mode of the engine
/// maps to exactly one code so callers (and tests) can dispatch on it.
enum class errc {
  // column store
  unknown_attribute,
  duplicate_attribute,
  empty_attribute_name,
  kind_mismatch,
  length_mismatch,
  invalid_permutation,
  non_finite_value,

  // expressions and relational operators
  type_error,
  duplicate_output_name,
  ambiguous_reference,
  division_by_zero,
  empty_aggregate_input,

  // matrix kernels
  dimension_mismatch,
  singular_matrix,
  not_symmetric,
  not_positive_definite,
  rank_deficient,
  non_convergence,

  // relational matrix operations
  empty_order_schema,
  order_schema_cardinality,
  key_violation,
  non_numeric_application,
  empty_application_schema,
  empty_input,
  union_incompatible,
  order_schemas_overlap,
  name_collision,
  duplicate_rows,
  empty_cast,
  unnamed_relation,

  // SQL frontend
  parse_error,
  unknown_table,
  unknown_column,

  // shell / ingestion
  io_error,
  ragged_row,
  duplicate_header,
  empty_cell,
  bad_argument,
};

const char* errc_name(errc code);

/// 1-based source location within a statement; line 0 means "no position".
struct SourcePos {
  int line = 0;
  int column = 0;
  bool valid() const { return line > 0; }
};

class RmaError : public std::runtime_error {
 public:
  RmaError(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  RmaError(errc code, const std::string& message, SourcePos pos)
      : std::runtime_error(message), code_(code), pos_(pos) {}

  errc code() const { return code_; }
  SourcePos pos() const { return pos_; }
  bool has_pos() const { return pos_.valid(); }

  /// Returns a copy of this error carrying `pos`, used when an inner engine
  /// error surfaces at a plan node with a known source location.
  RmaError at(SourcePos pos) const {
    return pos_.valid() ? *this : RmaError(code_, what(), pos);
  }

 private:
  errc code_;
  SourcePos pos_;
};

}  // namespace rma
