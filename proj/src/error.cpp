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

#include "rma/error.hpp"

namespace rma {

const char* errc_name(errc code) {
  switch (code) {
    case errc::unknown_attribute: return "unknown_attribute";
    case errc::duplicate_attribute: return "duplicate_attribute";
    case errc::empty_attribute_name: return "empty_attribute_name";
    case errc::kind_mismatch: return "kind_mismatch";
    case errc::length_mismatch: return "length_mismatch";
    case errc::invalid_permutation: return "invalid_permutation";
    case errc::non_finite_value: return "non_finite_value";
    case errc::type_error: return "type_error";
    case errc::duplicate_output_name: return "duplicate_output_name";
    case errc::ambiguous_reference: return "ambiguous_reference";
    case errc::division_by_zero: return "division_by_zero";
    case errc::empty_aggregate_input: return "empty_aggregate_input";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::singular_matrix: return "singular_matrix";
    case errc::not_symmetric: return "not_symmetric";
    case errc::not_positive_definite: return "not_positive_definite";
    case errc::rank_deficient: return "rank_deficient";
    case errc::non_convergence: return "non_convergence";
    case errc::empty_order_schema: return "empty_order_schema";
    case errc::order_schema_cardinality: return "order_schema_cardinality";
    case errc::key_violation: return "key_violation";
    case errc::non_numeric_application: return "non_numeric_application";
    case errc::empty_application_schema: return "empty_application_schema";
    case errc::empty_input: return "empty_input";
    case errc::union_incompatible: return "union_incompatible";
    case errc::order_schemas_overlap: return "order_schemas_overlap";
    case errc::name_collision: return "name_collision";
    case errc::duplicate_rows: return "duplicate_rows";
    case errc::empty_cast: return "empty_cast";
    case errc::unnamed_relation: return "unnamed_relation";
    case errc::parse_error: return "parse_error";
    case errc::unknown_table: return "unknown_table";
    case errc::unknown_column: return "unknown_column";
    case errc::io_error: return "io_error";
    case errc::ragged_row: return "ragged_row";
    case errc::duplicate_header: return "duplicate_header";
    case errc::empty_cell: return "empty_cell";
    case errc::bad_argument: return "bad_argument";
  }
  return "unknown";
}

}  // namespace rma
