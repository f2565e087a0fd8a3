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

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "rma/error.hpp"

namespace rma {

enum class Kind : uint8_t { float64, int64, text };

const char* kind_name(Kind kind);
bool is_numeric(Kind kind);

/// A typed value sequence; the position of a value is its implicit row id.
/// Columns are immutable after construction and cheap to copy (the payload
/// is shared), so relational operators can reuse input columns freely.
///
/// Float columns hold finite values only: construction rejects NaN and
/// infinities, which keeps every matrix built from columns finite.
class Column {
 public:
  static Column of_floats(std::vector<double> values);
  static Column of_ints(std::vector<int64_t> values);
  static Column of_texts(std::vector<std::string> values);

  Kind kind() const { return kind_; }
  size_t size() const;

  const std::vector<double>& floats() const;
  const std::vector<int64_t>& ints() const;
  const std::vector<std::string>& texts() const;

  /// Value as a float, widening int64; throws kind_mismatch on text.
  double numeric_at(size_t row) const;

  /// Three-way comparison of two rows, possibly from different columns of
  /// the same kind. Text compares bytewise, numerics naturally; comparing
  /// across kinds throws kind_mismatch.
  static int compare(const Column& a, size_t i, const Column& b, size_t j);

  static bool values_equal(const Column& a, size_t i, const Column& b, size_t j) {
    return compare(a, i, b, j) == 0;
  }

  /// Renders one value as text: int64 without decimal point, float64 as the
  /// shortest decimal that parses back to the same bits, text verbatim.
  std::string render(size_t row) const;

  size_t hash_value(size_t row) const;

 private:
  using Payload = std::variant<std::vector<double>, std::vector<int64_t>,
                               std::vector<std::string>>;
  Column(Kind kind, Payload payload);

  Kind kind_;
  std::shared_ptr<const Payload> payload_;
};

}  // namespace rma
