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
#include <span>
#include <string>
#include <vector>

#include "rma/relation.hpp"

namespace rma {

/// A bijection on row positions. indices()[k] is the input row that lands at
/// output position k.
class SortPermutation {
 public:
  explicit SortPermutation(std::vector<size_t> indices);
  static SortPermutation identity(size_t n);

  size_t size() const { return indices_.size(); }
  size_t operator[](size_t k) const { return indices_[k]; }
  const std::vector<size_t>& indices() const { return indices_; }

  /// inverse()[i] is the output position of input row i (its rank).
  std::vector<size_t> inverse() const;

 private:
  SortPermutation() = default;
  std::vector<size_t> indices_;
};

/// Permutation that orders the rows of `r` by ascending lexicographic value
/// of `order_attrs`, ties broken by original position (stable). Increments
/// the global sort counter.
SortPermutation sort_permutation(const Relation& r,
                                 std::span<const std::string> order_attrs);

/// Gathers column values: output[k] = input[p[k]] (the leftfetchjoin analog).
Column apply_permutation(const Column& c, const SortPermutation& p);

/// Number of sort_permutation invocations since process start. Used by the
/// sort-avoidance experiment to assert that an optimized pipeline sorted
/// nothing; read a before/after delta rather than the absolute value.
uint64_t sort_operation_count();

}  // namespace rma
