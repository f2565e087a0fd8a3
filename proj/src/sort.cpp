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

#include "rma/sort.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

namespace rma {

namespace {
std::atomic<uint64_t> g_sort_ops{0};
}

uint64_t sort_operation_count() { return g_sort_ops.load(); }

SortPermutation::SortPermutation(std::vector<size_t> indices)
    : indices_(std::move(indices)) {
  std::vector<char> seen(indices_.size(), 0);
  for (size_t v : indices_) {
    if (v >= indices_.size() || seen[v]) {
      throw RmaError(errc::invalid_permutation,
                     "index sequence is not a permutation of row positions");
    }
    seen[v] = 1;
  }
}

SortPermutation SortPermutation::identity(size_t n) {
  std::vector<size_t> idx(n);
  std::iota(idx.begin(), idx.end(), size_t{0});
  SortPermutation p;
  p.indices_ = std::move(idx);
  return p;
}

std::vector<size_t> SortPermutation::inverse() const {
  std::vector<size_t> inv(indices_.size());
  for (size_t k = 0; k < indices_.size(); ++k) inv[indices_[k]] = k;
  return inv;
}

SortPermutation sort_permutation(const Relation& r,
                                 std::span<const std::string> order_attrs) {
  g_sort_ops.fetch_add(1, std::memory_order_relaxed);
  std::vector<const Column*> keys;
  keys.reserve(order_attrs.size());
  for (const std::string& name : order_attrs) {
    keys.push_back(&r.column(name));  // throws unknown_attribute
  }
  std::vector<size_t> idx(r.row_count());
  std::iota(idx.begin(), idx.end(), size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](size_t i, size_t j) {
    for (const Column* c : keys) {
      int cmp = Column::compare(*c, i, *c, j);
      if (cmp != 0) return cmp < 0;
    }
    return false;
  });
  return SortPermutation(std::move(idx));
}

Column apply_permutation(const Column& c, const SortPermutation& p) {
  if (c.size() != p.size()) {
    throw RmaError(errc::length_mismatch,
                   "permutation length does not match column length");
  }
  switch (c.kind()) {
    case Kind::float64: {
      std::vector<double> out(p.size());
      const auto& in = c.floats();
      for (size_t k = 0; k < p.size(); ++k) out[k] = in[p[k]];
      return Column::of_floats(std::move(out));
    }
    case Kind::int64: {
      std::vector<int64_t> out(p.size());
      const auto& in = c.ints();
      for (size_t k = 0; k < p.size(); ++k) out[k] = in[p[k]];
      return Column::of_ints(std::move(out));
    }
    case Kind::text: {
      std::vector<std::string> out(p.size());
      const auto& in = c.texts();
      for (size_t k = 0; k < p.size(); ++k) out[k] = in[p[k]];
      return Column::of_texts(std::move(out));
    }
  }
  throw RmaError(errc::kind_mismatch, "unknown column kind");
}

}  // namespace rma
