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

#include "rma/schema.hpp"

#include <unordered_set>

#include "rma/error.hpp"

namespace rma {

Schema::Schema(std::vector<Attribute> attrs) : attrs_(std::move(attrs)) {
  std::unordered_set<std::string_view> seen;
  for (const Attribute& a : attrs_) {
    if (a.name.empty()) {
      throw RmaError(errc::empty_attribute_name,
                     "attribute names must be non-empty");
    }
    if (!seen.insert(a.name).second) {
      throw RmaError(errc::duplicate_attribute,
                     "duplicate attribute name '" + a.name + "'");
    }
  }
}

std::optional<size_t> Schema::find(std::string_view name) const {
  for (size_t i = 0; i < attrs_.size(); ++i) {
    if (attrs_[i].name == name) return i;
  }
  return std::nullopt;
}

size_t Schema::require(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw RmaError(errc::unknown_attribute,
                 "unknown attribute '" + std::string(name) + "'");
}

std::vector<std::string> Schema::names() const {
  std::vector<std::string> out;
  out.reserve(attrs_.size());
  for (const Attribute& a : attrs_) out.push_back(a.name);
  return out;
}

}  // namespace rma
