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
#include <string_view>
#include <vector>

#include "rma/column.hpp"

namespace rma {

struct Attribute {
  std::string name;
  Kind kind;

  bool operator==(const Attribute&) const = default;
};

/// An ordered list of uniquely named, typed attributes. Attribute order is
/// significant: it decides the application-schema layout of matrix operands.
class Schema {
 public:
  Schema() = default;
  explicit Schema(std::vector<Attribute> attrs);

  size_t size() const { return attrs_.size(); }
  const Attribute& at(size_t i) const { return attrs_.at(i); }
  const std::vector<Attribute>& attrs() const { return attrs_; }

  std::optional<size_t> find(std::string_view name) const;
  size_t require(std::string_view name) const;  // throws unknown_attribute
  bool contains(std::string_view name) const { return find(name).has_value(); }

  std::vector<std::string> names() const;

  bool operator==(const Schema&) const = default;

 private:
  std::vector<Attribute> attrs_;
};

}  // namespace rma
