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

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "rma/relation.hpp"

namespace rma {

/// Table registry, optionally backed by a directory. The on-disk format is
/// one .schema text file per table plus one raw little-endian value file per
/// column (see catalog.cpp for the exact layout).
class Catalog {
 public:
  /// Registers (or replaces) a table; the relation is stored carrying
  /// `name`. If a directory is attached the table is persisted.
  void register_table(const std::string& name, Relation relation);

  const Relation* find(std::string_view name) const;
  const Relation& require(std::string_view name) const;  // throws unknown_table
  std::vector<std::string> table_names() const;

  /// Attaches `dir` (created if missing) and loads every table stored there.
  void attach_directory(const std::filesystem::path& dir);
  const std::optional<std::filesystem::path>& directory() const { return dir_; }

 private:
  void save_table(const std::string& name, const Relation& relation) const;

  std::map<std::string, Relation> tables_;
  std::optional<std::filesystem::path> dir_;
};

}  // namespace rma
