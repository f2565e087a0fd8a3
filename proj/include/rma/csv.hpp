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
#include <iosfwd>

#include "rma/relation.hpp"

namespace rma {

/// Reads an RFC-4180-style CSV with a mandatory header row. Column kinds are
/// inferred: int64 if every cell parses as an integer, else float64 if every
/// cell parses as a finite number, else text. Empty cells, ragged rows and
/// duplicate header names are errors.
Relation load_csv(const std::filesystem::path& path);
Relation load_csv_stream(std::istream& in, const std::string& what);

/// Writes the relation as CSV; floats use shortest round-trip rendering so
/// re-importing reproduces the exact values.
void export_csv(const Relation& relation, std::ostream& out);
void export_csv(const Relation& relation, const std::filesystem::path& path);

}  // namespace rma
