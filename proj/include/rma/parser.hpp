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

#include <string_view>

#include "rma/ast.hpp"

namespace rma {

/// Parses a single SELECT statement terminated by ';'. Keywords are
/// case-insensitive; identifiers are case-sensitive and may be double-quoted
/// ("5am"); text literals use single quotes. Throws RmaError(parse_error)
/// with a 1-based line/column position.
Query parse(std::string_view sql);

}  // namespace rma
