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

#include <string>

namespace rma {

/// Shortest decimal that round-trips to the same double.
std::string format_double_roundtrip(double value);

/// Fixed 4 significant digits, for human-readable table output.
std::string format_double_display(double value);

/// Double-quotes a name unless it is a plain identifier. Needed for
/// generated attribute names like "5am" that start with a digit.
std::string quote_identifier(const std::string& name);

}  // namespace rma
