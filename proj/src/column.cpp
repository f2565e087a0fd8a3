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

#include "rma/column.hpp"

#include <cmath>
#include <functional>

#include "rma/value_format.hpp"

namespace rma {

const char* kind_name(Kind kind) {
  switch (kind) {
    case Kind::float64: return "float64";
    case Kind::int64: return "int64";
    case Kind::text: return "text";
  }
  return "?";
}

bool is_numeric(Kind kind) { return kind != Kind::text; }

Column::Column(Kind kind, Payload payload)
    : kind_(kind), payload_(std::make_shared<const Payload>(std::move(payload))) {}

Column Column::of_floats(std::vector<double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw RmaError(errc::non_finite_value,
                     "float column values must be finite");
    }
  }
  return Column(Kind::float64, Payload(std::move(values)));
}

Column Column::of_ints(std::vector<int64_t> values) {
  return Column(Kind::int64, Payload(std::move(values)));
}

Column Column::of_texts(std::vector<std::string> values) {
  return Column(Kind::text, Payload(std::move(values)));
}

size_t Column::size() const {
  switch (kind_) {
    case Kind::float64: return std::get<0>(*payload_).size();
    case Kind::int64: return std::get<1>(*payload_).size();
    case Kind::text: return std::get<2>(*payload_).size();
  }
  return 0;
}

const std::vector<double>& Column::floats() const {
  if (kind_ != Kind::float64) {
    throw RmaError(errc::kind_mismatch, "column is not float64");
  }
  return std::get<0>(*payload_);
}

const std::vector<int64_t>& Column::ints() const {
  if (kind_ != Kind::int64) {
    throw RmaError(errc::kind_mismatch, "column is not int64");
  }
  return std::get<1>(*payload_);
}

const std::vector<std::string>& Column::texts() const {
  if (kind_ != Kind::text) {
    throw RmaError(errc::kind_mismatch, "column is not text");
  }
  return std::get<2>(*payload_);
}

double Column::numeric_at(size_t row) const {
  switch (kind_) {
    case Kind::float64: return floats()[row];
    case Kind::int64: return static_cast<double>(ints()[row]);
    case Kind::text: break;
  }
  throw RmaError(errc::kind_mismatch, "text value used as a number");
}

int Column::compare(const Column& a, size_t i, const Column& b, size_t j) {
  if (a.kind_ != b.kind_) {
    throw RmaError(errc::kind_mismatch,
                   std::string("cannot compare ") + kind_name(a.kind_) +
                       " with " + kind_name(b.kind_));
  }
  switch (a.kind_) {
    case Kind::float64: {
      double x = a.floats()[i], y = b.floats()[j];
      return x < y ? -1 : (x > y ? 1 : 0);
    }
    case Kind::int64: {
      int64_t x = a.ints()[i], y = b.ints()[j];
      return x < y ? -1 : (x > y ? 1 : 0);
    }
    case Kind::text: {
      const std::string& x = a.texts()[i];
      const std::string& y = b.texts()[j];
      int c = x.compare(y);
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
  }
  return 0;
}

std::string Column::render(size_t row) const {
  switch (kind_) {
    case Kind::float64: return format_double_roundtrip(floats()[row]);
    case Kind::int64: return std::to_string(ints()[row]);
    case Kind::text: return texts()[row];
  }
  return {};
}

size_t Column::hash_value(size_t row) const {
  switch (kind_) {
    case Kind::float64: {
      double v = floats()[row];
      if (v == 0.0) v = 0.0;  // collapse -0.0, which compares equal to 0.0
      return std::hash<double>()(v);
    }
    case Kind::int64: return std::hash<int64_t>()(ints()[row]);
    case Kind::text: return std::hash<std::string>()(texts()[row]);
  }
  return 0;
}

}  // namespace rma
