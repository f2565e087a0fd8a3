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

#include "rma/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace rma {

namespace {

Column gather(const Column& c, const std::vector<size_t>& rows) {
  switch (c.kind()) {
    case Kind::float64: {
      std::vector<double> out;
      out.reserve(rows.size());
      for (size_t i : rows) out.push_back(c.floats()[i]);
      return Column::of_floats(std::move(out));
    }
    case Kind::int64: {
      std::vector<int64_t> out;
      out.reserve(rows.size());
      for (size_t i : rows) out.push_back(c.ints()[i]);
      return Column::of_ints(std::move(out));
    }
    case Kind::text: {
      std::vector<std::string> out;
      out.reserve(rows.size());
      for (size_t i : rows) out.push_back(c.texts()[i]);
      return Column::of_texts(std::move(out));
    }
  }
  throw RmaError(errc::kind_mismatch, "unknown column kind");
}

Relation gather_rows(const Relation& r, const std::vector<size_t>& rows) {
  std::vector<Column> cols;
  cols.reserve(r.column_count());
  for (const Column& c : r.columns()) cols.push_back(gather(c, rows));
  return Relation(r.schema(), std::move(cols), rows.size());
}

}  // namespace

Relation select(const Relation& r, const ExprPtr& predicate) {
  std::vector<char> mask = eval_predicate(*predicate, r);
  std::vector<size_t> rows;
  for (size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) rows.push_back(i);
  }
  return gather_rows(r, rows);
}

Relation project(const Relation& r,
                 std::span<const std::pair<ExprPtr, std::string>> items) {
  std::unordered_set<std::string_view> seen;
  std::vector<Attribute> attrs;
  std::vector<Column> cols;
  for (const auto& [expr, name] : items) {
    if (!seen.insert(name).second) {
      throw RmaError(errc::duplicate_output_name,
                     "duplicate output column '" + name + "'");
    }
    Column c = eval_to_column(*expr, r);
    attrs.push_back({name, c.kind()});
    cols.push_back(std::move(c));
  }
  return Relation(Schema(std::move(attrs)), std::move(cols), r.row_count());
}

namespace {

Schema concat_schemas(const Relation& r, const Relation& s) {
  for (const Attribute& a : s.schema().attrs()) {
    if (r.schema().contains(a.name)) {
      throw RmaError(errc::ambiguous_reference,
                     "attribute '" + a.name +
                         "' appears on both join sides; rename one input");
    }
  }
  std::vector<Attribute> attrs = r.schema().attrs();
  attrs.insert(attrs.end(), s.schema().attrs().begin(), s.schema().attrs().end());
  return Schema(std::move(attrs));
}

Relation pair_rows(const Relation& r, const Relation& s, const Schema& schema,
                   const std::vector<size_t>& left,
                   const std::vector<size_t>& right) {
  std::vector<Column> cols;
  cols.reserve(r.column_count() + s.column_count());
  for (const Column& c : r.columns()) cols.push_back(gather(c, left));
  for (const Column& c : s.columns()) cols.push_back(gather(c, right));
  return Relation(schema, std::move(cols), left.size());
}

/// Finds one `left_col = right_col` conjunct usable as a hash-join key.
struct EquiKey {
  std::string left, right;
};

std::optional<EquiKey> find_equi_key(const ScalarExpr& pred, const Relation& r,
                                     const Relation& s) {
  if (pred.node == ScalarExpr::Node::binary &&
      pred.bin_op == BinOp::logic_and) {
    if (auto k = find_equi_key(*pred.left, r, s)) return k;
    return find_equi_key(*pred.right, r, s);
  }
  if (pred.node != ScalarExpr::Node::binary || pred.bin_op != BinOp::eq) {
    return std::nullopt;
  }
  const ScalarExpr& l = *pred.left;
  const ScalarExpr& rr = *pred.right;
  if (l.node != ScalarExpr::Node::column_ref ||
      rr.node != ScalarExpr::Node::column_ref) {
    return std::nullopt;
  }
  auto side = [&](const std::string& name) {
    return r.schema().contains(name) ? 0 : (s.schema().contains(name) ? 1 : -1);
  };
  int ls = side(l.name), rs = side(rr.name);
  if (ls == 0 && rs == 1) return EquiKey{l.name, rr.name};
  if (ls == 1 && rs == 0) return EquiKey{rr.name, l.name};
  return std::nullopt;
}

}  // namespace

Relation cross(const Relation& r, const Relation& s) {
  Schema schema = concat_schemas(r, s);
  std::vector<size_t> left, right;
  left.reserve(r.row_count() * s.row_count());
  right.reserve(r.row_count() * s.row_count());
  for (size_t i = 0; i < r.row_count(); ++i) {
    for (size_t j = 0; j < s.row_count(); ++j) {
      left.push_back(i);
      right.push_back(j);
    }
  }
  return pair_rows(r, s, schema, left, right);
}

Relation join(const Relation& r, const Relation& s, const ExprPtr& predicate) {
  Schema schema = concat_schemas(r, s);

  std::vector<size_t> left, right;
  auto equi = find_equi_key(*predicate, r, s);
  if (equi && r.column(equi->left).kind() == s.column(equi->right).kind()) {
    const Column& rk = r.column(equi->left);
    const Column& sk = s.column(equi->right);
    std::unordered_map<size_t, std::vector<size_t>> buckets;
    for (size_t j = 0; j < s.row_count(); ++j) {
      buckets[sk.hash_value(j)].push_back(j);
    }
    for (size_t i = 0; i < r.row_count(); ++i) {
      auto it = buckets.find(rk.hash_value(i));
      if (it == buckets.end()) continue;
      for (size_t j : it->second) {
        if (Column::values_equal(rk, i, sk, j)) {
          left.push_back(i);
          right.push_back(j);
        }
      }
    }
  } else {
    for (size_t i = 0; i < r.row_count(); ++i) {
      for (size_t j = 0; j < s.row_count(); ++j) {
        left.push_back(i);
        right.push_back(j);
      }
    }
  }

  Relation candidate = pair_rows(r, s, schema, left, right);
  return select(candidate, predicate);
}

Relation rename(const Relation& r,
                std::span<const std::pair<std::string, std::string>> mapping) {
  std::vector<Attribute> attrs = r.schema().attrs();
  for (const auto& [from, to] : mapping) {
    attrs[r.schema().require(from)].name = to;
  }
  return Relation(Schema(std::move(attrs)), r.columns(), r.row_count());
}

namespace {

struct AggState {
  int64_t count = 0;
  double sum = 0;
  int64_t isum = 0;
  bool has_value = false;
  double fmin = 0, fmax = 0;
  int64_t imin = 0, imax = 0;
  std::string tmin, tmax;
};

Kind agg_output_kind(const AggSpec& spec, ValueType arg_type) {
  switch (spec.fn) {
    case AggFn::count_star:
    case AggFn::count: return Kind::int64;
    case AggFn::avg: return Kind::float64;
    case AggFn::sum:
      return arg_type == ValueType::int64 ? Kind::int64 : Kind::float64;
    case AggFn::min:
    case AggFn::max:
      if (arg_type == ValueType::int64) return Kind::int64;
      if (arg_type == ValueType::text) return Kind::text;
      return Kind::float64;
  }
  return Kind::float64;
}

}  // namespace

Relation aggregate(const Relation& r, std::span<const std::string> group_by,
                   std::span<const AggSpec> aggs) {
  // Validate argument types and pre-evaluate arguments column-at-a-time.
  std::vector<ValueType> arg_types(aggs.size(), ValueType::int64);
  std::vector<Column> arg_cols;
  arg_cols.reserve(aggs.size());
  for (size_t a = 0; a < aggs.size(); ++a) {
    const AggSpec& spec = aggs[a];
    if (spec.fn == AggFn::count_star) {
      arg_cols.push_back(Column::of_ints({}));
      continue;
    }
    ValueType t = infer_type(*spec.argument, r.schema());
    if (t == ValueType::boolean) {
      throw RmaError(errc::type_error, "aggregate argument cannot be boolean");
    }
    if (t == ValueType::text && spec.fn != AggFn::min &&
        spec.fn != AggFn::max && spec.fn != AggFn::count) {
      throw RmaError(errc::type_error,
                     std::string(agg_fn_name(spec.fn)) +
                         " requires a numeric argument");
    }
    arg_types[a] = t;
    arg_cols.push_back(eval_to_column(*spec.argument, r));
  }

  std::vector<size_t> group_idx;
  for (const std::string& g : group_by) {
    group_idx.push_back(r.schema().require(g));
  }

  // Group rows; groups keep first-appearance order.
  struct RowKey {
    const Relation* rel;
    const std::vector<size_t>* cols;
    size_t row;
  };
  struct KeyHash {
    size_t operator()(const RowKey& k) const {
      size_t h = 0;
      for (size_t c : *k.cols) {
        h = h * 1099511628211ULL + k.rel->column(c).hash_value(k.row);
      }
      return h;
    }
  };
  struct KeyEq {
    bool operator()(const RowKey& a, const RowKey& b) const {
      for (size_t c : *a.cols) {
        if (!Column::values_equal(a.rel->column(c), a.row, b.rel->column(c),
                                  b.row)) {
          return false;
        }
      }
      return true;
    }
  };
  std::unordered_map<RowKey, size_t, KeyHash, KeyEq> group_of;
  std::vector<size_t> representative;  // first row of each group
  std::vector<std::vector<size_t>> members;
  for (size_t i = 0; i < r.row_count(); ++i) {
    RowKey key{&r, &group_idx, i};
    auto [it, inserted] = group_of.try_emplace(key, representative.size());
    if (inserted) {
      representative.push_back(i);
      members.emplace_back();
    }
    members[it->second].push_back(i);
  }
  if (group_by.empty() && representative.empty()) {
    representative.push_back(size_t(-1));
    members.emplace_back();
  }
  const size_t n_groups = representative.size();

  std::vector<Attribute> attrs;
  std::vector<Column> out_cols;
  for (size_t c : group_idx) {
    attrs.push_back(r.schema().at(c));
    out_cols.push_back(gather(r.column(c), representative));
  }

  std::unordered_set<std::string_view> seen;
  for (const Attribute& a : attrs) seen.insert(a.name);

  for (size_t a = 0; a < aggs.size(); ++a) {
    const AggSpec& spec = aggs[a];
    if (!seen.insert(spec.output_name).second) {
      throw RmaError(errc::duplicate_output_name,
                     "duplicate output column '" + spec.output_name + "'");
    }
    Kind out_kind = agg_output_kind(spec, arg_types[a]);
    std::vector<AggState> states(n_groups);
    for (size_t g = 0; g < n_groups; ++g) {
      for (size_t row : members[g]) {
        AggState& st = states[g];
        st.count++;
        if (spec.fn == AggFn::count_star || spec.fn == AggFn::count) continue;
        const Column& arg = arg_cols[a];
        if (arg_types[a] == ValueType::text) {
          const std::string& v = arg.texts()[row];
          if (!st.has_value || v < st.tmin) st.tmin = v;
          if (!st.has_value || v > st.tmax) st.tmax = v;
        } else if (arg_types[a] == ValueType::int64) {
          int64_t v = arg.ints()[row];
          st.isum += v;
          st.sum += static_cast<double>(v);
          if (!st.has_value || v < st.imin) st.imin = v;
          if (!st.has_value || v > st.imax) st.imax = v;
        } else {
          double v = arg.floats()[row];
          st.sum += v;
          if (!st.has_value || v < st.fmin) st.fmin = v;
          if (!st.has_value || v > st.fmax) st.fmax = v;
        }
        st.has_value = true;
      }
    }

    auto require_nonempty = [&](const AggState& st) {
      if (st.count == 0) {
        throw RmaError(errc::empty_aggregate_input,
                       std::string(agg_fn_name(spec.fn)) +
                           " over an empty input has no value");
      }
    };

    if (out_kind == Kind::int64) {
      std::vector<int64_t> out(n_groups);
      for (size_t g = 0; g < n_groups; ++g) {
        const AggState& st = states[g];
        switch (spec.fn) {
          case AggFn::count_star:
          case AggFn::count: out[g] = st.count; break;
          case AggFn::sum:
            require_nonempty(st);
            out[g] = st.isum;
            break;
          case AggFn::min:
            require_nonempty(st);
            out[g] = st.imin;
            break;
          case AggFn::max:
            require_nonempty(st);
            out[g] = st.imax;
            break;
          case AggFn::avg: break;
        }
      }
      out_cols.push_back(Column::of_ints(std::move(out)));
    } else if (out_kind == Kind::text) {
      std::vector<std::string> out(n_groups);
      for (size_t g = 0; g < n_groups; ++g) {
        require_nonempty(states[g]);
        out[g] = spec.fn == AggFn::min ? states[g].tmin : states[g].tmax;
      }
      out_cols.push_back(Column::of_texts(std::move(out)));
    } else {
      std::vector<double> out(n_groups);
      for (size_t g = 0; g < n_groups; ++g) {
        const AggState& st = states[g];
        switch (spec.fn) {
          case AggFn::sum:
            require_nonempty(st);
            out[g] = st.sum;
            break;
          case AggFn::avg:
            require_nonempty(st);
            out[g] = st.sum / static_cast<double>(st.count);
            break;
          case AggFn::min:
            require_nonempty(st);
            out[g] = st.fmin;
            break;
          case AggFn::max:
            require_nonempty(st);
            out[g] = st.fmax;
            break;
          default: break;
        }
      }
      out_cols.push_back(Column::of_floats(std::move(out)));
    }
    attrs.push_back({spec.output_name, out_kind});
  }

  return Relation(Schema(std::move(attrs)), std::move(out_cols), n_groups);
}

}  // namespace rma
